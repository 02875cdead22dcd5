//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gspec::corpus::{builtin, default_corpus, CorpusEntry};
use gspec::dimension::{dimension, g_points, g_rank, split_check, Generation};
use gspec::equations::{noetherian_reduce, parse_system, product_check, solve, sum_check, Presentation, SolveOptions};
use gspec::galois::{algebraic_witness, galois_group, orbit_count, DEFAULT_WITNESS_LENGTH};
use gspec::group::{commutator_subgroup, is_simple, subgroup_generated, Closure, ElementSet, FiniteGroup};
use gspec::sheaf::{global_hom, scheme_morphism_from_hom, StructureSheaf};
use gspec::verify::{verify_suite, Status};
use gspec::{nil_homeo_check, GGroup, PointSet, SpecSpace, ZeroDivisorMode};
use serde_json::Value;

const ZERO_DIVISOR_LIMIT: Duration = Duration::from_secs(10);
const TOPOLOGY_LIMIT: Duration = Duration::from_secs(30);
const VERIFY_LIMIT: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn corpus() -> Vec<CorpusEntry> {
    default_corpus().unwrap()
}

fn space(gg: &Arc<GGroup>) -> SpecSpace {
    SpecSpace::new(gg.clone()).unwrap()
}

fn set_of(s: &ElementSet) -> common::Set {
    s.iter().collect()
}

fn zero_divisor_equivalence() -> Outcome {
    let entries: Vec<CorpusEntry> = corpus().into_iter().filter(|e| e.ggroup.ambient().order() <= 200).collect();
    let start = Instant::now();
    for e in &entries {
        let fast = e.ggroup.zero_divisors(ZeroDivisorMode::Fast);
        let oracle = e.ggroup.zero_divisors(ZeroDivisorMode::Oracle);
        ensure(fast == oracle, || format!("{}: modes disagree", e.name))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ZERO_DIVISOR_LIMIT, || format!("took {elapsed:.2?}"))?;
    // and both against the definition
    for e in &entries {
        let lib = set_of(&e.ggroup.zero_divisors(ZeroDivisorMode::Fast));
        ensure(lib == common::zero_divisors(&e.ggroup), || format!("{}: differs from the definition", e.name))?;
    }
    Ok(format!("{} entries agree in {elapsed:.2?}", entries.len()))
}

fn empty_spectra() -> Outcome {
    let mut n = 0;
    for e in corpus() {
        let g = e.ggroup.base();
        if e.tags.trivial_g || (g.order() > 1 && gspec::group::is_solvable(g)) {
            let k = e.ggroup.spec().unwrap().len();
            ensure(k == 0, || format!("{}: {k} primes", e.name))?;
            n += 1;
        }
    }
    Ok(format!("{n} entries with empty spectra"))
}

fn s5_over_a5() -> Outcome {
    let gg = builtin("S5/A5").unwrap().ggroup;
    let ideals = gg.ideals().unwrap();
    ensure(ideals.len() == 1 && ideals[0].carrier.is_trivial(), || format!("{} ideals", ideals.len()))?;
    ensure(gg.is_g_simple().unwrap(), || "not G-simple".into())?;
    ensure(!is_simple(gg.ambient()), || "S5 reported simple".into())?;
    let spec: Vec<common::Set> = gg.spec().unwrap().iter().map(|p| set_of(&p.carrier)).collect();
    let one: common::Set = [0].into();
    ensure(spec == [one.clone()], || format!("spectrum {spec:?}"))?;
    ensure(common::spec(&gg) == [one], || "definition gives another spectrum".into())?;
    Ok("ideals {1}, G-simple, S5 not simple, Spec = {1}".into())
}

fn a5_squared_first_factor() -> Outcome {
    let gg = builtin("A5xA5/first").unwrap().ggroup;
    let second: common::Set = (0..60).collect();
    let spec = gg.spec().unwrap();
    ensure(spec.len() == 1 && set_of(&spec[0].carrier) == second, || format!("{} primes", spec.len()))?;
    ensure(set_of(&gg.radical().unwrap()) == second, || "radical is not 1×A5".into())?;
    let cap = gg.limits().rank_cap;
    for mode in [Generation::Plain, Generation::Normal] {
        let d = dimension(&gg, mode, cap).unwrap().value();
        ensure(d == Some(0), || format!("{mode:?} dimension {d:?}"))?;
    }
    ensure(g_points(&gg).unwrap() == [0], || "1×A5 is not a G-point".into())?;
    let split = split_check(&gg, &spec[0].carrier).unwrap();
    ensure(split.passed, || format!("{split:?}"))?;
    let plain = g_rank(&gg, Generation::Plain, cap).unwrap().rank;
    let normal = g_rank(&gg, Generation::Normal, cap).unwrap().rank;
    ensure(plain == 2 && normal == 1, || format!("ranks {plain}/{normal}"))?;
    let entries: Vec<CorpusEntry> = corpus().into_iter().filter(|e| e.name == "A5xA5/first").collect();
    let report = verify_suite(&entries, Some(&["7.2".to_string()])).unwrap();
    ensure(report.results.iter().all(|r| r.status == Status::Pass), || "7.2 check failed".into())?;
    let flagged = report.disputed.iter().any(|d| d.id == "7.2" && d.status == Status::PaperClaimDisputed);
    ensure(flagged, || "rank discrepancy not flagged".into())?;
    Ok("Spec = Rad = {1×A5}, dim 0, G-point splits, ranks 2/1, discrepancy disputed".into())
}

fn topology_identities() -> Outcome {
    let start = Instant::now();
    let (mut entries, mut pairs) = (0, 0);
    for e in corpus() {
        let gg = &e.ggroup;
        let h = gg.ambient();
        let normals = gg.normal_subgroups().unwrap();
        if normals.len() > 64 {
            continue;
        }
        entries += 1;
        let primes: Vec<&ElementSet> = gg.spec().unwrap().iter().map(|p| &p.carrier).collect();
        let v = |n: &ElementSet| -> BTreeSet<usize> { (0..primes.len()).filter(|&i| n.is_subset(primes[i])).collect() };
        for i in normals {
            for j in normals {
                pairs += 1;
                let (vi, vj) = (v(i), v(j));
                let union: BTreeSet<usize> = vi.union(&vj).copied().collect();
                let inter: BTreeSet<usize> = vi.intersection(&vj).copied().collect();
                let bracket = commutator_subgroup(h, i, j).unwrap();
                let join = subgroup_generated(h, &i.union(j).elements(), Closure::Normal);
                let meet = i.intersection(j);
                ensure(v(&bracket) == union, || format!("{}: V([I,J]) ≠ V(I)∪V(J)", e.name))?;
                ensure(v(&join) == inter, || format!("{}: V(<I∪J>) ≠ V(I)∩V(J)", e.name))?;
                ensure(v(&meet) == v(&bracket), || format!("{}: V([I,J]) ≠ V(I∩J)", e.name))?;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < TOPOLOGY_LIMIT, || format!("took {elapsed:.2?}"))?;
    Ok(format!("{pairs} pairs over {entries} entries in {elapsed:.2?}"))
}

/// Irreducibility by brute force over the closed sets of the space.
fn irreducible(closed: &[PointSet], c: &PointSet) -> bool {
    let proper: Vec<&PointSet> = closed.iter().filter(|d| d.is_subset(c) && *d != c).collect();
    !c.is_clear()
        && !proper.iter().any(|a| {
            proper.iter().any(|b| {
                let mut u = (*a).clone();
                u.union_with(b);
                &u == c
            })
        })
}

fn irreducibility() -> Outcome {
    let mut radicals = 0;
    for e in corpus() {
        let s = space(&e.ggroup);
        let closed: Vec<PointSet> = s.closed_sets().iter().map(|c| c.members.clone()).collect();
        for n in e.ggroup.normal_subgroups().unwrap() {
            if !s.is_radical_ideal(n).unwrap() {
                continue;
            }
            radicals += 1;
            let vn = s.v_of(n).unwrap().members;
            let prime = s.point_of(n).is_some();
            ensure(irreducible(&closed, &vn) == prime, || format!("{}: radical of order {}", e.name, n.len()))?;
            ensure(s.is_irreducible(&vn) == prime, || format!("{}: library disagrees", e.name))?;
        }
    }
    let diag = builtin("A5xA5/diag").unwrap().ggroup;
    let s = space(&diag);
    let rad = diag.radical().unwrap();
    ensure(s.len() == 2 && !s.is_irreducible_space(), || "diagonal spectrum is not reducible with 2 points".into())?;
    ensure(rad.is_trivial() && s.point_of(&rad).is_none(), || "diagonal radical is not a trivial non-prime".into())?;
    ensure(s.irreducible_components().len() == 2, || "diagonal components".into())?;
    Ok(format!("{radicals} radical ideals; diagonal: 2 points, reducible, trivial non-prime radical"))
}

fn nil_machinery() -> Outcome {
    let entries = corpus();
    for e in &entries {
        let nil = e.ggroup.nil_subgroup();
        for p in e.ggroup.spec().unwrap() {
            ensure(nil.is_subset(&p.carrier), || format!("{}: Nil outside a prime", e.name))?;
        }
        let r = nil_homeo_check(&e.ggroup).unwrap();
        ensure(r.passed, || format!("{}: {r:?}", e.name))?;
    }
    let gg = builtin("A5xZ2/A5").unwrap().ggroup;
    let z2: common::Set = [0, 1].into();
    ensure(set_of(gg.nil_subgroup()) == z2, || "Nil(A5×Z2) is not 1×Z2".into())?;
    let r = nil_homeo_check(&gg).unwrap();
    ensure(r.nil_order == 2 && r.points == 1, || format!("{r:?}"))?;
    Ok(format!("{} entries; Nil(A5×Z2) = 1×Z2", entries.len()))
}

fn sheaf() -> Outcome {
    let entries = corpus();
    let mut spaces = 0;
    for e in &entries {
        let n = e.ggroup.spec().unwrap().len();
        if n == 0 || n > 4 {
            continue;
        }
        spaces += 1;
        let sh = StructureSheaf::new(Arc::new(space(&e.ggroup))).unwrap();
        ensure(sh.check_functoriality().unwrap(), || format!("{}: functoriality", e.name))?;
        let ax = sh.check_sheaf_axioms().unwrap();
        ensure(ax.locality && ax.gluing, || format!("{}: {ax:?}", e.name))?;
        let s = sh.space();
        for p in 0..s.len() {
            if s.minimal_open(p).count_ones(..) == 1 {
                let quotient = e.ggroup.ambient().order() / s.points()[p].carrier.len();
                ensure(sh.stalk(p).order() == quotient, || format!("{}: stalk at {p}", e.name))?;
            }
        }
    }
    let eligible: Vec<&CorpusEntry> = entries
        .iter()
        .filter(|e| !e.ggroup.spec().unwrap().is_empty() && e.ggroup.radical().unwrap().is_trivial())
        .collect();
    let mut pairs = 0;
    for l in &eligible {
        for h in &eligible {
            if !l.ggroup.shares_base(&h.ggroup) {
                continue;
            }
            pairs += 1;
            let ls = StructureSheaf::new(Arc::new(space(&l.ggroup))).unwrap();
            let hs = StructureSheaf::new(Arc::new(space(&h.ggroup))).unwrap();
            let homs = l.ggroup.hom_g_set(&h.ggroup).unwrap();
            let mut morphisms = Vec::new();
            for u in &homs {
                let m = scheme_morphism_from_hom(u, &ls, &hs).unwrap();
                ensure(global_hom(&m, &ls, &hs).unwrap().map() == u.map(), || {
                    format!("{} → {}: round trip", l.name, h.name)
                })?;
                if !morphisms.contains(&m) {
                    morphisms.push(m);
                }
            }
            ensure(morphisms.len() == homs.len(), || format!("{} → {}: counts", l.name, h.name))?;
        }
    }
    Ok(format!("{spaces} spaces, {pairs} trivial-radical pairs"))
}

fn count_solutions(gg: &GGroup, text: &str) -> usize {
    let sys = parse_system(text, gg).unwrap();
    solve(&sys, gg, SolveOptions::for_target(gg)).unwrap().count
}

fn equations() -> Outcome {
    let entries = corpus();
    for e in &entries {
        let k = count_solutions(&e.ggroup, "X1^2 = 1; X1^3 = 1; X1 != 1;");
        ensure(k == 0, || format!("{}: {k} solutions of the inconsistent system", e.name))?;
    }
    let s3 = builtin("S3/1").unwrap().ggroup;
    let k = count_solutions(&s3, "X1^2 = 1;");
    ensure(k == 4, || format!("|V_S3(X1²)| = {k}"))?;

    let s5 = builtin("S5/A5").unwrap().ggroup;
    let h = s5.ambient();
    let squares = h.elements().filter(|&x| h.mul(x, x) == 0).count();
    let cubes = h.elements().filter(|&x| h.mul(h.mul(x, x), x) == 0).count();
    ensure(squares == 26 && cubes == 21, || format!("oracle gives {squares}, {cubes}"))?;
    let p = Presentation::from(&parse_system("X1^2 = 1;", &s5).unwrap());
    let q = Presentation::from(&parse_system("X1^3 = 1;", &s5).unwrap());
    let r = product_check(&p, &q, &s5, SolveOptions::for_target(&s5)).unwrap();
    ensure(r.bijective && (r.left, r.right, r.product) == (squares, cubes, squares * cubes), || format!("{r:?}"))?;

    let triples =
        [["Z2/1", "Z2/1", "Z2/1"], ["S3/1", "S3/1", "Z2/1"], ["Q8/1", "Z4/1", "D4/1"], ["S5/A5", "A5xZ2/A5", "A5/A5"]];
    for [l, a, b] in triples {
        let (l, a, b) = (builtin(l).unwrap().ggroup, builtin(a).unwrap().ggroup, builtin(b).unwrap().ggroup);
        let r = sum_check(&l, &a, &b).unwrap();
        ensure(r.bijective && r.into_product == r.into_left * r.into_right, || format!("{}: {r:?}", l.label()))?;
    }

    let sys = parse_system("X1^2 = 1; X1^4 = 1;", &s3).unwrap();
    let red = noetherian_reduce(&sys, &s3, s3.limits().solve_budget).unwrap();
    ensure(red.kept == [0], || format!("kept {:?}", red.kept))?;
    Ok(format!(
        "inconsistent system empty on {} entries; 26·21 = {}; sums biject; kept {{X1²}}",
        entries.len(),
        r.product
    ))
}

/// Automorphisms of `H` fixing `G` pointwise, by exhaustive search.
fn brute_galois_order(gg: &GGroup) -> usize {
    let g = common::gsub(gg);
    common::homs(gg.ambient(), gg.ambient())
        .into_iter()
        .filter(|m| m.iter().collect::<BTreeSet<_>>().len() == m.len())
        .filter(|m| g.iter().all(|&x| m[x] == x))
        .count()
}

/// `members` as a group of its own with the sub-tower base inside it.
fn sub_ggroup(h: &Arc<FiniteGroup>, members: &ElementSet, g: &ElementSet) -> GGroup {
    let members = members.elements();
    let idx = |x| members.binary_search(&x).unwrap();
    let rows: Vec<Vec<usize>> = members.iter().map(|&a| members.iter().map(|&b| idx(h.mul(a, b))).collect()).collect();
    let k = Arc::new(FiniteGroup::from_table("K", &rows).unwrap());
    let gens: Vec<usize> = gspec::group::generators_of(g).into_iter().map(idx).collect();
    GGroup::generated_by("K/G", &k, &gens).unwrap()
}

fn cosets(gg: &GGroup) -> usize {
    let h = gg.ambient();
    let g = common::gsub(gg);
    h.elements().map(|x| g.iter().map(|&a| h.mul(a, x)).collect::<BTreeSet<_>>()).collect::<BTreeSet<_>>().len()
}

fn galois() -> Outcome {
    for (name, expected) in [("S5/A5", 1), ("S3/1", 6), ("S3/S3", 1)] {
        let gg = builtin(name).unwrap().ggroup;
        let lib = galois_group(&gg).unwrap().group.order();
        let brute = brute_galois_order(&gg);
        ensure(lib == expected && brute == expected, || format!("{name}: library {lib}, search {brute}"))?;
    }

    let s5 = builtin("S5/A5").unwrap().ggroup;
    let h = s5.ambient();
    let one = ElementSet::trivial(h);
    let a5 = s5.gsub().clone();
    let whole = ElementSet::whole(h);
    let towers = [(&one, &a5), (&one, &one), (&a5, &a5), (&a5, &whole)];
    for (g, k) in towers {
        let top = GGroup::from_subgroup("S5/G", h, g).unwrap();
        let upper = GGroup::from_subgroup("S5/K", h, k).unwrap();
        let lower = sub_ggroup(h, k, g);
        let (t, u, l) = (orbit_count(&top), orbit_count(&upper), orbit_count(&lower));
        ensure((t, u, l) == (cosets(&top), cosets(&upper), cosets(&lower)), || {
            "orbit counts differ from cosets".into()
        })?;
        ensure(t == u * l, || format!("tower {}⊆{}: {t} ≠ {u}·{l}", g.len(), k.len()))?;
    }

    let entries = corpus();
    let mut elements = 0;
    for e in &entries {
        for x in e.ggroup.ambient().elements() {
            let w = algebraic_witness(&e.ggroup, x, DEFAULT_WITNESS_LENGTH).unwrap();
            ensure(w.has_variable() && w.evaluate(&e.ggroup, &[x]) == 0, || format!("{}: witness for {x}", e.name))?;
            elements += 1;
        }
    }
    Ok(format!("Galois orders 1/6/1 confirmed; 4 towers multiply; {elements} witnesses vanish"))
}

fn performance() -> Outcome {
    let start = Instant::now();
    let out =
        Command::new(env!("CARGO_BIN_EXE_gspec")).args(["--json", "verify"]).output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(0), || format!("exit {:?}", out.status.code()))?;
    ensure(elapsed < VERIFY_LIMIT, || format!("took {elapsed:.2?}"))?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let disputed = v["disputed"].as_array().map(|d| d.iter().filter(|c| c["status"] == "paper-claim-disputed").count());
    ensure(disputed == Some(2), || format!("disputed entries {disputed:?}"))?;
    Ok(format!("verify exit 0 in {elapsed:.2?} with 2 disputed claims"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("zero-divisor modes agree", zero_divisor_equivalence),
        ("empty spectra", empty_spectra),
        ("S5 over A5", s5_over_a5),
        ("A5×A5 over the first factor", a5_squared_first_factor),
        ("topology identities", topology_identities),
        ("irreducibility", irreducibility),
        ("Nil machinery", nil_machinery),
        ("structure sheaf", sheaf),
        ("equations", equations),
        ("Galois", galois),
        ("verify envelope", performance),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match &outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why} [{elapsed:.2?}]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
