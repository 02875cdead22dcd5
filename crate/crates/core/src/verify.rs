//! Runs every finitely checkable statement over the corpus.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::CorpusEntry;
use crate::dimension::{g_points, g_rank, split_check, Generation};
use crate::equations::{parse_system, product_check, sum_check, Presentation, SolveOptions};
use crate::error::{Error, Result};
use crate::galois::{extension_report, orbit_count};
use crate::ggroup::{extract_subgroup, intersect_carriers, DomainCouple, GGroup, ZeroDivisorMode};
use crate::group::{commutator_subgroup, subgroup_generated, Closure, Elem, ElementSet};
use crate::sheaf::{global_hom, scheme_morphism_from_hom, StructureSheaf};
use crate::spectrum::{induced_map, nil_homeo_check, SpecSpace};

/// Identifiers with a check, in report order.
pub const IN_SCOPE: &[&str] = &[
    "2.1", "2.2", "2.6", "2.7", "2.8", "3.1", "3.2", "3.3", "4.1", "4.2", "4.3", "4.4", "4.5", "4.6", "4.7", "cor4.1",
    "6.3", "7.2", "7.6", "8.1", "8.2", "8.4",
];

/// Recognised identifiers without a finite check.
pub const OUT_OF_SCOPE: &[&str] = &["2.3", "2.4", "2.5", "3.4", "6.1", "6.2", "7.1", "7.4", "7.5", "8.3"];

/// Identifiers of the disputed claims.
pub const DISPUTED: &[&str] = &["def2.2", "7.2"];

/// Ambient orders up to which the zero-divisor oracle is compared.
const ORACLE_MAX_ORDER: usize = 200;
/// Closed-set identities are checked exhaustively below this many normal subgroups.
const MAX_NORMALS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    PaperClaimDisputed,
    SkippedOutOfScope,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropResult {
    pub id: String,
    pub status: Status,
    /// Corpus entries (or tuples of entries) the check ran on.
    pub instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct DisputedClaim {
    pub id: String,
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub corpus: Vec<String>,
    pub results: Vec<PropResult>,
    pub disputed: Vec<DisputedClaim>,
    pub passed: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn disputed_count(&self) -> usize {
        self.disputed.iter().filter(|d| d.status == Status::PaperClaimDisputed).count()
    }
}

/// Number of instances checked, or a witness of failure.
type Outcome = std::result::Result<usize, String>;

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(witness)
}

/// Runs `f` on the applicable entries in parallel; the first failure in
/// corpus order is reported.
fn each<A, F>(corpus: &[CorpusEntry], applies: A, f: F) -> Outcome
where
    A: Fn(&CorpusEntry) -> bool + Sync,
    F: Fn(&CorpusEntry) -> Result<Option<String>> + Sync,
{
    let results: Vec<(&str, Result<Option<String>>)> =
        corpus.par_iter().filter(|e| applies(e)).map(|e| (e.name.as_str(), f(e))).collect();
    let n = results.len();
    for (name, r) in results {
        match r {
            Ok(None) => {}
            Ok(Some(w)) => return Err(format!("{name}: {w}")),
            Err(e) => return Err(format!("{name}: {e}")),
        }
    }
    Ok(n)
}

fn all(_: &CorpusEntry) -> bool {
    true
}

fn space(gg: &Arc<GGroup>) -> Result<SpecSpace> {
    SpecSpace::new(gg.clone())
}

/// `M` (containing `φ(G)`) as a G-group in its own right.
fn subgroup_ggroup(gg: &GGroup, m: &ElementSet) -> Result<GGroup> {
    let h = gg.ambient();
    let (group, members) = extract_subgroup(h, m, format!("{}<{}>", h.name(), m.len()))?;
    let emb = gg
        .embedding()
        .iter()
        .map(|y| members.binary_search(y).map_err(|_| Error::Precondition("M does not contain G".into())))
        .collect::<Result<Vec<_>>>()?;
    GGroup::new(format!("{}<{}>", gg.label(), m.len()), gg.base().clone(), Arc::new(group), emb)
}

/// The distinct subgroups `⟨φ(G), x⟩`.
fn overgroups(gg: &GGroup) -> Vec<ElementSet> {
    let h = gg.ambient();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in h.elements() {
        let mut seed = gg.g_generators().to_vec();
        seed.push(x);
        let m = subgroup_generated(h, &seed, Closure::Subgroup);
        if seen.insert(m.elements()) {
            out.push(m);
        }
    }
    out
}

fn normalizer(gg: &GGroup, c: &ElementSet) -> ElementSet {
    let h = gg.ambient();
    let members: Vec<Elem> = h.elements().filter(|&x| c.iter().all(|y| c.contains(h.conj(x, y)))).collect();
    ElementSet::from_elements(h, members).expect("in range")
}

fn check_2_1(corpus: &[CorpusEntry]) -> Outcome {
    each(
        corpus,
        |e| e.ggroup.ambient().order() <= ORACLE_MAX_ORDER,
        |e| {
            let fast = e.ggroup.zero_divisors(ZeroDivisorMode::Fast);
            let oracle = e.ggroup.zero_divisors(ZeroDivisorMode::Oracle);
            Ok(ensure(fast == oracle, || format!("fast {:?} vs oracle {:?}", fast.elements(), oracle.elements())))
        },
    )
}

fn solvable_nontrivial(e: &CorpusEntry) -> bool {
    e.tags.solvable && !e.tags.trivial_g
}

fn check_2_2(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, solvable_nontrivial, |e| {
        let zd = e.ggroup.zero_divisors(ZeroDivisorMode::Fast);
        Ok(ensure(!zd.intersection(e.ggroup.gsub()).is_trivial(), || "no zero divisor inside G".into()))
    })
}

fn check_2_6(corpus: &[CorpusEntry]) -> Outcome {
    each(
        corpus,
        |e| e.ggroup.gsub_is_normal(),
        |e| {
            let gg = &e.ggroup;
            let g = gg.gsub().clone().certify();
            for i in gg.ideals()? {
                let c = commutator_subgroup(gg.ambient(), &i.carrier, &g)?;
                if !c.is_trivial() {
                    return Ok(Some(format!("[I,G] has order {} for an ideal of order {}", c.len(), i.carrier.len())));
                }
            }
            Ok(None)
        },
    )
}

fn check_2_7(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, all, |e| {
        let gg = &e.ggroup;
        let nil = gg.nil_subgroup();
        let com = gg.com_subgroup();
        for p in gg.spec()? {
            if !nil.is_subset(&p.carrier) {
                return Ok(Some(format!("Nil of order {} not inside a prime of order {}", nil.len(), p.carrier.len())));
            }
            if !com.is_subset(&p.carrier) {
                return Ok(Some(format!("Com of order {} not inside a prime", com.len())));
            }
            // G(n)(x) ⊆ P forces x ∈ P: H/P has no nontrivial nilpotents
            if !p.quotient.ggroup.nil_subgroup().is_trivial() {
                return Ok(Some(format!("quotient by the prime of order {} has nilpotents", p.carrier.len())));
            }
            if !p.revalidate(gg) {
                return Ok(Some("cached prime fails revalidation".into()));
            }
        }
        Ok(None)
    })
}

fn check_2_8(corpus: &[CorpusEntry]) -> Outcome {
    each(
        corpus,
        |e| e.tags.simple,
        |e| {
            let gg = &e.ggroup;
            for n in gg.normal_subgroups()? {
                let meet = n.intersection(gg.gsub());
                if !meet.is_trivial() && !gg.gsub().is_subset(n) {
                    return Ok(Some(format!(
                        "normal subgroup of order {} meets G in {} elements",
                        n.len(),
                        meet.len()
                    )));
                }
            }
            Ok(None)
        },
    )
}

fn small_lattice(e: &CorpusEntry) -> bool {
    e.ggroup.normal_subgroups().map(|n| n.len() <= MAX_NORMALS).unwrap_or(false)
}

fn check_3_1(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, small_lattice, |e| {
        let s = space(&e.ggroup)?;
        let h = e.ggroup.ambient();
        let normals = e.ggroup.normal_subgroups()?;
        for i in normals {
            let vi = s.v_of(i)?.members;
            for j in normals {
                let vj = s.v_of(j)?.members;
                let vij = s.v_of(&commutator_subgroup(h, i, j)?)?.members;
                let mut union = vi.clone();
                union.union_with(&vj);
                if vij != union {
                    return Ok(Some(format!("V([I,J]) differs from V(I)∪V(J) for orders {}, {}", i.len(), j.len())));
                }
                let join = subgroup_generated(h, &i.union(j).elements(), Closure::Normal);
                let mut meet = vi.clone();
                meet.intersect_with(&vj);
                if s.v_of(&join)?.members != meet {
                    return Ok(Some(format!("V(<I∪J>) differs from V(I)∩V(J) for orders {}, {}", i.len(), j.len())));
                }
            }
        }
        // the whole family at once
        let all: Vec<Elem> = normals.iter().flat_map(|n| n.elements()).collect();
        let join = subgroup_generated(h, &all, Closure::Normal);
        let mut meet = s.full_set();
        for n in normals {
            meet.intersect_with(&s.v_of(n)?.members);
        }
        Ok(ensure(s.v_of(&join)?.members == meet, || "family intersection differs".into()))
    })
}

fn check_3_2(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, all, |e| {
        let s = space(&e.ggroup)?;
        for i in e.ggroup.ideals()? {
            if i.carrier.is_whole() {
                continue;
            }
            let q = e.ggroup.quotient(&i.carrier)?;
            let qs = space(&q.ggroup)?;
            let map = induced_map(&q.projection, &s, &qs)?;
            let v = s.v_of(&i.carrier)?.members;
            if map.iter().any(|&p| !v.contains(p)) {
                return Ok(Some(format!("a preimage under H → H/I (|I| = {}) misses I", i.carrier.len())));
            }
            if map.len() != v.count_ones(..) {
                return Ok(Some("Spec(H/I) is not in bijection with V(I)".into()));
            }
        }
        Ok(None)
    })
}

fn domain_quotients(gg: &GGroup) -> Result<Vec<Arc<GGroup>>> {
    Ok(gg.spec()?.iter().map(|p| p.quotient.ggroup.clone()).collect())
}

fn check_3_3(corpus: &[CorpusEntry]) -> Outcome {
    let singles = each(corpus, all, |e| {
        let gg = &e.ggroup;
        let couple = gg.primes_with(&DomainCouple)?;
        if couple.len() != gg.spec()?.len() || couple.iter().zip(gg.spec()?).any(|(a, b)| a != b) {
            return Ok(Some("primes of the domain couple differ from the spectrum".into()));
        }
        let mut domains = domain_quotients(gg)?;
        if e.tags.domain {
            domains.push(gg.clone());
        }
        for d in &domains {
            // T1: G-subgroups of domains are domains
            for m in overgroups(d) {
                if !subgroup_ggroup(d, &m)?.is_g_domain() {
                    return Ok(Some(format!(
                        "subgroup of order {} of the domain {} is not a domain",
                        m.len(),
                        d.label()
                    )));
                }
            }
            // T2: commuting normal subgroups of a domain
            let normals = d.normal_subgroups()?;
            for i in normals.iter().filter(|n| !n.is_trivial()) {
                for j in normals.iter().filter(|n| !n.is_trivial()) {
                    if commutator_subgroup(d.ambient(), i, j)?.is_trivial() {
                        return Ok(Some(format!("{} has commuting nontrivial normal subgroups", d.label())));
                    }
                }
            }
        }
        // T3 along projections
        for i in gg.ideals()? {
            if i.carrier.is_whole() {
                continue;
            }
            let q = gg.quotient(&i.carrier)?;
            for j in q.ggroup.ideals()? {
                if !gg.is_ideal(&q.projection.preimage(&j.carrier).certify()) {
                    return Ok(Some("preimage of an ideal along a projection is not an ideal".into()));
                }
            }
        }
        Ok(None)
    })?;
    // T3 along all G-homomorphisms between small entries
    let pairs: Vec<(&CorpusEntry, &CorpusEntry)> = corpus
        .iter()
        .flat_map(|a| corpus.iter().map(move |b| (a, b)))
        .filter(|(a, b)| {
            let cap = if a.tags.trivial_g { 24 } else { 168 };
            a.ggroup.shares_base(&b.ggroup) && a.ggroup.ambient().order() <= cap && b.ggroup.ambient().order() <= cap
        })
        .collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(a, b)| {
            let run = || -> Result<Option<String>> {
                let ideals = b.ggroup.ideals()?;
                for u in a.ggroup.hom_g_set(&b.ggroup)? {
                    for j in &ideals {
                        if !a.ggroup.is_ideal(&u.preimage(&j.carrier).certify()) {
                            return Ok(Some("preimage of an ideal is not an ideal".into()));
                        }
                    }
                }
                Ok(None)
            };
            match run() {
                Ok(None) => None,
                Ok(Some(w)) => Some(format!("{} → {}: {w}", a.name, b.name)),
                Err(err) => Some(format!("{} → {}: {err}", a.name, b.name)),
            }
        })
        .collect();
    match failures.into_iter().next() {
        Some(w) => Err(w),
        None => Ok(singles + pairs.len()),
    }
}

fn check_4_1(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, small_lattice, |e| {
        let s = space(&e.ggroup)?;
        let h = e.ggroup.ambient();
        let normals = e.ggroup.normal_subgroups()?;
        for i in normals {
            for j in normals {
                let c = commutator_subgroup(h, i, j)?;
                let meet = i.intersection(j).certify();
                if s.v_of(&c)?.members != s.v_of(&meet)?.members {
                    return Ok(Some(format!("V([I,J]) ≠ V(I∩J) for orders {}, {}", i.len(), j.len())));
                }
            }
        }
        Ok(None)
    })
}

fn check_4_2(corpus: &[CorpusEntry]) -> Outcome {
    each(
        corpus,
        |e| solvable_nontrivial(e) || e.tags.trivial_g,
        |e| {
            let n = e.ggroup.spec()?.len();
            Ok(ensure(n == 0, || format!("spectrum has {n} points")))
        },
    )
}

fn trivial_radical(e: &CorpusEntry) -> bool {
    e.ggroup.spec().map(|s| !s.is_empty()).unwrap_or(false)
        && e.ggroup.radical().map(|r| r.is_trivial()).unwrap_or(false)
}

fn sheaf_of(gg: &Arc<GGroup>) -> Result<StructureSheaf> {
    StructureSheaf::new(Arc::new(space(gg)?))
}

fn check_4_3(corpus: &[CorpusEntry]) -> Outcome {
    let sheaves = each(
        corpus,
        |e| e.ggroup.spec().map(|s| !s.is_empty() && s.len() <= 4).unwrap_or(false),
        |e| {
            let sh = sheaf_of(&e.ggroup)?;
            if !sh.check_functoriality()? {
                return Ok(Some("presheaf restrictions do not compose".into()));
            }
            if !sh.check_stalk_consistency()? {
                return Ok(Some("stalks disagree with the presheaf".into()));
            }
            let ax = sh.check_sheaf_axioms()?;
            if !(ax.locality && ax.gluing) {
                return Ok(Some(format!("sheaf axioms fail: locality {}, gluing {}", ax.locality, ax.gluing)));
            }
            let s = sh.space();
            for p in 0..s.len() {
                if s.minimal_open(p).count_ones(..) == 1 {
                    let expected = e.ggroup.ambient().order() / s.points()[p].carrier.len();
                    if sh.stalk(p).order() != expected {
                        return Ok(Some(format!("stalk at point {p} has order {}", sh.stalk(p).order())));
                    }
                }
            }
            Ok(None)
        },
    )?;
    let eligible: Vec<&CorpusEntry> = corpus.iter().filter(|e| trivial_radical(e)).collect();
    let pairs: Vec<(&CorpusEntry, &CorpusEntry)> = eligible
        .iter()
        .flat_map(|a| eligible.iter().map(move |b| (*a, *b)))
        .filter(|(a, b)| a.ggroup.shares_base(&b.ggroup))
        .collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(l, h)| {
            let run = || -> Result<Option<String>> {
                let (ls, hs) = (sheaf_of(&l.ggroup)?, sheaf_of(&h.ggroup)?);
                let homs = l.ggroup.hom_g_set(&h.ggroup)?;
                let mut morphisms = Vec::with_capacity(homs.len());
                for u in &homs {
                    let m = scheme_morphism_from_hom(u, &ls, &hs)?;
                    if global_hom(&m, &ls, &hs)?.map() != u.map() {
                        return Ok(Some("round trip does not return the homomorphism".into()));
                    }
                    if !morphisms.contains(&m) {
                        morphisms.push(m);
                    }
                }
                Ok(ensure(morphisms.len() == homs.len(), || {
                    format!("{} morphisms for {} homomorphisms", morphisms.len(), homs.len())
                }))
            };
            match run() {
                Ok(None) => None,
                Ok(Some(w)) => Some(format!("{} → {}: {w}", l.name, h.name)),
                Err(err) => Some(format!("{} → {}: {err}", l.name, h.name)),
            }
        })
        .collect();
    match failures.into_iter().next() {
        Some(w) => Err(w),
        None => Ok(sheaves + pairs.len()),
    }
}

fn check_4_4(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, all, |e| {
        let r = nil_homeo_check(&e.ggroup)?;
        Ok(ensure(r.passed, || {
            format!("bijective {}, continuous {}, closed {}", r.bijective, r.continuous, r.closed_map)
        }))
    })
}

fn check_4_5(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, all, |e| {
        let gg = &e.ggroup;
        let mut pairs = vec![("X1^2 = 1;".to_string(), "X1^3 = 1;".to_string())];
        if let Some(&c) = gg.g_generators().iter().find(|&&c| c != 0) {
            pairs.push(("X1^2 = 1;".into(), format!("let c = {c}; X1 c = c X1;")));
        }
        for (p, q) in pairs {
            let p = Presentation::from(&parse_system(&p, gg)?);
            let q = Presentation::from(&parse_system(&q, gg)?);
            let r = product_check(&p, &q, gg, SolveOptions::for_target(gg))?;
            if !(r.bijective && r.product == r.left * r.right) {
                return Ok(Some(format!("{} ≠ {}·{}", r.product, r.left, r.right)));
            }
        }
        Ok(None)
    })
}

fn check_4_6(corpus: &[CorpusEntry]) -> Outcome {
    let find = |name: &str| corpus.iter().find(|e| e.name == name);
    let triples: Vec<[&CorpusEntry; 3]> = [
        ["Z2/1", "Z2/1", "Z2/1"],
        ["Z4/1", "Z2/1", "Z4/1"],
        ["S3/1", "S3/1", "Z2/1"],
        ["S3/1", "S3/1", "S3/1"],
        ["Q8/1", "Z4/1", "D4/1"],
        ["S3/S3", "S3/S3", "S3/S3"],
        ["A5/A5", "A5/A5", "S5/A5"],
        ["S5/A5", "A5xZ2/A5", "A5/A5"],
    ]
    .iter()
    .filter_map(|t| Some([find(t[0])?, find(t[1])?, find(t[2])?]))
    .collect();
    let failures: Vec<String> = triples
        .par_iter()
        .filter_map(|[l, h, k]| match sum_check(&l.ggroup, &h.ggroup, &k.ggroup) {
            Ok(r) if r.bijective && r.into_product == r.into_left * r.into_right => None,
            Ok(r) => Some(format!(
                "{}, {}, {}: {} ≠ {}·{}",
                l.name, h.name, k.name, r.into_product, r.into_left, r.into_right
            )),
            Err(err) => Some(format!("{}, {}, {}: {err}", l.name, h.name, k.name)),
        })
        .collect();
    match failures.into_iter().next() {
        Some(w) => Err(w),
        None => Ok(triples.len()),
    }
}

fn check_4_7(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, all, |e| {
        let s = space(&e.ggroup)?;
        for n in e.ggroup.normal_subgroups()? {
            if !s.is_radical_ideal(n)? {
                continue;
            }
            let v = s.v_of(n)?.members;
            let prime = s.point_of(n).is_some();
            if s.is_irreducible(&v) != prime {
                return Ok(Some(format!("radical of order {}: irreducible {} but prime {prime}", n.len(), !prime)));
            }
        }
        for p in s.points() {
            if !s.is_irreducible(&s.v_of(&p.carrier)?.members) {
                return Ok(Some(format!("V(P) reducible for the prime of order {}", p.carrier.len())));
            }
        }
        Ok(None)
    })
}

fn check_cor_4_1(corpus: &[CorpusEntry]) -> Outcome {
    each(
        corpus,
        |e| e.ggroup.spec().map(|s| !s.is_empty()).unwrap_or(false),
        |e| {
            let s = space(&e.ggroup)?;
            let rad = e.ggroup.radical()?;
            let irreducible = s.is_irreducible_space();
            let prime = s.point_of(&rad).is_some();
            Ok(ensure(irreducible == prime, || format!("irreducible {irreducible}, radical prime {prime}")))
        },
    )
}

fn check_6_3(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, all, |e| {
        let gg = &e.ggroup;
        let s = space(gg)?;
        let rad = gg.radical()?;
        let h = gg.ambient();
        if rad != intersect_carriers(h, gg.spec()?.iter().map(|p| &p.carrier)) {
            return Ok(Some("radical is not the intersection of the primes".into()));
        }
        // the generic points of the components already suffice
        let mut generic = Vec::new();
        for c in s.irreducible_components() {
            generic.extend(s.generic_points(&c));
        }
        let meet = intersect_carriers(h, generic.iter().map(|&p| &s.points()[p].carrier));
        Ok(ensure(meet == rad, || format!("{} generic points do not cut out the radical", generic.len())))
    })
}

fn first_factor(e: &CorpusEntry) -> bool {
    e.name.ends_with("/first") && e.tags.simple
}

fn check_7_2(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, first_factor, |e| {
        let gg = &e.ggroup;
        let spec = gg.spec()?;
        let g = gg.base().order();
        let n = (1..).take_while(|k| g.pow(*k) <= gg.ambient().order()).last().unwrap_or(1) as usize;
        if spec.len() != 1 || spec[0].carrier != gg.com_subgroup() || spec[0].carrier.len() != g.pow(n as u32 - 1) {
            return Ok(Some(format!("spectrum has {} points", spec.len())));
        }
        let normal = g_rank(gg, Generation::Normal, gg.limits().rank_cap)?;
        Ok(ensure(normal.rank == n - 1, || format!("normal-closure rank {} ≠ {}", normal.rank, n - 1)))
    })
}

fn check_7_6(corpus: &[CorpusEntry]) -> Outcome {
    each(
        corpus,
        |e| e.ggroup.gsub_is_normal(),
        |e| {
            let gg = &e.ggroup;
            for i in g_points(gg)? {
                let r = split_check(gg, &gg.spec()?[i].carrier)?;
                if !r.passed {
                    return Ok(Some(format!(
                        "G-point {i}: commute {}, product {}, meet {}",
                        r.commute, r.product_is_whole, r.trivial_meet
                    )));
                }
            }
            Ok(None)
        },
    )
}

fn check_8_1(corpus: &[CorpusEntry]) -> Outcome {
    each(
        corpus,
        |e| e.tags.trivial_g,
        |e| {
            let r = extension_report(&e.ggroup)?;
            let finite_orders = r.witnesses.iter().all(|(_, w)| !w.contains('g'));
            Ok(ensure(r.algebraic && finite_orders && r.orbit_count == r.ambient_order, || {
                format!("algebraic {}, orbits {}", r.algebraic, r.orbit_count)
            }))
        },
    )
}

fn check_8_2(corpus: &[CorpusEntry]) -> Outcome {
    each(corpus, all, |e| {
        let r = extension_report(&e.ggroup)?;
        Ok(ensure(r.algebraic && r.orbit_count * r.g_order == r.ambient_order, || {
            format!("algebraic {}, orbits {}", r.algebraic, r.orbit_count)
        }))
    })
}

fn check_8_4(corpus: &[CorpusEntry]) -> Outcome {
    each(
        corpus,
        |e| e.ggroup.ambient().order() <= 168,
        |e| {
            let gg = &e.ggroup;
            let h = gg.ambient();
            let whole = orbit_count(gg);
            for m in overgroups(gg) {
                let upper = orbit_count(&GGroup::from_subgroup("K/H", h, &m)?);
                let lower = orbit_count(&subgroup_ggroup(gg, &m)?);
                if upper * lower != whole {
                    return Ok(Some(format!("tower through order {}: {upper}·{lower} ≠ {whole}", m.len())));
                }
            }
            Ok(None)
        },
    )
}

type CheckFn = fn(&[CorpusEntry]) -> Outcome;

const CHECKS: &[(&str, CheckFn)] = &[
    ("2.1", check_2_1),
    ("2.2", check_2_2),
    ("2.6", check_2_6),
    ("2.7", check_2_7),
    ("2.8", check_2_8),
    ("3.1", check_3_1),
    ("3.2", check_3_2),
    ("3.3", check_3_3),
    ("4.1", check_4_1),
    ("4.2", check_4_2),
    ("4.3", check_4_3),
    ("4.4", check_4_4),
    ("4.5", check_4_5),
    ("4.6", check_4_6),
    ("4.7", check_4_7),
    ("cor4.1", check_cor_4_1),
    ("6.3", check_6_3),
    ("7.2", check_7_2),
    ("7.6", check_7_6),
    ("8.1", check_8_1),
    ("8.2", check_8_2),
    ("8.4", check_8_4),
];

fn normalizer_claim(corpus: &[CorpusEntry]) -> DisputedClaim {
    let mut witness = None;
    for e in corpus {
        let gg = &e.ggroup;
        let Ok(spec) = gg.spec() else { continue };
        let n = normalizer(gg, &gg.com_subgroup());
        if let Some(p) = spec.iter().find(|p| !n.is_subset(&p.carrier)) {
            witness = Some(format!(
                "{}: N(Com_H(G)) has order {} but the prime of order {} does not contain it",
                e.name,
                n.len(),
                p.carrier.len()
            ));
            break;
        }
    }
    DisputedClaim {
        id: "def2.2".into(),
        claim: "the normalizer of Com_H(G) lies in every prime".into(),
        status: if witness.is_some() { Status::PaperClaimDisputed } else { Status::Pass },
        witness,
    }
}

fn plain_rank_claim(corpus: &[CorpusEntry]) -> DisputedClaim {
    let mut witness = None;
    for e in corpus.iter().filter(|e| first_factor(e)) {
        let gg = &e.ggroup;
        match g_rank(gg, Generation::Plain, gg.limits().rank_cap) {
            Ok(r) if r.rank != 1 => {
                witness = Some(format!("{}: plain G-rank {} with witness {:?}, claimed 1", e.name, r.rank, r.witness));
                break;
            }
            Ok(_) => {}
            Err(err) => {
                witness = Some(format!("{}: {err}", e.name));
                break;
            }
        }
    }
    DisputedClaim {
        id: "7.2".into(),
        claim: "G^2 over its first factor has plain G-rank 1".into(),
        status: if witness.is_some() { Status::PaperClaimDisputed } else { Status::Pass },
        witness,
    }
}

/// Parses a comma-separated identifier list; unknown identifiers are errors.
pub fn parse_filter(list: &str) -> Result<Vec<String>> {
    let ids: Vec<String> = list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    for id in &ids {
        let known =
            IN_SCOPE.contains(&id.as_str()) || OUT_OF_SCOPE.contains(&id.as_str()) || DISPUTED.contains(&id.as_str());
        if !known {
            return Err(Error::Input(format!("unknown proposition `{id}`")));
        }
    }
    Ok(ids)
}

/// Runs the selected checks (all in-scope ones when `filter` is `None`).
pub fn verify_suite(corpus: &[CorpusEntry], filter: Option<&[String]>) -> Result<VerificationReport> {
    let start = Instant::now();
    let wanted = |id: &str| filter.is_none_or(|f| f.iter().any(|x| x == id));
    if let Some(f) = filter {
        parse_filter(&f.join(","))?;
    }
    let mut results: Vec<PropResult> = CHECKS
        .par_iter()
        .filter(|(id, _)| wanted(id))
        .map(|(id, check)| {
            let t = Instant::now();
            let outcome = check(corpus);
            let (status, instances, witness) = match outcome {
                Ok(n) => (Status::Pass, n, None),
                Err(w) => (Status::Fail, 0, Some(w)),
            };
            PropResult { id: id.to_string(), status, instances, witness, elapsed: t.elapsed() }
        })
        .collect();
    for id in OUT_OF_SCOPE.iter().filter(|id| filter.is_some() && wanted(id)) {
        results.push(PropResult {
            id: id.to_string(),
            status: Status::SkippedOutOfScope,
            instances: 0,
            witness: None,
            elapsed: Duration::ZERO,
        });
    }
    let rank = |id: &str| IN_SCOPE.iter().chain(OUT_OF_SCOPE).position(|x| *x == id).unwrap_or(usize::MAX);
    results.sort_by_key(|r| rank(&r.id));
    let mut disputed = Vec::new();
    if wanted("def2.2") {
        disputed.push(normalizer_claim(corpus));
    }
    if wanted("7.2") {
        disputed.push(plain_rank_claim(corpus));
    }
    let passed = results.iter().all(|r| r.status != Status::Fail);
    Ok(VerificationReport {
        corpus: corpus.iter().map(|e| e.name.clone()).collect(),
        results,
        disputed,
        passed,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;

    fn small() -> Vec<CorpusEntry> {
        ["S3/S3", "S3/Z2", "A5/A5", "S5/A5", "A5xZ2/A5", "Z4/1"].iter().map(|n| builtin(n).unwrap()).collect()
    }

    #[test]
    fn small_corpus_passes() {
        let report = verify_suite(&small(), None).unwrap();
        for r in &report.results {
            assert_eq!(r.status, Status::Pass, "{} {:?}", r.id, r.witness);
        }
        assert_eq!(report.results.len(), IN_SCOPE.len());
        let claim = &report.disputed[0];
        assert_eq!(claim.status, Status::PaperClaimDisputed);
        assert!(claim.witness.as_deref().unwrap().starts_with("A5/A5"));
    }

    #[test]
    fn filters() {
        let corpus = small();
        let f = parse_filter("2.5, 3.1").unwrap();
        let report = verify_suite(&corpus, Some(&f)).unwrap();
        let ids: Vec<(&str, Status)> = report.results.iter().map(|r| (r.id.as_str(), r.status)).collect();
        assert_eq!(ids, vec![("3.1", Status::Pass), ("2.5", Status::SkippedOutOfScope)]);
        assert!(report.disputed.is_empty());
        assert!(parse_filter("9.9").is_err());
    }
}
