//! The prime spectrum of a G-group with closed sets `V(N)`.

use std::fmt::Write as _;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ggroup::{intersect_carriers, GGroup, PrimeIdeal};
use crate::group::{ElementSet, GroupHom};

/// A subset of the points of a spectrum.
pub type PointSet = FixedBitSet;

/// A closed set together with a normal subgroup cutting it out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSet {
    pub members: PointSet,
    pub witness: ElementSet,
}

impl ClosedSet {
    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn points(&self) -> Vec<usize> {
        self.members.ones().collect()
    }
}

/// `Spec_G(H)` with its finite lattice of closed sets.
#[derive(Debug)]
pub struct SpecSpace {
    ggroup: Arc<GGroup>,
    points: Vec<PrimeIdeal>,
    closed: Vec<ClosedSet>,
}

impl SpecSpace {
    pub fn new(ggroup: Arc<GGroup>) -> Result<Self> {
        let points = ggroup.spec()?.to_vec();
        let mut space = Self { ggroup, points, closed: Vec::new() };
        let mut closed: Vec<ClosedSet> = Vec::new();
        for n in space.ggroup.normal_subgroups()? {
            let members = space.v_bits(n);
            if !closed.iter().any(|c| c.members == members) {
                closed.push(ClosedSet { members, witness: n.clone() });
            }
        }
        closed.sort_by(|a, b| point_set_cmp(&a.members, &b.members));
        space.closed = closed;
        space.check_lattice()?;
        Ok(space)
    }

    pub fn ggroup(&self) -> &Arc<GGroup> {
        &self.ggroup
    }

    pub fn points(&self) -> &[PrimeIdeal] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn empty_set(&self) -> PointSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> PointSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn singleton(&self, p: usize) -> PointSet {
        let mut s = self.empty_set();
        s.insert(p);
        s
    }

    /// Index of the point with the given carrier.
    pub fn point_of(&self, carrier: &ElementSet) -> Option<usize> {
        self.points.iter().position(|p| &p.carrier == carrier)
    }

    fn v_bits(&self, n: &ElementSet) -> PointSet {
        let mut bits = self.empty_set();
        for (i, p) in self.points.iter().enumerate() {
            if n.is_subset(&p.carrier) {
                bits.insert(i);
            }
        }
        bits
    }

    /// `V(N)`: the primes containing `N`.
    pub fn v_of(&self, n: &ElementSet) -> Result<ClosedSet> {
        n.require_normal()?;
        Ok(ClosedSet { members: self.v_bits(n), witness: n.clone() })
    }

    /// All closed sets, ordered by size and then by member list.
    pub fn closed_sets(&self) -> &[ClosedSet] {
        &self.closed
    }

    /// Complements of the closed sets.
    pub fn open_sets(&self) -> Vec<PointSet> {
        let mut opens: Vec<PointSet> = self.closed.iter().map(|c| self.complement(&c.members)).collect();
        opens.sort_by(point_set_cmp);
        opens
    }

    pub fn complement(&self, s: &PointSet) -> PointSet {
        let mut c = self.full_set();
        c.difference_with(s);
        c
    }

    pub fn is_closed(&self, s: &PointSet) -> bool {
        self.closed.iter().any(|c| &c.members == s)
    }

    pub fn is_open(&self, s: &PointSet) -> bool {
        self.is_closed(&self.complement(s))
    }

    fn closed_containing(&self, s: &PointSet) -> &ClosedSet {
        // the lattice is closed under intersection, so the smallest one is unique
        self.closed.iter().filter(|c| s.is_subset(&c.members)).min_by_key(|c| c.len()).expect("the full set is closed")
    }

    /// Smallest closed set containing `s`.
    pub fn closure(&self, s: &PointSet) -> PointSet {
        self.closed_containing(s).members.clone()
    }

    /// Smallest open set containing `p`.
    pub fn minimal_open(&self, p: usize) -> PointSet {
        let mut out = self.full_set();
        for c in &self.closed {
            if !c.members.contains(p) {
                out.difference_with(&c.members);
            }
        }
        out
    }

    fn check_lattice(&self) -> Result<()> {
        let full = self.full_set();
        if !self.is_closed(&self.empty_set()) || !self.is_closed(&full) {
            return Err(Error::Internal("closed sets miss the empty set or the whole space".into()));
        }
        for a in &self.closed {
            for b in &self.closed {
                let mut u = a.members.clone();
                u.union_with(&b.members);
                let mut i = a.members.clone();
                i.intersect_with(&b.members);
                if !self.is_closed(&u) || !self.is_closed(&i) {
                    return Err(Error::Internal("closed sets are not a topology".into()));
                }
            }
        }
        Ok(())
    }

    /// Whether `N` is the intersection of the primes containing it.
    pub fn is_radical_ideal(&self, n: &ElementSet) -> Result<bool> {
        let v = self.v_of(n)?;
        let meet = intersect_carriers(self.ggroup.ambient(), v.members.ones().map(|i| &self.points[i].carrier));
        Ok(&meet == n)
    }

    /// A nonempty closed set that is not the union of two proper closed
    /// subsets. The empty set is not irreducible.
    pub fn is_irreducible(&self, c: &PointSet) -> bool {
        if c.is_clear() {
            return false;
        }
        let proper: Vec<&PointSet> =
            self.closed.iter().map(|d| &d.members).filter(|d| d.is_subset(c) && *d != c).collect();
        !proper.iter().any(|a| {
            proper.iter().any(|b| {
                let mut u = (*a).clone();
                u.union_with(b);
                &u == c
            })
        })
    }

    /// Maximal irreducible closed sets.
    pub fn irreducible_components(&self) -> Vec<PointSet> {
        let irreducible: Vec<&PointSet> =
            self.closed.iter().map(|c| &c.members).filter(|c| self.is_irreducible(c)).collect();
        irreducible
            .iter()
            .filter(|c| !irreducible.iter().any(|d| d != *c && c.is_subset(d)))
            .map(|c| (*c).clone())
            .collect()
    }

    /// Points whose closure is `c`.
    pub fn generic_points(&self, c: &PointSet) -> Vec<usize> {
        c.ones().filter(|&p| &self.closure(&self.singleton(p)) == c).collect()
    }

    /// Whether the whole space is irreducible.
    pub fn is_irreducible_space(&self) -> bool {
        self.is_irreducible(&self.full_set())
    }

    /// Preimage of a point set under a point map into this space.
    pub fn pull_back(map: &[usize], s: &PointSet, source_len: usize) -> PointSet {
        let mut out = FixedBitSet::with_capacity(source_len);
        for (p, &q) in map.iter().enumerate() {
            if s.contains(q) {
                out.insert(p);
            }
        }
        out
    }

    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            ggroup: self.ggroup.label().to_string(),
            ambient_order: self.ggroup.ambient().order(),
            g_order: self.ggroup.gsub().len(),
            points: self.points.iter().map(|p| p.carrier.elements()).collect(),
            closed_sets: self
                .closed
                .iter()
                .map(|c| ClosedSetJson { points: c.points(), witness_order: c.witness.len() })
                .collect(),
        }
    }

    /// Specialization order as a DOT digraph: `P → Q` when `P ⊂ Q`,
    /// transitively reduced.
    pub fn to_dot(&self) -> String {
        let n = self.len();
        let below = |a: usize, b: usize| a != b && self.points[a].carrier.is_subset(&self.points[b].carrier);
        let mut out = String::from("digraph spec {\n");
        for (i, p) in self.points.iter().enumerate() {
            let _ = writeln!(out, "  p{i} [label=\"P{i} |{}|\"];", p.carrier.len());
        }
        for a in 0..n {
            for b in 0..n {
                if below(a, b) && !(0..n).any(|c| below(a, c) && below(c, b)) {
                    let _ = writeln!(out, "  p{a} -> p{b};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumJson {
    pub ggroup: String,
    pub ambient_order: usize,
    pub g_order: usize,
    pub points: Vec<Vec<usize>>,
    pub closed_sets: Vec<ClosedSetJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosedSetJson {
    pub points: Vec<usize>,
    pub witness_order: usize,
}

/// Orders point sets by size, then by member list.
pub fn point_set_cmp(a: &PointSet, b: &PointSet) -> std::cmp::Ordering {
    a.count_ones(..).cmp(&b.count_ones(..)).then_with(|| a.ones().cmp(b.ones()))
}

/// `P ↦ f⁻¹(P)` from the spectrum of `f`'s target to that of its source.
///
/// `source_space` belongs to the G-group on `f`'s source, `target_space` to
/// the one on its target. Continuity is verified before returning.
pub fn induced_map(f: &GroupHom, source_space: &SpecSpace, target_space: &SpecSpace) -> Result<Vec<usize>> {
    let (src, dst) = (source_space.ggroup(), target_space.ggroup());
    if !src.is_g_hom(f, dst) {
        return Err(Error::GStructure("map does not respect the G-structures".into()));
    }
    let mut map = Vec::with_capacity(target_space.len());
    for p in target_space.points() {
        let pre = f.preimage(&p.carrier);
        let q =
            source_space.point_of(&pre).ok_or_else(|| Error::Internal("preimage of a prime is not prime".into()))?;
        map.push(q);
    }
    for c in source_space.closed_sets() {
        let back = SpecSpace::pull_back(&map, &c.members, target_space.len());
        if !target_space.is_closed(&back) {
            return Err(Error::Internal("induced map is not continuous".into()));
        }
    }
    Ok(map)
}

/// Outcome of comparing `Spec(H/Nil)` with `Spec(H)`.
#[derive(Debug, Clone, Serialize)]
pub struct NilHomeoReport {
    pub ggroup: String,
    pub nil_order: usize,
    pub quotient_points: usize,
    pub points: usize,
    /// Index in `Spec(H)` of the preimage of each point of `Spec(H/Nil)`.
    pub map: Vec<usize>,
    pub bijective: bool,
    pub continuous: bool,
    pub closed_map: bool,
    pub passed: bool,
    pub note: Option<String>,
}

/// Checks that the projection `H → H/Nil(H)` induces a homeomorphism of
/// spectra.
///
/// When `Nil(H)` meets `φ(G)` the quotient is not a G-group. Every prime
/// contains `Nil(H)` and meets `φ(G)` trivially, so `Spec(H)` is then empty
/// and the check passes vacuously.
pub fn nil_homeo_check(gg: &Arc<GGroup>) -> Result<NilHomeoReport> {
    let nil = gg.nil_subgroup().clone();
    let space = SpecSpace::new(gg.clone())?;
    let mut report = NilHomeoReport {
        ggroup: gg.label().to_string(),
        nil_order: nil.len(),
        quotient_points: 0,
        points: space.len(),
        map: Vec::new(),
        bijective: false,
        continuous: false,
        closed_map: false,
        passed: false,
        note: None,
    };
    if !gg.is_ideal(&nil) {
        report.note = Some("Nil(H) meets G, so H/Nil(H) carries no G-structure".into());
        report.passed = space.is_empty();
        report.bijective = report.passed;
        report.continuous = report.passed;
        report.closed_map = report.passed;
        return Ok(report);
    }
    let q = gg.quotient(&nil)?;
    let qspace = SpecSpace::new(q.ggroup.clone())?;
    report.quotient_points = qspace.len();
    let map = induced_map(&q.projection, &space, &qspace)?;
    let mut hit = space.empty_set();
    for &p in &map {
        hit.insert(p);
    }
    report.bijective = map.len() == space.len() && hit.count_ones(..) == space.len();
    report.continuous = true;
    report.closed_map = qspace.closed_sets().iter().all(|c| {
        let mut image = space.empty_set();
        for p in c.members.ones() {
            image.insert(map[p]);
        }
        space.is_closed(&image)
    });
    report.map = map;
    report.passed = report.bijective && report.continuous && report.closed_map;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, FiniteGroup, DEFAULT_ORDER_CAP};

    fn a5xa5() -> (Arc<FiniteGroup>, Arc<FiniteGroup>) {
        let a5 = FiniteGroup::alternating(5).unwrap().into_arc();
        let h = direct_product(&a5, &a5, DEFAULT_ORDER_CAP).unwrap().into_arc();
        (a5, h)
    }

    fn diag(a5: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Arc<GGroup> {
        let emb = (0..60).map(|a| a * 60 + a).collect();
        Arc::new(GGroup::new("A5xA5/diag", a5.clone(), h.clone(), emb).unwrap())
    }

    fn first(a5: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Arc<GGroup> {
        let emb = (0..60).map(|a| a * 60).collect();
        Arc::new(GGroup::new("A5xA5/first", a5.clone(), h.clone(), emb).unwrap())
    }

    #[test]
    fn diagonal_spectrum_is_discrete() {
        let (a5, h) = a5xa5();
        let space = SpecSpace::new(diag(&a5, &h)).unwrap();
        assert_eq!(space.len(), 2);
        assert_eq!(space.closed_sets().len(), 4);
        assert!(!space.is_irreducible_space());
        let comps = space.irreducible_components();
        assert_eq!(comps.len(), 2);
        for p in 0..2 {
            assert_eq!(space.minimal_open(p), space.singleton(p));
            assert_eq!(space.generic_points(&space.singleton(p)), vec![p]);
        }
        let trivial = ElementSet::trivial(&h);
        assert!(space.is_radical_ideal(&trivial).unwrap());
        let dot = space.to_dot();
        assert!(!dot.contains("->"));
    }

    #[test]
    fn first_factor_spectrum_is_a_point() {
        let (a5, h) = a5xa5();
        let space = SpecSpace::new(first(&a5, &h)).unwrap();
        assert_eq!(space.len(), 1);
        assert_eq!(space.closed_sets().len(), 2);
        assert_eq!(space.points()[0].carrier.elements(), (0..60).collect::<Vec<_>>());
        assert!(!space.is_radical_ideal(&ElementSet::trivial(&h)).unwrap());
        assert_eq!(space.minimal_open(0), space.full_set());
    }

    #[test]
    fn projection_onto_a_factor() {
        let (a5, h) = a5xa5();
        let gg = first(&a5, &h);
        let space = SpecSpace::new(gg.clone()).unwrap();
        let p = space.points()[0].carrier.clone();
        let q = gg.quotient(&p).unwrap();
        let qspace = SpecSpace::new(q.ggroup.clone()).unwrap();
        assert_eq!(qspace.len(), 1);
        assert!(qspace.points()[0].carrier.is_trivial());
        let map = induced_map(&q.projection, &space, &qspace).unwrap();
        assert_eq!(map, vec![0]);
    }

    #[test]
    fn empty_spectrum() {
        let s3 = FiniteGroup::symmetric(3).unwrap().into_arc();
        let space = SpecSpace::new(Arc::new(GGroup::over_itself(&s3))).unwrap();
        assert!(space.is_empty());
        assert_eq!(space.closed_sets().len(), 1);
        assert!(!space.is_irreducible_space());
        let report = nil_homeo_check(space.ggroup()).unwrap();
        assert!(report.passed);
        assert!(report.note.is_some());
    }
}
