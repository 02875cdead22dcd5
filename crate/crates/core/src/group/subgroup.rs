use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::set::canonical_bits_cmp;
use super::{Elem, ElementSet, FiniteGroup, SetKind};
use crate::error::{Error, Result};

/// Default ceiling on the number of normal subgroups enumerated.
pub const DEFAULT_NORMAL_CAP: usize = 4096;

/// Which closure to take of a seed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// Smallest subgroup containing the seed.
    Subgroup,
    /// Smallest normal subgroup containing the seed.
    Normal,
}

/// An incrementally grown subgroup together with the generators used.
#[derive(Clone)]
pub(crate) struct Span<'a> {
    group: &'a FiniteGroup,
    pub(crate) bits: FixedBitSet,
    pub(crate) elems: Vec<Elem>,
    pub(crate) gens: Vec<Elem>,
}

impl<'a> Span<'a> {
    pub(crate) fn new(group: &'a FiniteGroup) -> Self {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert(0);
        Self { group, bits, elems: vec![0], gens: Vec::new() }
    }

    pub(crate) fn from_seed(group: &'a FiniteGroup, seed: impl IntoIterator<Item = Elem>) -> Self {
        let mut span = Self::new(group);
        for x in seed {
            span.add(x);
        }
        span
    }

    pub(crate) fn len(&self) -> usize {
        self.elems.len()
    }

    /// Adds `x` and re-closes. Returns whether the subgroup grew.
    pub(crate) fn add(&mut self, x: Elem) -> bool {
        if self.bits.contains(x) {
            return false;
        }
        self.gens.push(x);
        let old = self.elems.len();
        let mut idx = 0;
        while idx < self.elems.len() {
            let e = self.elems[idx];
            // old elements are already closed under the old generators
            let gens: &[Elem] = if idx < old { &self.gens[self.gens.len() - 1..] } else { &self.gens };
            for &g in gens {
                let y = self.group.mul(e, g);
                if !self.bits.put(y) {
                    self.elems.push(y);
                }
            }
            idx += 1;
        }
        true
    }

    /// Closes under conjugation by the ambient generators.
    pub(crate) fn normalize(&mut self) {
        let conjugators = self.group.generators().to_vec();
        self.close_under_conjugation(&conjugators);
    }

    /// Closes under conjugation by each of `conjugators`.
    pub(crate) fn close_under_conjugation(&mut self, conjugators: &[Elem]) {
        let mut i = 0;
        while i < self.gens.len() {
            let s = self.gens[i];
            for &h in conjugators {
                let c = self.group.conj(h, s);
                self.add(c);
            }
            i += 1;
        }
    }

    pub(crate) fn into_set(self, group: &Arc<FiniteGroup>, kind: SetKind) -> ElementSet {
        ElementSet::from_bits(group, self.bits, kind)
    }
}

pub(crate) fn greedy_generators(group: &FiniteGroup, initial: &[Elem]) -> Vec<Elem> {
    let n = group.order();
    let mut span = Span::from_seed(group, initial.iter().copied());
    while span.len() < n {
        let mut best: Option<(usize, Elem)> = None;
        for x in 0..n {
            if span.bits.contains(x) {
                continue;
            }
            let size = if span.len() == 1 {
                group.element_order(x)
            } else {
                let mut trial = span.clone();
                trial.add(x);
                trial.len()
            };
            if best.is_none_or(|(s, _)| size > s) {
                best = Some((size, x));
                if size == n {
                    break;
                }
            }
        }
        let (_, x) = best.expect("a proper span has an outside element");
        span.add(x);
    }
    span.gens
}

/// Smallest subgroup (or normal subgroup) of `h` containing `seed`.
pub fn subgroup_generated(h: &Arc<FiniteGroup>, seed: &[Elem], closure: Closure) -> ElementSet {
    let mut span = Span::from_seed(h, seed.iter().copied());
    match closure {
        Closure::Subgroup => {
            let kind = if span.len() == h.order() { SetKind::Normal } else { SetKind::Subgroup };
            span.into_set(h, kind)
        }
        Closure::Normal => {
            span.normalize();
            span.into_set(h, SetKind::Normal)
        }
    }
}

/// A generating set of a subgroup, picked in index order.
pub fn generators_of(set: &ElementSet) -> Vec<Elem> {
    let group = set.group();
    let mut span = Span::new(group);
    for x in set.iter() {
        span.add(x);
    }
    span.gens
}

/// `{y : xy = yx}`
pub fn centralizer(h: &Arc<FiniteGroup>, x: Elem) -> ElementSet {
    let mut bits = FixedBitSet::with_capacity(h.order());
    for y in h.elements() {
        if h.mul(x, y) == h.mul(y, x) {
            bits.insert(y);
        }
    }
    let kind = if bits.count_ones(..) == h.order() { SetKind::Normal } else { SetKind::Subgroup };
    ElementSet::from_bits(h, bits, kind)
}

/// `[U,V]`: the normal closure in `h` of all `[u,v]`.
///
/// Only commutators of generators are formed; their normal closure already
/// forces the images of `U` and `V` to commute.
pub fn commutator_subgroup(h: &Arc<FiniteGroup>, u: &ElementSet, v: &ElementSet) -> Result<ElementSet> {
    u.require_subgroup()?;
    v.require_subgroup()?;
    let gu = generators_of(u);
    let gv = generators_of(v);
    let mut span = Span::new(h);
    for &a in &gu {
        for &b in &gv {
            span.add(h.commutator(a, b));
        }
    }
    span.normalize();
    Ok(span.into_set(h, SetKind::Normal))
}

/// `D⁰H = H`, `Dᵏ⁺¹H = [DᵏH, DᵏH]`, stopping once the series stabilizes.
pub fn derived_series(h: &Arc<FiniteGroup>) -> Vec<ElementSet> {
    let mut series = vec![ElementSet::whole(h)];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(h, last, last).expect("normal subgroups");
        if &next == last {
            break;
        }
        series.push(next);
    }
    series
}

pub fn is_solvable(h: &Arc<FiniteGroup>) -> bool {
    derived_series(h).last().unwrap().is_trivial()
}

/// Nontrivial with no normal subgroups besides `{1}` and itself.
pub fn is_simple(h: &Arc<FiniteGroup>) -> bool {
    h.order() > 1
        && h.classes().iter().skip(1).all(|class| {
            let mut span = Span::from_seed(h, [class[0]]);
            span.normalize();
            span.len() == h.order()
        })
}

pub(crate) fn compute_classes(h: &FiniteGroup) -> Vec<Vec<Elem>> {
    let n = h.order();
    let gens = h.generators();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut classes = Vec::new();
    for x in 0..n {
        if seen.put(x) {
            continue;
        }
        let mut class = vec![x];
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &g in gens {
                let c = h.conj(g, y);
                if !seen.put(c) {
                    class.push(c);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

pub fn conjugacy_classes(h: &Arc<FiniteGroup>) -> &[Vec<Elem>] {
    h.classes()
}

/// Every normal subgroup of `h`, in canonical order.
pub fn normal_subgroups(h: &Arc<FiniteGroup>) -> Result<Vec<ElementSet>> {
    normal_subgroups_capped(h, DEFAULT_NORMAL_CAP)
}

/// Normal subgroups as iterated joins of the normal closures of single
/// conjugacy classes.
pub fn normal_subgroups_capped(h: &Arc<FiniteGroup>, cap: usize) -> Result<Vec<ElementSet>> {
    let mut atoms: Vec<Span> = Vec::new();
    let mut atom_bits: HashSet<FixedBitSet> = HashSet::new();
    for class in h.classes().iter().skip(1) {
        let mut span = Span::from_seed(h, [class[0]]);
        span.normalize();
        if atom_bits.insert(span.bits.clone()) {
            atoms.push(span);
        }
    }

    let mut lattice: Vec<Span> = vec![Span::new(h)];
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(lattice[0].bits.clone());
    let mut i = 0;
    while i < lattice.len() {
        for atom in &atoms {
            if atom.bits.is_subset(&lattice[i].bits) {
                continue;
            }
            let mut join = lattice[i].clone();
            for &g in &atom.gens {
                join.add(g);
            }
            if seen.insert(join.bits.clone()) {
                if lattice.len() >= cap {
                    return Err(Error::EnumerationCap { what: "normal subgroups", cap });
                }
                lattice.push(join);
            }
        }
        i += 1;
    }

    let mut out: Vec<ElementSet> = lattice.into_iter().map(|s| s.into_set(h, SetKind::Normal)).collect();
    out.sort_by(|a, b| canonical_bits_cmp(a.bits(), b.bits()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cycle_perm;

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::symmetric(3).unwrap().into_arc()
    }

    fn find(h: &FiniteGroup, images: &[usize]) -> Elem {
        let p: Vec<u32> = images.iter().map(|&v| v as u32).collect();
        h.find_perm(&p).unwrap()
    }

    #[test]
    fn transposition_generates_order_two() {
        let h = s3();
        let t = find(&h, &cycle_perm(3, &[0, 1]));
        let sub = subgroup_generated(&h, &[t], Closure::Subgroup);
        assert_eq!(sub.elements(), {
            let mut v = vec![0, t];
            v.sort();
            v
        });
        let ncl = subgroup_generated(&h, &[t], Closure::Normal);
        assert!(ncl.is_whole());
    }

    #[test]
    fn empty_seed_is_trivial() {
        let h = s3();
        assert!(subgroup_generated(&h, &[], Closure::Subgroup).is_trivial());
        assert!(subgroup_generated(&h, &[], Closure::Normal).is_trivial());
    }

    #[test]
    fn centralizer_of_three_cycle() {
        let h = s3();
        let c = find(&h, &cycle_perm(3, &[0, 1, 2]));
        let cent = centralizer(&h, c);
        assert_eq!(cent.len(), 3);
        assert!(centralizer(&h, 0).is_whole());
        let z6 = FiniteGroup::cyclic(6).unwrap().into_arc();
        assert!(centralizer(&z6, 4).is_whole());
    }

    #[test]
    fn derived_series_of_s3_and_a5() {
        let h = s3();
        let ds = derived_series(&h);
        assert_eq!(ds.iter().map(|d| d.len()).collect::<Vec<_>>(), vec![6, 3, 1]);
        assert!(is_solvable(&h));

        let a5 = FiniteGroup::alternating(5).unwrap().into_arc();
        let ds = derived_series(&a5);
        assert_eq!(ds.len(), 1);
        assert!(!is_solvable(&a5));
        assert!(is_simple(&a5));

        let z1 = FiniteGroup::trivial().into_arc();
        assert_eq!(derived_series(&z1).len(), 1);
        assert!(is_solvable(&z1));
    }

    #[test]
    fn commutator_requires_certified_inputs() {
        let h = s3();
        let plain = ElementSet::from_elements(&h, [0, 1]).unwrap();
        assert!(commutator_subgroup(&h, &plain, &plain).is_err());
    }

    #[test]
    fn commuting_subgroups_have_trivial_commutator() {
        let h = s3();
        let c = find(&h, &cycle_perm(3, &[0, 1, 2]));
        let a3 = subgroup_generated(&h, &[c], Closure::Subgroup);
        assert!(commutator_subgroup(&h, &a3, &a3).unwrap().is_trivial());
        let whole = ElementSet::whole(&h);
        assert_eq!(commutator_subgroup(&h, &whole, &whole).unwrap(), a3);
    }

    #[test]
    fn normal_subgroups_of_small_groups() {
        let z6 = FiniteGroup::cyclic(6).unwrap().into_arc();
        let sizes: Vec<usize> = normal_subgroups(&z6).unwrap().iter().map(|n| n.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);

        let s5 = FiniteGroup::symmetric(5).unwrap().into_arc();
        let sizes: Vec<usize> = normal_subgroups(&s5).unwrap().iter().map(|n| n.len()).collect();
        assert_eq!(sizes, vec![1, 60, 120]);
    }

    #[test]
    fn normal_cap_is_enforced() {
        let z6 = FiniteGroup::cyclic(6).unwrap().into_arc();
        let err = normal_subgroups_capped(&z6, 2).unwrap_err();
        assert!(matches!(err, Error::EnumerationCap { .. }));
    }
}
