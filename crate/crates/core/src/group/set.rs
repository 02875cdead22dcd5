use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};

/// What has been verified about an [`ElementSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetKind {
    Plain,
    Subgroup,
    Normal,
}

/// A subset of a finite group, stored as a bit vector over element indices.
#[derive(Clone)]
pub struct ElementSet {
    group: Arc<FiniteGroup>,
    bits: FixedBitSet,
    kind: SetKind,
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.kind, self.elements())
    }
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for ElementSet {}

impl ElementSet {
    pub fn from_elements(group: &Arc<FiniteGroup>, elems: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let n = group.order();
        let mut bits = FixedBitSet::with_capacity(n);
        for e in elems {
            if e >= n {
                return Err(Error::ElementOutOfRange { element: e, order: n });
            }
            bits.insert(e);
        }
        Ok(Self { group: group.clone(), bits, kind: SetKind::Plain })
    }

    pub(crate) fn from_bits(group: &Arc<FiniteGroup>, bits: FixedBitSet, kind: SetKind) -> Self {
        debug_assert_eq!(bits.len(), group.order());
        Self { group: group.clone(), bits, kind }
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert(0);
        Self { group: group.clone(), bits, kind: SetKind::Normal }
    }

    pub fn whole(group: &Arc<FiniteGroup>) -> Self {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert_range(..);
        Self { group: group.clone(), bits, kind: SetKind::Normal }
    }

    /// Checks closure (and normality) and records the strongest property
    /// that holds.
    pub fn certify(mut self) -> Self {
        self.kind = SetKind::Plain;
        if self.is_closed() {
            self.kind = if self.is_conjugation_closed() { SetKind::Normal } else { SetKind::Subgroup };
        }
        self
    }

    fn is_closed(&self) -> bool {
        if !self.bits.contains(0) {
            return false;
        }
        let elems = self.elements();
        // a nonempty finite subset closed under products is a subgroup
        elems.iter().all(|&a| elems.iter().all(|&b| self.bits.contains(self.group.mul(a, b))))
    }

    fn is_conjugation_closed(&self) -> bool {
        let gens = self.group.generators();
        self.bits.ones().all(|x| gens.iter().all(|&g| self.bits.contains(self.group.conj(g, x))))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn is_subgroup(&self) -> bool {
        self.kind >= SetKind::Subgroup
    }

    pub fn is_normal(&self) -> bool {
        self.kind == SetKind::Normal
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// True for the set `{identity}`.
    pub fn is_trivial(&self) -> bool {
        self.len() == 1 && self.bits.contains(0)
    }

    pub fn is_whole(&self) -> bool {
        self.len() == self.group.order()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones()
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.bits.ones().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Intersection; subgroups intersect to subgroups, normal to normal.
    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        let kind = self.kind.min(other.kind);
        Self { group: self.group.clone(), bits, kind }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { group: self.group.clone(), bits, kind: SetKind::Plain }
    }

    pub fn require_subgroup(&self) -> Result<()> {
        if self.is_subgroup() {
            Ok(())
        } else {
            Err(Error::NotCertified("a certified subgroup"))
        }
    }

    pub fn require_normal(&self) -> Result<()> {
        if self.is_normal() {
            Ok(())
        } else {
            Err(Error::NotCertified("a certified normal subgroup"))
        }
    }

    /// Canonical order: by size, then lexicographically by sorted members.
    pub fn canonical_cmp(&self, other: &ElementSet) -> Ordering {
        canonical_bits_cmp(&self.bits, &other.bits)
    }
}

/// Size first, then the sorted member lists compared lexicographically.
pub(crate) fn canonical_bits_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    a.count_ones(..).cmp(&b.count_ones(..)).then_with(|| a.ones().cmp(b.ones()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certify_detects_kinds() {
        let s3 = FiniteGroup::symmetric(3).unwrap().into_arc();
        let a3: Vec<Elem> = s3.elements().filter(|&x| s3.element_order(x) != 2).collect();
        let a3 = ElementSet::from_elements(&s3, a3).unwrap().certify();
        assert!(a3.is_normal());

        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let sub = ElementSet::from_elements(&s3, [0, t]).unwrap().certify();
        assert_eq!(sub.kind(), SetKind::Subgroup);

        let plain = ElementSet::from_elements(&s3, [t]).unwrap().certify();
        assert_eq!(plain.kind(), SetKind::Plain);
    }

    #[test]
    fn out_of_range_element() {
        let z2 = FiniteGroup::cyclic(2).unwrap().into_arc();
        assert!(ElementSet::from_elements(&z2, [2]).is_err());
    }
}
