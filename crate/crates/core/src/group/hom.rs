use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::subgroup::{greedy_generators, Span};
use super::{Elem, ElementSet, FiniteGroup, SetKind};
use crate::error::{Error, Result};

/// Default search-node budget for homomorphism enumeration.
pub const DEFAULT_HOM_BUDGET: u64 = 10_000_000;

/// A homomorphism between two finite groups, stored as its full image table.
#[derive(Clone)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<Elem>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} -> {}: {:?})", self.source.name(), self.target.name(), self.map)
    }
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.target.order() == other.target.order()
    }
}

impl Eq for GroupHom {}

impl GroupHom {
    /// Validates `map` as a homomorphism.
    ///
    /// Checking `f(x·s) = f(x)·f(s)` for every `x` and every generator `s`
    /// covers all products, since each element is a positive word in the
    /// generators.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.order()) {
            return Err(Error::ElementOutOfRange { element: bad, order: target.order() });
        }
        if map[0] != 0 {
            return Err(Error::InvalidHom("identity is not preserved".into()));
        }
        for &s in source.generators() {
            for x in source.elements() {
                if map[source.mul(x, s)] != target.mul(map[x], map[s]) {
                    return Err(Error::InvalidHom(format!("f({x}·{s}) != f({x})·f({s})")));
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub(crate) fn new_unchecked(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<Elem>) -> Self {
        debug_assert_eq!(map.len(), source.order());
        Self { source, target, map }
    }

    pub fn identity(h: &Arc<FiniteGroup>) -> Self {
        Self { source: h.clone(), target: h.clone(), map: h.elements().collect() }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    /// `then ∘ self`
    pub fn then(&self, then: &GroupHom) -> Result<GroupHom> {
        if self.target.order() != then.source.order() {
            return Err(Error::InvalidHom("composition of mismatched homs".into()));
        }
        let map = self.map.iter().map(|&x| then.map[x]).collect();
        Ok(Self { source: self.source.clone(), target: then.target.clone(), map })
    }

    pub fn kernel(&self) -> ElementSet {
        let mut bits = FixedBitSet::with_capacity(self.source.order());
        for (x, &y) in self.map.iter().enumerate() {
            if y == 0 {
                bits.insert(x);
            }
        }
        ElementSet::from_bits(&self.source, bits, SetKind::Normal)
    }

    pub fn image(&self) -> ElementSet {
        let mut bits = FixedBitSet::with_capacity(self.target.order());
        for &y in &self.map {
            bits.insert(y);
        }
        ElementSet::from_bits(&self.target, bits, SetKind::Subgroup)
    }

    /// Preimage of a subset of the target. Subgroups pull back to
    /// subgroups, normal subgroups to normal subgroups.
    pub fn preimage(&self, set: &ElementSet) -> ElementSet {
        let mut bits = FixedBitSet::with_capacity(self.source.order());
        for (x, &y) in self.map.iter().enumerate() {
            if set.contains(y) {
                bits.insert(x);
            }
        }
        ElementSet::from_bits(&self.source, bits, set.kind())
    }

    /// Image of a subset of the source.
    pub fn image_of(&self, set: &ElementSet) -> ElementSet {
        let mut bits = FixedBitSet::with_capacity(self.target.order());
        for x in set.iter() {
            bits.insert(self.map[x]);
        }
        let kind = set.kind().min(SetKind::Subgroup);
        ElementSet::from_bits(&self.target, bits, kind)
    }

    pub fn is_injective(&self) -> bool {
        self.map.iter().filter(|&&y| y == 0).count() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }
}

/// Restrictions on [`enumerate_homs`].
#[derive(Debug, Clone)]
pub struct HomConstraints {
    /// `(x, y)` pairs forcing `f(x) = y`.
    pub pins: Vec<(Elem, Elem)>,
    /// Only isomorphisms.
    pub bijective: bool,
    /// Source elements that must map to the same index in the target.
    pub fixed: Vec<Elem>,
    pub node_budget: u64,
}

impl Default for HomConstraints {
    fn default() -> Self {
        Self { pins: Vec::new(), bijective: false, fixed: Vec::new(), node_budget: DEFAULT_HOM_BUDGET }
    }
}

impl HomConstraints {
    pub fn automorphisms_fixing(fixed: &ElementSet) -> Self {
        Self { bijective: true, fixed: fixed.elements(), ..Self::default() }
    }
}

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct Partial {
    map: Vec<Elem>,
    mapped: Vec<Elem>,
}

impl Partial {
    fn new(n: usize) -> Self {
        let mut map = vec![UNSET; n];
        map[0] = 0;
        Self { map, mapped: vec![0] }
    }

    /// Extends the map over the subgroup generated with the newest generator
    /// appended. Returns false on a conflicting definition.
    fn extend(&mut self, src: &FiniteGroup, dst: &FiniteGroup, gens: &[Elem], imgs: &[Elem]) -> bool {
        let k = gens.len();
        let old = self.mapped.len();
        let mut idx = 0;
        while idx < self.mapped.len() {
            let x = self.mapped[idx];
            let fx = self.map[x];
            let from = if idx < old { k - 1 } else { 0 };
            for i in from..k {
                let z = src.mul(x, gens[i]);
                let w = dst.mul(fx, imgs[i]);
                match self.map[z] {
                    UNSET => {
                        self.map[z] = w;
                        self.mapped.push(z);
                    }
                    v if v != w => return false,
                    _ => {}
                }
            }
            idx += 1;
        }
        true
    }
}

struct Search<'a> {
    src: &'a Arc<FiniteGroup>,
    dst: &'a Arc<FiniteGroup>,
    gens: Vec<Elem>,
    /// Images chosen so far; `imgs[i]` belongs to `gens[i]`.
    imgs: Vec<Elem>,
    pins: Vec<(Elem, Elem)>,
    bijective: bool,
    nodes: u64,
    budget: u64,
    found: Vec<GroupHom>,
}

impl Search<'_> {
    fn descend(&mut self, level: usize, partial: &Partial) -> Result<()> {
        if level == self.gens.len() {
            return self.leaf(partial);
        }
        let g = self.gens[level];
        let ord_g = self.src.element_order(g);
        for y in self.dst.elements() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { what: "homomorphism search", budget: self.budget });
            }
            let ord_y = self.dst.element_order(y);
            if !ord_g.is_multiple_of(ord_y) || (self.bijective && ord_g != ord_y) {
                continue;
            }
            self.imgs.truncate(level);
            if !self.relations_hold(level, g, y) {
                continue;
            }
            self.imgs.push(y);
            let mut next = partial.clone();
            if next.extend(self.src, self.dst, &self.gens[..=level], &self.imgs) {
                self.descend(level + 1, &next)?;
            }
        }
        Ok(())
    }

    /// Cheap necessary conditions against earlier generators: commuting
    /// pairs stay commuting and orders of products can only shrink.
    fn relations_hold(&self, level: usize, g: Elem, y: Elem) -> bool {
        let (src, dst) = (self.src, self.dst);
        (0..level).all(|j| {
            let (gj, yj) = (self.gens[j], self.imgs[j]);
            let commute_ok = src.mul(g, gj) != src.mul(gj, g) || dst.mul(y, yj) == dst.mul(yj, y);
            commute_ok && src.element_order(src.mul(g, gj)) % dst.element_order(dst.mul(y, yj)) == 0
        })
    }

    fn leaf(&mut self, partial: &Partial) -> Result<()> {
        if partial.mapped.len() != self.src.order() {
            return Err(Error::Internal("generators do not span the source".into()));
        }
        if self.pins.iter().any(|&(x, y)| partial.map[x] != y) {
            return Ok(());
        }
        let hom = GroupHom::new(self.src.clone(), self.dst.clone(), partial.map.clone())?;
        if self.bijective && !hom.is_injective() {
            return Ok(());
        }
        self.found.push(hom);
        Ok(())
    }
}

/// All homomorphisms `src → dst` satisfying `constraints`, by backtracking
/// over the images of a small generating set of `src`. Output is sorted by
/// image table.
pub fn enumerate_homs(
    src: &Arc<FiniteGroup>,
    dst: &Arc<FiniteGroup>,
    constraints: &HomConstraints,
) -> Result<Vec<GroupHom>> {
    let mut pins = constraints.pins.clone();
    pins.extend(constraints.fixed.iter().map(|&x| (x, x)));
    for &(x, y) in &pins {
        if x >= src.order() {
            return Err(Error::ElementOutOfRange { element: x, order: src.order() });
        }
        if y >= dst.order() {
            return Err(Error::ElementOutOfRange { element: y, order: dst.order() });
        }
    }
    if constraints.bijective && src.order() != dst.order() {
        return Ok(Vec::new());
    }

    // generators of the pinned subgroup come first, with forced images
    let mut span = Span::new(src);
    let mut imgs = Vec::new();
    for &(x, y) in &pins {
        if span.add(x) {
            imgs.push(y);
        }
    }
    let pinned_gens = span.gens.clone();
    let gens = greedy_generators(src, &pinned_gens);
    debug_assert_eq!(&gens[..pinned_gens.len()], &pinned_gens[..]);

    let mut partial = Partial::new(src.order());
    for k in 1..=pinned_gens.len() {
        if !partial.extend(src, dst, &pinned_gens[..k], &imgs[..k]) {
            return Ok(Vec::new());
        }
    }
    if pins.iter().any(|&(x, y)| partial.map[x] != UNSET && partial.map[x] != y) {
        return Ok(Vec::new());
    }

    let mut search = Search {
        src,
        dst,
        gens,
        imgs,
        pins,
        bijective: constraints.bijective,
        nodes: 0,
        budget: constraints.node_budget,
        found: Vec::new(),
    };
    search.descend(pinned_gens.len(), &partial)?;
    let mut found = search.found;
    found.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(found)
}
