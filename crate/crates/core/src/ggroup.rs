//! G-groups: a finite group `H` with an injective morphism from a base group
//! `G`, and the ring-like notions built on it (zero divisors, ideals, primes,
//! nilpotents, radical).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::subgroup::Span;
use crate::group::{
    commutator_subgroup, enumerate_homs, is_simple, normal_subgroups_capped, quotient, subgroup_generated, Closure,
    Elem, ElementSet, FiniteGroup, GroupHom, HomConstraints, SetKind,
};
use crate::limits::Limits;

/// How [`GGroup::zero_divisors`] decides membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroDivisorMode {
    /// `x` is a zero divisor iff some nontrivial `y` has every `G`-conjugate
    /// commuting with `x`.
    Fast,
    /// Builds `G(x)` and `G(y)` for every pair and tests them for commuting.
    Oracle,
}

/// A finite group `H` together with an injective homomorphism `φ: G → H`.
///
/// Most operations only need the image `φ(G)`, exposed as [`GGroup::gsub`].
/// The base group and embedding are kept so that homomorphisms between
/// different G-groups can be required to commute with the structure maps.
pub struct GGroup {
    label: String,
    ambient: Arc<FiniteGroup>,
    base: Arc<FiniteGroup>,
    embedding: Vec<Elem>,
    gsub: ElementSet,
    /// Images of the base generators.
    g_gens: Vec<Elem>,
    limits: Limits,
    orbits: OnceLock<Orbits>,
    normals: OnceLock<Vec<ElementSet>>,
    spec: OnceLock<Vec<PrimeIdeal>>,
    nil: OnceLock<NilData>,
}

impl fmt::Debug for GGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GGroup({}: |H|={}, |G|={})", self.label, self.ambient.order(), self.base.order())
    }
}

/// Orbits of `H` under conjugation by `φ(G)`.
struct Orbits {
    /// Orbit index of every element.
    of: Vec<usize>,
    members: Vec<Vec<Elem>>,
}

struct NilData {
    lengths: Vec<Option<usize>>,
    subgroup: ElementSet,
}

impl GGroup {
    /// Builds a G-group from an explicit embedding `base → ambient`.
    pub fn new(
        label: impl Into<String>,
        base: Arc<FiniteGroup>,
        ambient: Arc<FiniteGroup>,
        embedding: Vec<Elem>,
    ) -> Result<Self> {
        let phi = GroupHom::new(base.clone(), ambient.clone(), embedding)
            .map_err(|e| Error::GStructure(format!("embedding is not a homomorphism: {e}")))?;
        if !phi.is_injective() {
            return Err(Error::GStructure("embedding is not injective".into()));
        }
        Ok(Self::trusted(label.into(), base, ambient, phi.map().to_vec(), Limits::default()))
    }

    /// The G-group whose base group is the subgroup `g` of `ambient` itself.
    pub fn from_subgroup(label: impl Into<String>, ambient: &Arc<FiniteGroup>, g: &ElementSet) -> Result<Self> {
        let g = g.clone().certify();
        if !g.is_subgroup() {
            return Err(Error::GStructure("designated set is not a subgroup".into()));
        }
        if !Arc::ptr_eq(g.group(), ambient) && !g.group().same_table(ambient) {
            return Err(Error::GStructure("designated subgroup lives in another group".into()));
        }
        let label = label.into();
        if g.is_whole() {
            let id = ambient.elements().collect();
            return Ok(Self::trusted(label, ambient.clone(), ambient.clone(), id, Limits::default()));
        }
        let (base, embedding) = extract_subgroup(ambient, &g, format!("{}<{}>", ambient.name(), g.len()))?;
        Ok(Self::trusted(label, Arc::new(base), ambient.clone(), embedding, Limits::default()))
    }

    /// The G-group over the subgroup generated by `generators`.
    pub fn generated_by(label: impl Into<String>, ambient: &Arc<FiniteGroup>, generators: &[Elem]) -> Result<Self> {
        if let Some(&bad) = generators.iter().find(|&&x| x >= ambient.order()) {
            return Err(Error::ElementOutOfRange { element: bad, order: ambient.order() });
        }
        let g = subgroup_generated(ambient, generators, Closure::Subgroup);
        Self::from_subgroup(label, ambient, &g)
    }

    /// `H` over itself.
    pub fn over_itself(ambient: &Arc<FiniteGroup>) -> Self {
        let id = ambient.elements().collect();
        Self::trusted(ambient.name().to_string(), ambient.clone(), ambient.clone(), id, Limits::default())
    }

    /// `H` over the trivial group.
    pub fn over_trivial(ambient: &Arc<FiniteGroup>) -> Self {
        let base = Arc::new(FiniteGroup::trivial());
        Self::trusted(format!("{}/1", ambient.name()), base, ambient.clone(), vec![0], Limits::default())
    }

    pub(crate) fn trusted(
        label: String,
        base: Arc<FiniteGroup>,
        ambient: Arc<FiniteGroup>,
        embedding: Vec<Elem>,
        limits: Limits,
    ) -> Self {
        let mut bits = FixedBitSet::with_capacity(ambient.order());
        for &y in &embedding {
            bits.insert(y);
        }
        let kind = if bits.count_ones(..) == ambient.order() { SetKind::Normal } else { SetKind::Subgroup };
        let gsub = ElementSet::from_bits(&ambient, bits, kind);
        let g_gens = base.generators().iter().map(|&g| embedding[g]).collect();
        Self {
            label,
            ambient,
            base,
            embedding,
            gsub,
            g_gens,
            limits,
            orbits: OnceLock::new(),
            normals: OnceLock::new(),
            spec: OnceLock::new(),
            nil: OnceLock::new(),
        }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ambient(&self) -> &Arc<FiniteGroup> {
        &self.ambient
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn embedding(&self) -> &[Elem] {
        &self.embedding
    }

    /// `φ(g)`
    pub fn embed(&self, g: Elem) -> Elem {
        self.embedding[g]
    }

    /// The image `φ(G)` as a subgroup of the ambient group.
    pub fn gsub(&self) -> &ElementSet {
        &self.gsub
    }

    /// Generators of `φ(G)`: the images of the base generators.
    pub fn g_generators(&self) -> &[Elem] {
        &self.g_gens
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Whether both G-groups have the same base group.
    pub fn shares_base(&self, other: &GGroup) -> bool {
        Arc::ptr_eq(&self.base, &other.base) || self.base.same_table(&other.base)
    }

    /// Whether `gsub` is normal in the ambient group.
    pub fn gsub_is_normal(&self) -> bool {
        let h = &self.ambient;
        h.generators().iter().all(|&s| self.g_gens.iter().all(|&g| self.gsub.contains(h.conj(s, g))))
    }

    /// `g·x·g⁻¹` for `g ∈ φ(G)`.
    pub fn g_conjugate(&self, x: Elem, g: Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(g)?;
        if !self.gsub.contains(g) {
            return Err(Error::Precondition(format!("{g} is not in the image of G")));
        }
        Ok(self.ambient.conj(g, x))
    }

    fn check(&self, x: Elem) -> Result<()> {
        if x >= self.ambient.order() {
            return Err(Error::ElementOutOfRange { element: x, order: self.ambient.order() });
        }
        Ok(())
    }

    fn orbits(&self) -> &Orbits {
        self.orbits.get_or_init(|| {
            let h = &self.ambient;
            let mut of = vec![usize::MAX; h.order()];
            let mut members = Vec::new();
            for x in h.elements() {
                if of[x] != usize::MAX {
                    continue;
                }
                let id = members.len();
                of[x] = id;
                let mut orbit = vec![x];
                let mut i = 0;
                while i < orbit.len() {
                    let y = orbit[i];
                    for &g in &self.g_gens {
                        let z = h.conj(g, y);
                        if of[z] == usize::MAX {
                            of[z] = id;
                            orbit.push(z);
                        }
                    }
                    i += 1;
                }
                orbit.sort_unstable();
                members.push(orbit);
            }
            Orbits { of, members }
        })
    }

    /// The `φ(G)`-conjugacy orbit of `x`, sorted.
    pub fn g_orbit(&self, x: Elem) -> Result<&[Elem]> {
        self.check(x)?;
        let orbits = self.orbits();
        Ok(&orbits.members[orbits.of[x]])
    }

    /// `G(x)`: the subgroup generated by all `φ(G)`-conjugates of `x`.
    pub fn g_orbit_subgroup(&self, x: Elem) -> Result<ElementSet> {
        self.check(x)?;
        Ok(self.orbit_subgroup(x))
    }

    fn orbit_subgroup(&self, x: Elem) -> ElementSet {
        let h = &self.ambient;
        let mut span = Span::from_seed(h, [x]);
        span.close_under_conjugation(&self.g_gens);
        let kind = if span.len() == h.order() { SetKind::Normal } else { SetKind::Subgroup };
        span.into_set(h, kind)
    }

    /// `G(x) ∩ φ(G) ≠ 1`
    pub fn is_invertible(&self, x: Elem) -> Result<bool> {
        let gx = self.g_orbit_subgroup(x)?;
        Ok(!gx.intersection(&self.gsub).is_trivial())
    }

    /// All zero divisors, as a plain subset of the ambient group.
    pub fn zero_divisors(&self, mode: ZeroDivisorMode) -> ElementSet {
        let bits = match mode {
            ZeroDivisorMode::Fast => self.zero_divisors_fast(false),
            ZeroDivisorMode::Oracle => self.zero_divisors_oracle(),
        };
        ElementSet::from_bits(&self.ambient, bits, SetKind::Plain)
    }

    /// Whether the G-group has no zero divisors.
    pub fn is_g_domain(&self) -> bool {
        self.zero_divisors_fast(true).is_clear()
    }

    /// `K_x` is the union of the conjugation orbits lying inside `C(x)`; `x`
    /// is a zero divisor iff some nontrivial orbit does.
    fn zero_divisors_fast(&self, stop_at_first: bool) -> FixedBitSet {
        let h = &self.ambient;
        let n = h.order();
        let orbits = self.orbits();
        let mut out = FixedBitSet::with_capacity(n);
        let mut centralizes = FixedBitSet::with_capacity(n);
        for x in 1..n {
            centralizes.clear();
            for y in 0..n {
                if h.mul(x, y) == h.mul(y, x) {
                    centralizes.insert(y);
                }
            }
            let hit =
                orbits.members.iter().any(|orbit| orbit[0] != 0 && orbit.iter().all(|&y| centralizes.contains(y)));
            if hit {
                out.insert(x);
                if stop_at_first {
                    break;
                }
            }
        }
        out
    }

    fn zero_divisors_oracle(&self) -> FixedBitSet {
        let h = &self.ambient;
        let n = h.order();
        let subs: Vec<Vec<Elem>> = (0..n).map(|x| self.orbit_subgroup(x).elements()).collect();
        let mut out = FixedBitSet::with_capacity(n);
        for x in 1..n {
            for y in x..n {
                if out.contains(x) && out.contains(y) {
                    continue;
                }
                if commute_elementwise(h, &subs[x], &subs[y]) {
                    out.insert(x);
                    out.insert(y);
                }
            }
        }
        out
    }

    /// Whether `[G(x), G(y)] = 1`.
    pub fn orbit_subgroups_commute(&self, x: Elem, y: Elem) -> Result<bool> {
        let gx = self.g_orbit_subgroup(x)?.elements();
        let gy = self.g_orbit_subgroup(y)?.elements();
        Ok(commute_elementwise(&self.ambient, &gx, &gy))
    }

    fn nil_data(&self) -> &NilData {
        self.nil.get_or_init(|| {
            let h = &self.ambient;
            let orbits = self.orbits();
            // G(x) is constant on conjugation orbits
            let per_orbit: Vec<Option<usize>> =
                orbits.members.iter().map(|orbit| self.nilpotency_uncached(orbit[0])).collect();
            let lengths: Vec<Option<usize>> = h.elements().map(|x| per_orbit[orbits.of[x]]).collect();
            let nilpotent: Vec<Elem> = h.elements().filter(|&x| lengths[x].is_some()).collect();
            let subgroup = subgroup_generated(h, &nilpotent, Closure::Normal);
            NilData { lengths, subgroup }
        })
    }

    fn nilpotency_uncached(&self, x: Elem) -> Option<usize> {
        let h = &self.ambient;
        let gx = self.orbit_subgroup(x);
        let mut level = gx.clone();
        for k in 1..=h.order() {
            if level.is_trivial() {
                return Some(k);
            }
            let next = commutator_subgroup(h, &gx, &level).expect("subgroups");
            if next == level {
                return None;
            }
            level = next;
        }
        None
    }

    /// The least `k` with `G⁽ᵏ⁾(x) = 1`, where `G⁽¹⁾(x) = G(x)` and
    /// `G⁽ᵏ⁺¹⁾(x) = [G(x), G⁽ᵏ⁾(x)]`; `None` if `x` is not nilpotent.
    pub fn nilpotency(&self, x: Elem) -> Result<Option<usize>> {
        self.check(x)?;
        Ok(self.nil_data().lengths[x])
    }

    /// `Nil(H)`: the normal closure of the nilpotent elements.
    pub fn nil_subgroup(&self) -> &ElementSet {
        &self.nil_data().subgroup
    }

    /// `Com_H(G)`: elements commuting with all of `φ(G)`.
    pub fn com_subgroup(&self) -> ElementSet {
        let h = &self.ambient;
        let mut bits = FixedBitSet::with_capacity(h.order());
        for x in h.elements() {
            if self.g_gens.iter().all(|&g| h.mul(g, x) == h.mul(x, g)) {
                bits.insert(x);
            }
        }
        ElementSet::from_bits(h, bits, SetKind::Subgroup)
    }

    /// Normal subgroups of the ambient group, canonically ordered.
    pub fn normal_subgroups(&self) -> Result<&[ElementSet]> {
        if let Some(n) = self.normals.get() {
            return Ok(n);
        }
        let list = normal_subgroups_capped(&self.ambient, self.limits.normal_cap)?;
        Ok(self.normals.get_or_init(|| list))
    }

    /// `N ∩ φ(G) = 1`
    pub fn is_ideal(&self, n: &ElementSet) -> bool {
        n.is_normal() && n.intersection(&self.gsub).is_trivial()
    }

    /// All ideals, canonically ordered.
    pub fn ideals(&self) -> Result<Vec<Ideal>> {
        let normals = self.normal_subgroups()?;
        let simple_g = is_simple(&self.base);
        let mut out = Vec::new();
        for n in normals {
            let meet = n.intersection(&self.gsub);
            if simple_g && !meet.is_trivial() && !self.gsub.is_subset(n) {
                return Err(Error::Internal(format!(
                    "normal subgroup of order {} meets a simple G in a proper nontrivial subgroup",
                    n.len()
                )));
            }
            if meet.is_trivial() {
                out.push(Ideal { carrier: n.clone() });
            }
        }
        Ok(out)
    }

    /// The only ideal is `{1}`.
    pub fn is_g_simple(&self) -> Result<bool> {
        let ideals = self.ideals()?;
        Ok(ideals.len() == 1)
    }

    /// `H/N` with the induced structure `G → H → H/N`.
    pub fn quotient(&self, n: &ElementSet) -> Result<QuotientGGroup> {
        n.require_normal()?;
        if !n.intersection(&self.gsub).is_trivial() {
            return Err(Error::Precondition(format!("normal subgroup of order {} meets G nontrivially", n.len())));
        }
        let q = quotient(&self.ambient, n)?;
        let embedding = self.embedding.iter().map(|&g| q.project(g)).collect();
        let label = if n.is_trivial() { self.label.clone() } else { format!("{}/N{}", self.label, n.len()) };
        let gg = GGroup::trusted(label, self.base.clone(), q.group.clone(), embedding, self.limits);
        Ok(QuotientGGroup { ggroup: Arc::new(gg), projection: q.projection, kernel: n.clone() })
    }

    /// Prime ideals: proper ideals with a zero-divisor-free quotient.
    pub fn spec(&self) -> Result<&[PrimeIdeal]> {
        if let Some(s) = self.spec.get() {
            return Ok(s);
        }
        let primes = self.primes_with(&DomainCouple)?;
        Ok(self.spec.get_or_init(|| primes))
    }

    /// Primes for an arbitrary Top couple.
    pub fn primes_with(&self, couple: &dyn TopCouple) -> Result<Vec<PrimeIdeal>> {
        let mut out = Vec::new();
        for n in self.normal_subgroups()? {
            if n.is_whole() || !couple.is_ideal(self, n) {
                continue;
            }
            let q = self.quotient(n)?;
            if couple.is_distinguished(&q.ggroup)? {
                out.push(PrimeIdeal { carrier: n.clone(), quotient: Arc::new(q) });
            }
        }
        Ok(out)
    }

    /// Intersection of all primes; the whole group when there are none.
    pub fn radical(&self) -> Result<ElementSet> {
        Ok(intersect_carriers(&self.ambient, self.spec()?.iter().map(|p| &p.carrier)))
    }

    /// Whether `u: self → other` commutes with the structure maps.
    pub fn is_g_hom(&self, u: &GroupHom, other: &GGroup) -> bool {
        self.shares_base(other)
            && u.source().order() == self.ambient.order()
            && u.target().order() == other.ambient.order()
            && self.base.generators().iter().all(|&g| u.apply(self.embed(g)) == other.embed(g))
    }

    /// `Hom_G(self, other)`: homomorphisms commuting with the structure maps.
    pub fn hom_g_set(&self, other: &GGroup) -> Result<Vec<GroupHom>> {
        if !self.shares_base(other) {
            return Err(Error::GStructure(format!("{} and {} have different base groups", self.label, other.label)));
        }
        let pins = self.base.generators().iter().map(|&g| (self.embed(g), other.embed(g))).collect();
        let constraints = HomConstraints { pins, node_budget: self.limits.hom_budget, ..HomConstraints::default() };
        enumerate_homs(&self.ambient, &other.ambient, &constraints)
    }
}

fn commute_elementwise(h: &FiniteGroup, a: &[Elem], b: &[Elem]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| h.mul(x, y) == h.mul(y, x)))
}

/// Copies the subgroup `g` out as a standalone group; element `i` of the
/// result is the `i`-th smallest member of `g`.
pub(crate) fn extract_subgroup(
    ambient: &FiniteGroup,
    g: &ElementSet,
    name: String,
) -> Result<(FiniteGroup, Vec<Elem>)> {
    let members = g.elements();
    let index: HashMap<Elem, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let m = members.len();
    let mut table = vec![0u16; m * m];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            table[i * m + j] = index[&ambient.mul(a, b)] as u16;
        }
    }
    let perms = members.iter().map(|&x| ambient.perm(x).map(<[u32]>::to_vec)).collect::<Option<Vec<_>>>();
    let group = FiniteGroup::from_parts(name, m, table, perms)?;
    Ok((group, members))
}

pub(crate) fn intersect_carriers<'a>(
    h: &Arc<FiniteGroup>,
    sets: impl IntoIterator<Item = &'a ElementSet>,
) -> ElementSet {
    sets.into_iter().fold(ElementSet::whole(h), |acc, s| acc.intersection(s))
}

/// A normal subgroup meeting `φ(G)` trivially.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub carrier: ElementSet,
}

/// A quotient G-group and its projection.
#[derive(Debug)]
pub struct QuotientGGroup {
    pub ggroup: Arc<GGroup>,
    pub projection: GroupHom,
    pub kernel: ElementSet,
}

/// A prime ideal with its cached quotient.
#[derive(Debug, Clone)]
pub struct PrimeIdeal {
    pub carrier: ElementSet,
    pub quotient: Arc<QuotientGGroup>,
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
    }
}

impl Eq for PrimeIdeal {}

impl PrimeIdeal {
    /// Rechecks the ideal condition, properness and domainhood of the quotient.
    pub fn revalidate(&self, gg: &GGroup) -> bool {
        gg.is_ideal(&self.carrier) && !self.carrier.is_whole() && self.quotient.ggroup.is_g_domain()
    }
}

/// A pair (class of G-groups, distinguished subclass) from which primes and
/// their topology are built: `N` is prime when it is an ideal and the
/// quotient lies in the distinguished subclass.
pub trait TopCouple {
    fn name(&self) -> &str;
    fn is_ideal(&self, gg: &GGroup, n: &ElementSet) -> bool;
    fn is_distinguished(&self, q: &GGroup) -> Result<bool>;
}

/// Ideals meeting `G` trivially; distinguished objects are the G-domains.
#[derive(Debug, Clone, Copy, Default)]
pub struct DomainCouple;

impl TopCouple for DomainCouple {
    fn name(&self) -> &str {
        "domains"
    }

    fn is_ideal(&self, gg: &GGroup, n: &ElementSet) -> bool {
        gg.is_ideal(n)
    }

    fn is_distinguished(&self, q: &GGroup) -> Result<bool> {
        Ok(q.is_g_domain())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cycle_perm, direct_product, DEFAULT_ORDER_CAP};

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::symmetric(3).unwrap().into_arc()
    }

    fn transposition(h: &FiniteGroup, degree: usize, a: usize, b: usize) -> Elem {
        let p: Vec<u32> = cycle_perm(degree, &[a, b]).into_iter().map(|v| v as u32).collect();
        h.find_perm(&p).unwrap()
    }

    #[test]
    fn s3_over_itself() {
        let h = s3();
        let gg = GGroup::over_itself(&h);
        let zd = gg.zero_divisors(ZeroDivisorMode::Fast);
        assert_eq!(zd.len(), 2);
        assert!(zd.iter().all(|x| h.element_order(x) == 3));
        assert_eq!(zd, gg.zero_divisors(ZeroDivisorMode::Oracle));
        assert_eq!(gg.ideals().unwrap().len(), 1);
        assert!(gg.spec().unwrap().is_empty());
        assert!(gg.radical().unwrap().is_whole());
    }

    #[test]
    fn s3_over_z2_has_empty_spec() {
        let h = s3();
        let t = transposition(&h, 3, 0, 1);
        let gg = GGroup::generated_by("S3/Z2", &h, &[t]).unwrap();
        assert_eq!(gg.gsub().len(), 2);
        assert!(gg.spec().unwrap().is_empty());
        assert!(gg.radical().unwrap().is_whole());
    }

    #[test]
    fn a5_is_a_domain_over_itself() {
        let a5 = FiniteGroup::alternating(5).unwrap().into_arc();
        let gg = GGroup::over_itself(&a5);
        assert!(gg.is_g_domain());
        let spec = gg.spec().unwrap();
        assert_eq!(spec.len(), 1);
        assert!(spec[0].carrier.is_trivial());
        assert!(gg.radical().unwrap().is_trivial());
        assert_eq!(gg.nilpotency(1).unwrap(), None);
        assert_eq!(gg.nilpotency(0).unwrap(), Some(1));
    }

    #[test]
    fn a5_times_z2_over_first_factor() {
        let a5 = FiniteGroup::alternating(5).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let h = direct_product(&a5, &z2, DEFAULT_ORDER_CAP).unwrap().into_arc();
        let first: Vec<Elem> = (0..60).map(|a| a * 2).collect();
        let g = ElementSet::from_elements(&h, first).unwrap();
        let gg = GGroup::from_subgroup("A5xZ2/first", &h, &g).unwrap();
        // (1, z) is central
        assert_eq!(gg.nilpotency(1).unwrap(), Some(2));
        let nil = gg.nil_subgroup();
        assert_eq!(nil.elements(), vec![0, 1]);
        let spec = gg.spec().unwrap();
        assert_eq!(spec.len(), 1);
        assert_eq!(spec[0].carrier.elements(), vec![0, 1]);
        assert!(spec[0].revalidate(&gg));
    }

    #[test]
    fn embedding_must_be_injective_hom() {
        let h = s3();
        let z2 = FiniteGroup::cyclic(2).unwrap().into_arc();
        let t = transposition(&h, 3, 0, 1);
        let c = h.elements().find(|&x| h.element_order(x) == 3).unwrap();
        assert!(GGroup::new("ok", z2.clone(), h.clone(), vec![0, t]).is_ok());
        assert!(GGroup::new("not injective", z2.clone(), h.clone(), vec![0, 0]).is_err());
        assert!(GGroup::new("not a hom", z2, h.clone(), vec![0, c]).is_err());
        let not_closed = ElementSet::from_elements(&h, [0, t, c]).unwrap();
        assert!(GGroup::from_subgroup("x", &h, &not_closed).is_err());
    }

    #[test]
    fn invertible_elements() {
        let s5 = FiniteGroup::symmetric(5).unwrap().into_arc();
        let whole = ElementSet::whole(&s5);
        let a5 = commutator_subgroup(&s5, &whole, &whole).unwrap();
        assert_eq!(a5.len(), 60);
        let gg = GGroup::from_subgroup("S5/A5", &s5, &a5).unwrap();
        let t = transposition(&s5, 5, 0, 1);
        assert!(gg.is_invertible(t).unwrap());
        assert!(!gg.is_invertible(0).unwrap());
        assert!(gg.is_g_simple().unwrap());
        assert!(gg.is_g_domain());
        assert!(gg.g_conjugate(0, t).is_err());
    }
}
