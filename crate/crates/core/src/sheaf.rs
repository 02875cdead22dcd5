//! The structure presheaf `U ↦ H/Rad(U)` on a spectrum, its stalks, its
//! sheaf of compatible germ families, and morphisms of affine schemes.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ggroup::intersect_carriers;
use crate::group::{quotient, Elem, ElementSet, GroupHom, Quotient};
use crate::spectrum::{induced_map, PointSet, SpecSpace};

const UNSET: Elem = usize::MAX;

/// `Rad(U)`: intersection of the primes in `U`; the whole group for `U = ∅`.
pub fn rad_of_open(space: &SpecSpace, u: &PointSet) -> Result<ElementSet> {
    require_open(space, u)?;
    Ok(rad_unchecked(space, u))
}

fn rad_unchecked(space: &SpecSpace, u: &PointSet) -> ElementSet {
    intersect_carriers(space.ggroup().ambient(), u.ones().map(|i| &space.points()[i].carrier))
}

fn require_open(space: &SpecSpace, u: &PointSet) -> Result<()> {
    if u.len() != space.len() || !space.is_open(u) {
        return Err(Error::Precondition("set of points is not open".into()));
    }
    Ok(())
}

/// `P_H(U) = H/Rad(U)`.
#[derive(Debug, Clone)]
pub struct PresheafSection {
    pub open: PointSet,
    pub value: Quotient,
}

impl PresheafSection {
    pub fn order(&self) -> usize {
        self.value.order()
    }
}

pub fn presheaf_section(space: &SpecSpace, u: &PointSet) -> Result<PresheafSection> {
    let rad = rad_of_open(space, u)?;
    Ok(PresheafSection { open: u.clone(), value: quotient(space.ggroup().ambient(), &rad)? })
}

/// The canonical surjection `P_H(U) → P_H(V)` for `V ⊆ U`.
pub fn restriction(from: &PresheafSection, to: &PresheafSection) -> Result<GroupHom> {
    if !to.open.is_subset(&from.open) {
        return Err(Error::Precondition("restriction to a set that is not contained in the open".into()));
    }
    Ok(quotient_map(&from.value, &to.value))
}

/// `H/N → H/M` for `N ⊆ M`, through coset representatives.
fn quotient_map(from: &Quotient, to: &Quotient) -> GroupHom {
    debug_assert!(from.kernel.is_subset(&to.kernel));
    let map = from.reps.iter().map(|&r| to.project(r)).collect();
    GroupHom::new_unchecked(from.group.clone(), to.group.clone(), map)
}

/// The presheaf together with stalks at every point, computed once.
#[derive(Debug)]
pub struct StructureSheaf {
    space: Arc<SpecSpace>,
    opens: Vec<PointSet>,
    sections: Vec<PresheafSection>,
    /// Index into `opens` of each point's minimal open.
    stalk_open: Vec<usize>,
}

impl StructureSheaf {
    pub fn new(space: Arc<SpecSpace>) -> Result<Self> {
        let opens = space.open_sets();
        let sections = opens.iter().map(|u| presheaf_section(&space, u)).collect::<Result<Vec<_>>>()?;
        let stalk_open = (0..space.len())
            .map(|p| {
                let m = space.minimal_open(p);
                opens.iter().position(|u| *u == m).expect("minimal opens are open")
            })
            .collect();
        Ok(Self { space, opens, sections, stalk_open })
    }

    pub fn space(&self) -> &Arc<SpecSpace> {
        &self.space
    }

    /// Open sets, ordered by size and then by member list.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    fn open_index(&self, u: &PointSet) -> Result<usize> {
        self.opens.iter().position(|v| v == u).ok_or_else(|| Error::Precondition("set of points is not open".into()))
    }

    pub fn presheaf(&self, u: &PointSet) -> Result<&PresheafSection> {
        Ok(&self.sections[self.open_index(u)?])
    }

    pub fn restriction(&self, u: &PointSet, v: &PointSet) -> Result<GroupHom> {
        restriction(self.presheaf(u)?, self.presheaf(v)?)
    }

    /// The stalk at `p`: `P_H` of the smallest open containing `p`.
    pub fn stalk(&self, p: usize) -> &PresheafSection {
        &self.sections[self.stalk_open[p]]
    }

    /// The germ at `p` of an element of `H`.
    pub fn germ(&self, p: usize, x: Elem) -> Elem {
        self.stalk(p).value.project(x)
    }

    /// Stalk transition `stalk(p) → stalk(q)` for `q` in the minimal open of `p`.
    fn transition(&self, p: usize, q: usize) -> GroupHom {
        quotient_map(&self.stalk(p).value, &self.stalk(q).value)
    }

    /// Pairs `(p, q)` of points of `u` with `q ≠ p` in the minimal open of `p`.
    fn constraints(&self, u: &PointSet) -> Vec<(usize, usize, GroupHom)> {
        let mut out = Vec::new();
        for p in u.ones() {
            for q in self.stalk(p).open.ones() {
                if q != p {
                    out.push((p, q, self.transition(p, q)));
                }
            }
        }
        out
    }

    /// Sections of the associated sheaf over `u`: germ families compatible
    /// under stalk transitions. Families are listed only when the product of
    /// stalk orders is at most the section cap; they are always counted.
    pub fn sheaf_sections(&self, u: &PointSet) -> Result<SheafSections> {
        self.open_index(u)?;
        let cap = self.space.ggroup().limits().section_cap;
        let points: Vec<usize> = u.ones().collect();
        let mut product: u64 = 1;
        for &p in &points {
            product = product.saturating_mul(self.stalk(p).order() as u64);
        }
        let list = product <= cap;
        let constraints = self.constraints(u);
        // a point in some other point's minimal open has a forced germ
        let forced: HashSet<usize> = constraints.iter().map(|&(_, q, _)| q).collect();
        let mut roots: Vec<usize> = points.iter().copied().filter(|p| !forced.contains(p)).collect();
        // points on a cycle of the specialization preorder have no root; any
        // representative works since the constraints are checked at the leaves
        for &p in &points {
            if !roots.iter().any(|&r| self.stalk(r).open.contains(p)) {
                roots.push(p);
            }
        }
        let mut search = SectionSearch {
            sheaf: self,
            roots,
            constraints,
            germs: vec![UNSET; self.space.len()],
            count: 0,
            budget: cap.max(self.space.ggroup().limits().solve_budget),
            listed: if list { Some(Vec::new()) } else { None },
        };
        search.descend(0)?;
        Ok(SheafSections { open: u.clone(), stalk_product: product, count: search.count, families: search.listed })
    }

    /// The canonical map `P_H(U) → O_H(U)`, `x ↦ (germ_p(x))_p`.
    pub fn comparison(&self, u: &PointSet) -> Result<ComparisonReport> {
        let pre = self.presheaf(u)?;
        let sections = self.sheaf_sections(u)?;
        let mut images = HashSet::new();
        for &r in &pre.value.reps {
            let germs: Vec<Elem> = u.ones().map(|p| self.germ(p, r)).collect();
            images.insert(germs);
        }
        let rad = &pre.value.kernel;
        let local = intersect_carriers(self.space.ggroup().ambient(), u.ones().map(|p| &self.stalk(p).value.kernel));
        Ok(ComparisonReport {
            open: u.ones().collect(),
            presheaf_order: pre.order(),
            sheaf_sections: sections.count,
            injective: images.len() == pre.order(),
            surjective: images.len() as u64 == sections.count,
            hypothesis_holds: &local == rad,
        })
    }

    /// `r_{U,U} = id` and `r_{V,W} ∘ r_{U,V} = r_{U,W}` for all `W ⊆ V ⊆ U`.
    pub fn check_functoriality(&self) -> Result<bool> {
        let n = self.opens.len();
        let r = |i: usize, j: usize| quotient_map(&self.sections[i].value, &self.sections[j].value);
        for i in 0..n {
            if r(i, i).map() != GroupHom::identity(&self.sections[i].value.group).map() {
                return Ok(false);
            }
            for j in 0..n {
                if !self.opens[j].is_subset(&self.opens[i]) {
                    continue;
                }
                let rij = r(i, j);
                for k in 0..n {
                    if self.opens[k].is_subset(&self.opens[j]) && rij.then(&r(j, k))?.map() != r(i, k).map() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// For every `U ∋ p`, `Rad(U) ⊆ Rad(minimal open of p)`, so `P_H(U)`
    /// maps to the stalk at `p`, and these maps commute with restriction.
    pub fn check_stalk_consistency(&self) -> Result<bool> {
        for p in 0..self.space.len() {
            let stalk = self.stalk(p);
            for (i, u) in self.opens.iter().enumerate() {
                if !u.contains(p) {
                    continue;
                }
                let s = &self.sections[i];
                if !s.value.kernel.is_subset(&stalk.value.kernel) {
                    return Ok(false);
                }
                let direct = quotient_map(&s.value, &stalk.value);
                for (j, v) in self.opens.iter().enumerate() {
                    if v.contains(p) && v.is_subset(u) {
                        let via = quotient_map(&s.value, &self.sections[j].value)
                            .then(&quotient_map(&self.sections[j].value, &stalk.value))?;
                        if via.map() != direct.map() {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Locality and gluing for every cover of every open set by open sets.
    pub fn check_sheaf_axioms(&self) -> Result<SheafAxiomReport> {
        let mut report = SheafAxiomReport { opens: self.opens.len(), covers: 0, locality: true, gluing: true };
        let all: Vec<SheafSections> = self.opens.iter().map(|u| self.sheaf_sections(u)).collect::<Result<_>>()?;
        if all.iter().any(|s| s.families.is_none()) {
            return Err(Error::EnumerationCap {
                what: "sheaf sections",
                cap: self.space.ggroup().limits().section_cap as usize,
            });
        }
        if self.opens.len() > 20 {
            return Err(Error::EnumerationCap { what: "open covers", cap: 20 });
        }
        for (ui, u) in self.opens.iter().enumerate() {
            let subs: Vec<usize> = (0..self.opens.len()).filter(|&j| self.opens[j].is_subset(u)).collect();
            for mask in 1u64..(1u64 << subs.len()) {
                let cover: Vec<usize> =
                    subs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &j)| j).collect();
                let mut union = self.space.empty_set();
                for &j in &cover {
                    union.union_with(&self.opens[j]);
                }
                if &union != u {
                    continue;
                }
                report.covers += 1;
                let (local, glue) = self.check_cover(&all, ui, &cover);
                report.locality &= local;
                report.gluing &= glue;
            }
        }
        Ok(report)
    }

    fn check_cover(&self, all: &[SheafSections], u: usize, cover: &[usize]) -> (bool, bool) {
        let sections = all[u].families.as_ref().expect("listed");
        let n = self.space.len();
        let full = |family: &Vec<Elem>, open: &PointSet| {
            let mut g = vec![UNSET; n];
            for (&p, &x) in open.ones().collect::<Vec<_>>().iter().zip(family) {
                g[p] = x;
            }
            g
        };
        let own: HashSet<Vec<Elem>> = sections.iter().map(|f| full(f, &self.opens[u])).collect();
        // locality: restricting to the pieces loses nothing
        let restricted: HashSet<Vec<Vec<Elem>>> =
            own.iter().map(|g| cover.iter().map(|&j| self.opens[j].ones().map(|p| g[p]).collect()).collect()).collect();
        let locality = restricted.len() == own.len();
        // gluing: every family agreeing on overlaps comes from a section
        let mut glued = 0u64;
        let mut ok = true;
        let mut germs = vec![UNSET; n];
        self.glue(all, cover, 0, &mut germs, &own, &mut glued, &mut ok);
        (locality, ok && glued == own.len() as u64)
    }

    #[allow(clippy::too_many_arguments)]
    fn glue(
        &self,
        all: &[SheafSections],
        cover: &[usize],
        level: usize,
        germs: &mut Vec<Elem>,
        own: &HashSet<Vec<Elem>>,
        glued: &mut u64,
        ok: &mut bool,
    ) {
        if level == cover.len() {
            *glued += 1;
            *ok &= own.contains(germs);
            return;
        }
        let open = &self.opens[cover[level]];
        let points: Vec<usize> = open.ones().collect();
        for family in all[cover[level]].families.as_ref().expect("listed") {
            if points.iter().zip(family).any(|(&p, &x)| germs[p] != UNSET && germs[p] != x) {
                continue;
            }
            let saved = germs.clone();
            for (&p, &x) in points.iter().zip(family) {
                germs[p] = x;
            }
            self.glue(all, cover, level + 1, germs, own, glued, ok);
            *germs = saved;
        }
    }

    /// Presheaf orders and restriction kernels, for export.
    pub fn to_json(&self) -> PresheafJson {
        let mut restrictions = Vec::new();
        for (i, u) in self.opens.iter().enumerate() {
            for (j, v) in self.opens.iter().enumerate() {
                if i != j && v.is_subset(u) {
                    let r = quotient_map(&self.sections[i].value, &self.sections[j].value);
                    restrictions.push(RestrictionJson { from: i, to: j, kernel_order: r.kernel().len() });
                }
            }
        }
        PresheafJson {
            opens: self
                .opens
                .iter()
                .zip(&self.sections)
                .map(|(u, s)| OpenJson {
                    points: u.ones().collect(),
                    order: s.order(),
                    radical_order: s.value.kernel.len(),
                })
                .collect(),
            restrictions,
            stalk_orders: (0..self.space.len()).map(|p| self.stalk(p).order()).collect(),
        }
    }
}

struct SectionSearch<'a> {
    sheaf: &'a StructureSheaf,
    roots: Vec<usize>,
    constraints: Vec<(usize, usize, GroupHom)>,
    germs: Vec<Elem>,
    count: u64,
    budget: u64,
    listed: Option<Vec<Vec<Elem>>>,
}

impl SectionSearch<'_> {
    fn descend(&mut self, level: usize) -> Result<()> {
        if level == self.roots.len() {
            return self.leaf();
        }
        let p = self.roots[level];
        let saved = self.germs.clone();
        for x in 0..self.sheaf.stalk(p).order() {
            if saved[p] != UNSET && saved[p] != x {
                continue;
            }
            self.germs.clone_from(&saved);
            self.germs[p] = x;
            if self.propagate(p) {
                self.descend(level + 1)?;
            }
        }
        self.germs = saved;
        Ok(())
    }

    /// Forces germs below `p`; false on a clash.
    fn propagate(&mut self, p: usize) -> bool {
        let mut stack = vec![p];
        while let Some(a) = stack.pop() {
            for (from, to, t) in &self.constraints {
                if *from != a {
                    continue;
                }
                let y = t.apply(self.germs[a]);
                match self.germs[*to] {
                    UNSET => {
                        self.germs[*to] = y;
                        stack.push(*to);
                    }
                    v if v != y => return false,
                    _ => {}
                }
            }
        }
        true
    }

    fn leaf(&mut self) -> Result<()> {
        if self.constraints.iter().any(|(p, q, t)| t.apply(self.germs[*p]) != self.germs[*q]) {
            return Ok(());
        }
        self.count += 1;
        if self.count > self.budget {
            return Err(Error::BudgetExceeded { what: "sheaf sections", budget: self.budget });
        }
        if let Some(list) = &mut self.listed {
            list.push(self.germs.iter().copied().filter(|&g| g != UNSET).collect());
        }
        Ok(())
    }
}

/// Germ families over an open set, one germ per point in increasing order.
#[derive(Debug, Clone)]
pub struct SheafSections {
    pub open: PointSet,
    pub stalk_product: u64,
    pub count: u64,
    pub families: Option<Vec<Vec<Elem>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub open: Vec<usize>,
    pub presheaf_order: usize,
    pub sheaf_sections: u64,
    pub injective: bool,
    pub surjective: bool,
    /// `Rad(U)` equals the intersection of the radicals of the minimal opens.
    pub hypothesis_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SheafAxiomReport {
    pub opens: usize,
    pub covers: usize,
    pub locality: bool,
    pub gluing: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresheafJson {
    pub opens: Vec<OpenJson>,
    pub restrictions: Vec<RestrictionJson>,
    pub stalk_orders: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OpenJson {
    pub points: Vec<usize>,
    pub order: usize,
    pub radical_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RestrictionJson {
    pub from: usize,
    pub to: usize,
    pub kernel_order: usize,
}

/// A morphism of affine schemes `Spec H → Spec L`: a continuous point map
/// and, for every open `V` of `Spec L`, a map `O_L(V) → O_H(c⁻¹V)`.
#[derive(Debug, Clone)]
pub struct SchemeMorphism {
    pub point_map: Vec<usize>,
    /// `(V, c⁻¹V, map)` for each open `V` of the target spectrum.
    pub section_maps: Vec<(PointSet, PointSet, GroupHom)>,
}

impl PartialEq for SchemeMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.point_map == other.point_map
            && self.section_maps.len() == other.section_maps.len()
            && self
                .section_maps
                .iter()
                .zip(&other.section_maps)
                .all(|(a, b)| a.0 == b.0 && a.1 == b.1 && a.2.map() == b.2.map())
    }
}

impl Eq for SchemeMorphism {}

fn require_trivial_radical(sheaf: &StructureSheaf) -> Result<()> {
    let space = sheaf.space();
    if !rad_unchecked(space, &space.full_set()).is_trivial() {
        return Err(Error::Precondition(format!("{} has a nontrivial radical", space.ggroup().label())));
    }
    Ok(())
}

/// The scheme morphism `Spec H → Spec L` induced by a G-homomorphism
/// `u: L → H`. Both G-groups must have trivial radical.
pub fn scheme_morphism_from_hom(u: &GroupHom, l: &StructureSheaf, h: &StructureSheaf) -> Result<SchemeMorphism> {
    require_trivial_radical(l)?;
    require_trivial_radical(h)?;
    let point_map = induced_map(u, l.space(), h.space())?;
    let mut section_maps = Vec::new();
    for v in l.opens() {
        let pre = SpecSpace::pull_back(&point_map, v, h.space().len());
        let from = l.presheaf(v)?;
        let to = h.presheaf(&pre)?;
        if !u.image_of(&from.value.kernel).is_subset(&to.value.kernel) {
            return Err(Error::Internal("section map is not well defined".into()));
        }
        let map = from.value.reps.iter().map(|&r| to.value.project(u.apply(r))).collect();
        section_maps.push((
            v.clone(),
            pre,
            GroupHom::new_unchecked(from.value.group.clone(), to.value.group.clone(), map),
        ));
    }
    let m = SchemeMorphism { point_map, section_maps };
    if !commutes_with_restrictions(&m, l, h)? {
        return Err(Error::Internal("section maps do not commute with restriction".into()));
    }
    Ok(m)
}

/// Checks `r ∘ m_V = m_W ∘ r` for all opens `W ⊆ V`.
pub fn commutes_with_restrictions(m: &SchemeMorphism, l: &StructureSheaf, h: &StructureSheaf) -> Result<bool> {
    for (v, pv, mv) in &m.section_maps {
        for (w, pw, mw) in &m.section_maps {
            if !w.is_subset(v) {
                continue;
            }
            let left = mv.then(&h.restriction(pv, pw)?)?;
            let right = l.restriction(v, w)?.then(mw)?;
            if left.map() != right.map() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The map on global sections, `L = O_L(Spec L) → O_H(Spec H) = H`.
pub fn global_hom(m: &SchemeMorphism, l: &StructureSheaf, h: &StructureSheaf) -> Result<GroupHom> {
    require_trivial_radical(l)?;
    require_trivial_radical(h)?;
    let whole = l.space().full_set();
    let (_, pre, map) = m
        .section_maps
        .iter()
        .find(|(v, _, _)| *v == whole)
        .ok_or_else(|| Error::Internal("no section map on the whole space".into()))?;
    if *pre != h.space().full_set() {
        return Err(Error::Internal("preimage of the whole space is not the whole space".into()));
    }
    let (lg, hg) = (l.space().ggroup().ambient(), h.space().ggroup().ambient());
    GroupHom::new(lg.clone(), hg.clone(), map.map().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ggroup::GGroup;
    use crate::group::{direct_product, FiniteGroup, DEFAULT_ORDER_CAP};

    fn diag_sheaf() -> StructureSheaf {
        let a5 = FiniteGroup::alternating(5).unwrap().into_arc();
        let h = direct_product(&a5, &a5, DEFAULT_ORDER_CAP).unwrap().into_arc();
        let emb = (0..60).map(|a| a * 60 + a).collect();
        let gg = Arc::new(GGroup::new("A5xA5/diag", a5, h, emb).unwrap());
        StructureSheaf::new(Arc::new(SpecSpace::new(gg).unwrap())).unwrap()
    }

    #[test]
    fn diagonal_presheaf_and_sections() {
        let sheaf = diag_sheaf();
        let space = sheaf.space().clone();
        let whole = space.full_set();
        assert_eq!(sheaf.presheaf(&whole).unwrap().order(), 3600);
        for p in 0..2 {
            assert_eq!(sheaf.stalk(p).order(), 60);
            assert_eq!(sheaf.restriction(&whole, &space.singleton(p)).unwrap().image().len(), 60);
        }
        let all = sheaf.sheaf_sections(&whole).unwrap();
        assert_eq!(all.count, 3600);
        assert_eq!(sheaf.sheaf_sections(&space.empty_set()).unwrap().count, 1);
        let cmp = sheaf.comparison(&whole).unwrap();
        assert!(cmp.injective && cmp.surjective && cmp.hypothesis_holds);
        assert!(sheaf.check_functoriality().unwrap());
        assert!(sheaf.check_stalk_consistency().unwrap());
        let axioms = sheaf.check_sheaf_axioms().unwrap();
        assert!(axioms.locality && axioms.gluing);
        assert!(axioms.covers > 0);
    }

    #[test]
    fn rad_of_empty_open_is_everything() {
        let sheaf = diag_sheaf();
        let space = sheaf.space();
        assert!(rad_of_open(space, &space.empty_set()).unwrap().is_whole());
        assert_eq!(rad_of_open(space, &space.singleton(0)).unwrap().len(), 60);
    }

    #[test]
    fn identity_round_trip() {
        let sheaf = diag_sheaf();
        let h = sheaf.space().ggroup().ambient().clone();
        let id = GroupHom::identity(&h);
        let m = scheme_morphism_from_hom(&id, &sheaf, &sheaf).unwrap();
        assert_eq!(m.point_map, vec![0, 1]);
        assert_eq!(global_hom(&m, &sheaf, &sheaf).unwrap(), id);
    }
}
