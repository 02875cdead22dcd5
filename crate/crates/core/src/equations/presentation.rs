use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use super::parser::EquationSystem;
use super::solve::{solve, SolveOptions};
use super::word::GWord;
use crate::error::{Error, Result};
use crate::ggroup::GGroup;
use crate::group::{direct_product, Elem, FiniteGroup, GroupHom};

/// `G * F(X₁..Xₙ)` modulo the normal closure of finitely many relators.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub coefficients: Arc<FiniteGroup>,
    pub nvars: usize,
    pub relators: Vec<GWord>,
}

impl Presentation {
    pub fn new(coefficients: Arc<FiniteGroup>, nvars: usize, relators: Vec<GWord>) -> Self {
        let relators = relators.into_iter().map(|w| w.with_nvars(nvars)).collect();
        Self { coefficients, nvars, relators }
    }

    /// The relators read as equations `r = 1`.
    pub fn system(&self) -> EquationSystem {
        EquationSystem::new(self.coefficients.clone(), self.nvars).with_equalities(self.relators.iter().cloned())
    }
}

impl From<&EquationSystem> for Presentation {
    fn from(sys: &EquationSystem) -> Self {
        Self::new(sys.base.clone(), sys.nvars, sys.equalities.clone())
    }
}

/// Variables of `q` are renamed after those of `p`; relators are concatenated.
pub fn product_presentation(p: &Presentation, q: &Presentation) -> Result<Presentation> {
    if !p.coefficients.same_table(&q.coefficients) {
        return Err(Error::GStructure("presentations over different coefficient groups".into()));
    }
    let nvars = p.nvars + q.nvars;
    let shift: Vec<usize> = (p.nvars..nvars).collect();
    let mut relators: Vec<GWord> = p.relators.iter().map(|w| w.clone().with_nvars(nvars)).collect();
    relators.extend(q.relators.iter().map(|w| w.map_vars(&shift, nvars, &p.coefficients)));
    Ok(Presentation::new(p.coefficients.clone(), nvars, relators))
}

/// Re-reads the constants of `p` inside the ambient group of `h`, which
/// must have `p`'s coefficient group as its base.
pub fn rebase_presentation(p: &Presentation, h: &GGroup) -> Result<Presentation> {
    if !p.coefficients.same_table(h.base()) {
        return Err(Error::GStructure(format!(
            "constants of the presentation do not lie in the base group of {}",
            h.label()
        )));
    }
    let ambient = h.ambient();
    let relators = p.relators.iter().map(|w| w.map_consts(|c| h.embed(c), ambient)).collect();
    Ok(Presentation::new(ambient.clone(), p.nvars, relators))
}

/// `|V_L(p × q)| = |V_L(p)|·|V_L(q)|` with the pairing checked tuple by tuple.
#[derive(Debug, Clone, Serialize)]
pub struct ProductReport {
    pub target: String,
    pub left: usize,
    pub right: usize,
    pub product: usize,
    pub bijective: bool,
}

pub fn product_check(p: &Presentation, q: &Presentation, target: &GGroup, opts: SolveOptions) -> Result<ProductReport> {
    let pq = product_presentation(p, q)?;
    let vp = solve(&p.system(), target, opts)?;
    let vq = solve(&q.system(), target, opts)?;
    let vpq = solve(&pq.system(), target, opts)?;
    let mut paired = Vec::with_capacity(vp.count * vq.count);
    for s in &vp.tuples {
        for t in &vq.tuples {
            paired.push(s.iter().chain(t).copied().collect::<Vec<Elem>>());
        }
    }
    // both lists are lexicographic, so equality is the bijection
    let bijective = paired == vpq.tuples;
    Ok(ProductReport {
        target: target.label().to_string(),
        left: vp.count,
        right: vq.count,
        product: vpq.count,
        bijective,
    })
}

/// Solutions of the relators in `k` against G-homomorphisms out of a finite
/// group presented by them.
#[derive(Debug, Clone, Serialize)]
pub struct SolutionHomReport {
    pub target: String,
    pub solutions: usize,
    /// Every listed solution kills every relator when re-evaluated.
    pub solutions_verified: bool,
    pub homs: Option<usize>,
    pub bijective: Option<bool>,
}

/// `presented`, when given, is a finite G-group with the images of
/// `X₁..Xₙ`; the map `u ↦ (u(x₁),…,u(xₙ))` is then checked to be a bijection
/// `Hom_G(presented, k) → V_k(relators)`.
pub fn solution_hom_bijection(
    pres: &Presentation,
    k: &GGroup,
    presented: Option<(&GGroup, &[Elem])>,
    opts: SolveOptions,
) -> Result<SolutionHomReport> {
    let sys = pres.system();
    let sol = solve(&sys, k, opts)?;
    let solutions_verified = sol.tuples.iter().all(|t| pres.relators.iter().all(|r| r.evaluate(k, t) == 0));
    let mut report = SolutionHomReport {
        target: k.label().to_string(),
        solutions: sol.count,
        solutions_verified,
        homs: None,
        bijective: None,
    };
    if let Some((h, xs)) = presented {
        if xs.len() != pres.nvars {
            return Err(Error::Precondition("one image per variable is required".into()));
        }
        let homs = h.hom_g_set(k)?;
        let images: HashSet<Vec<Elem>> = homs.iter().map(|u| xs.iter().map(|&x| u.apply(x)).collect()).collect();
        let sols: HashSet<Vec<Elem>> = sol.tuples.iter().cloned().collect();
        report.homs = Some(homs.len());
        report.bijective = Some(images.len() == homs.len() && images == sols);
    }
    Ok(report)
}

/// `Hom_G(L, H × K) ↔ Hom_G(L, H) × Hom_G(L, K)` with `G` embedded diagonally.
#[derive(Debug, Clone, Serialize)]
pub struct SumReport {
    pub into_product: usize,
    pub into_left: usize,
    pub into_right: usize,
    pub bijective: bool,
}

/// The product `H × K` with `G` embedded diagonally.
pub fn diagonal_product(h: &GGroup, k: &GGroup) -> Result<GGroup> {
    if !h.shares_base(k) {
        return Err(Error::GStructure("factors have different base groups".into()));
    }
    let nk = k.ambient().order();
    let prod = Arc::new(direct_product(h.ambient(), k.ambient(), h.limits().order_cap)?);
    let emb = (0..h.base().order()).map(|g| h.embed(g) * nk + k.embed(g)).collect();
    Ok(GGroup::new(format!("{}x{}", h.label(), k.label()), h.base().clone(), prod, emb)?.with_limits(*h.limits()))
}

pub fn sum_check(l: &GGroup, h: &GGroup, k: &GGroup) -> Result<SumReport> {
    let hk = diagonal_product(h, k)?;
    let nk = k.ambient().order();
    let into_product = l.hom_g_set(&hk)?;
    let into_left = l.hom_g_set(h)?;
    let into_right = l.hom_g_set(k)?;
    let left: HashSet<&[Elem]> = into_left.iter().map(GroupHom::map).collect();
    let right: HashSet<&[Elem]> = into_right.iter().map(GroupHom::map).collect();
    let mut pairs = HashSet::new();
    let mut ok = true;
    for u in &into_product {
        let a: Vec<Elem> = u.map().iter().map(|&x| x / nk).collect();
        let b: Vec<Elem> = u.map().iter().map(|&x| x % nk).collect();
        ok &= left.contains(a.as_slice()) && right.contains(b.as_slice());
        pairs.insert((a, b));
    }
    let bijective = ok && pairs.len() == into_product.len() && pairs.len() == into_left.len() * into_right.len();
    Ok(SumReport {
        into_product: into_product.len(),
        into_left: into_left.len(),
        into_right: into_right.len(),
        bijective,
    })
}
