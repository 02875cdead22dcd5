//! Rank, dimension and G-points.

use std::fmt;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ggroup::GGroup;
use crate::group::subgroup::Span;
use crate::group::{commutator_subgroup, Elem, ElementSet};

/// How extra elements together with `φ(G)` are required to generate `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Generation {
    /// As a subgroup.
    Plain,
    /// As a normal subgroup.
    Normal,
}

impl fmt::Display for Generation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generation::Plain => "plain",
            Generation::Normal => "normal",
        })
    }
}

impl std::str::FromStr for Generation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Generation::Plain),
            "normal" => Ok(Generation::Normal),
            other => Err(Error::Input(format!("unknown generation mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankResult {
    pub mode: Generation,
    pub rank: usize,
    /// The lexicographically least generating tuple of that size.
    pub witness: Vec<Elem>,
}

fn close(span: &mut Span<'_>, mode: Generation) {
    if mode == Generation::Normal {
        span.normalize();
    }
}

/// Whether `φ(G)` together with `extra` generates the ambient group.
pub fn generates(gg: &GGroup, extra: &[Elem], mode: Generation) -> bool {
    let h = gg.ambient();
    let mut span = Span::from_seed(h, gg.g_generators().iter().chain(extra).copied());
    close(&mut span, mode);
    span.len() == h.order()
}

/// Least member of each double coset `φ(G)·x·φ(G)` other than `φ(G)`.
fn double_coset_minima(gg: &GGroup) -> Vec<Elem> {
    let h = gg.ambient();
    let g = gg.gsub().elements();
    let mut seen = FixedBitSet::with_capacity(h.order());
    let mut out = Vec::new();
    for x in h.elements() {
        if seen.contains(x) {
            continue;
        }
        for &a in &g {
            let ax = h.mul(a, x);
            for &b in &g {
                seen.insert(h.mul(ax, b));
            }
        }
        if !gg.gsub().contains(x) {
            out.push(x);
        }
    }
    out
}

/// The least number of elements that generate the ambient group together
/// with `φ(G)`, searching tuples of size at most `cap`.
///
/// Every entry of the least witness is the least member of its double coset
/// and the entries strictly increase, so only such tuples are tried, in
/// lexicographic order.
pub fn g_rank(gg: &GGroup, mode: Generation, cap: usize) -> Result<RankResult> {
    let h = gg.ambient();
    let mut base = Span::from_seed(h, gg.g_generators().iter().copied());
    close(&mut base, mode);
    if base.len() == h.order() {
        return Ok(RankResult { mode, rank: 0, witness: Vec::new() });
    }
    let reps = double_coset_minima(gg);
    for k in 1..=cap {
        let mut prefix = vec![base.clone()];
        let mut last: Vec<Elem> = Vec::new();
        for tuple in reps.iter().copied().combinations(k) {
            // reuse spans of the shared prefix
            let shared = last.iter().zip(&tuple).take_while(|(a, b)| a == b).count().min(k - 1);
            prefix.truncate(shared + 1);
            for &x in &tuple[shared..k - 1] {
                let mut next = prefix.last().unwrap().clone();
                next.add(x);
                close(&mut next, mode);
                prefix.push(next);
            }
            let mut leaf = prefix.last().unwrap().clone();
            leaf.add(tuple[k - 1]);
            close(&mut leaf, mode);
            if leaf.len() == h.order() {
                return Ok(RankResult { mode, rank: k, witness: tuple });
            }
            last = tuple;
        }
    }
    Err(Error::EnumerationCap { what: "G-rank search", cap })
}

/// `−∞` for an empty spectrum, otherwise the rank of `H/Rad(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dimension {
    NegInfinity,
    Finite(RankResult),
}

impl Dimension {
    pub fn value(&self) -> Option<usize> {
        match self {
            Dimension::NegInfinity => None,
            Dimension::Finite(r) => Some(r.rank),
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::NegInfinity => f.write_str("-inf"),
            Dimension::Finite(r) => write!(f, "{}", r.rank),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::NegInfinity => s.serialize_str("-inf"),
            Dimension::Finite(r) => s.serialize_u64(r.rank as u64),
        }
    }
}

pub fn dimension(gg: &GGroup, mode: Generation, cap: usize) -> Result<Dimension> {
    if gg.spec()?.is_empty() {
        return Ok(Dimension::NegInfinity);
    }
    let rad = gg.radical()?;
    let q = gg.quotient(&rad)?;
    Ok(Dimension::Finite(g_rank(&q.ggroup, mode, cap)?))
}

/// Indices into the spectrum of the primes `P` with `G → H/P` bijective.
pub fn g_points(gg: &GGroup) -> Result<Vec<usize>> {
    let g = gg.gsub().len();
    Ok(gg
        .spec()?
        .iter()
        .enumerate()
        .filter(|(_, p)| p.quotient.ggroup.ambient().order() == g)
        .map(|(i, _)| i)
        .collect())
}

/// Conditions for `H` to be the internal direct product `P × φ(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct SplitReport {
    pub commute: bool,
    pub product_is_whole: bool,
    pub trivial_meet: bool,
    pub passed: bool,
}

pub fn split_check(gg: &GGroup, p: &ElementSet) -> Result<SplitReport> {
    if !gg.gsub_is_normal() {
        return Err(Error::Precondition(format!("G is not normal in {}", gg.label())));
    }
    let h = gg.ambient();
    let g = gg.gsub().clone().certify();
    let commute = commutator_subgroup(h, p, &g)?.is_trivial();
    let mut prod = FixedBitSet::with_capacity(h.order());
    for a in p.iter() {
        for b in g.iter() {
            prod.insert(h.mul(a, b));
        }
    }
    let product_is_whole = prod.count_ones(..) == h.order();
    let trivial_meet = p.intersection(&g).is_trivial();
    Ok(SplitReport { commute, product_is_whole, trivial_meet, passed: commute && product_is_whole && trivial_meet })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, FiniteGroup, DEFAULT_ORDER_CAP};
    use std::sync::Arc;

    fn first() -> GGroup {
        let a5 = FiniteGroup::alternating(5).unwrap().into_arc();
        let h = direct_product(&a5, &a5, DEFAULT_ORDER_CAP).unwrap().into_arc();
        GGroup::new("A5xA5/first", a5, h, (0..60).map(|a| a * 60).collect()).unwrap()
    }

    #[test]
    fn first_factor_ranks() {
        let gg = first();
        let plain = g_rank(&gg, Generation::Plain, 3).unwrap();
        let normal = g_rank(&gg, Generation::Normal, 3).unwrap();
        assert_eq!(plain.rank, 2);
        assert_eq!(normal.rank, 1);
        assert!(generates(&gg, &plain.witness, Generation::Plain));
        assert!(generates(&gg, &normal.witness, Generation::Normal));
        assert!(gg.ambient().elements().all(|x| !generates(&gg, &[x], Generation::Plain)));
        assert_eq!(dimension(&gg, Generation::Plain, 3).unwrap().value(), Some(0));
        assert_eq!(g_points(&gg).unwrap(), vec![0]);
        let p = gg.spec().unwrap()[0].carrier.clone();
        assert!(split_check(&gg, &p).unwrap().passed);
    }

    #[test]
    fn s5_over_a5() {
        let s5 = FiniteGroup::symmetric(5).unwrap().into_arc();
        let whole = ElementSet::whole(&s5);
        let a5 = commutator_subgroup(&s5, &whole, &whole).unwrap();
        let gg = GGroup::from_subgroup("S5/A5", &s5, &a5).unwrap();
        assert_eq!(g_rank(&gg, Generation::Plain, 3).unwrap().rank, 1);
        assert_eq!(dimension(&gg, Generation::Plain, 3).unwrap().value(), Some(1));
        assert!(g_points(&gg).unwrap().is_empty());
    }

    #[test]
    fn empty_spectrum_has_no_dimension() {
        let s3 = FiniteGroup::symmetric(3).unwrap().into_arc();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let gg = GGroup::generated_by("S3/Z2", &s3, &[t]).unwrap();
        assert_eq!(dimension(&gg, Generation::Plain, 3).unwrap(), Dimension::NegInfinity);
        let over_self = GGroup::over_itself(&Arc::new(FiniteGroup::cyclic(4).unwrap()));
        assert_eq!(g_rank(&over_self, Generation::Plain, 3).unwrap().rank, 0);
    }

    #[test]
    fn cap_is_reported() {
        let s3 = FiniteGroup::symmetric(3).unwrap().into_arc();
        let gg = GGroup::over_trivial(&s3);
        assert!(matches!(g_rank(&gg, Generation::Plain, 1), Err(Error::EnumerationCap { .. })));
        assert_eq!(g_rank(&gg, Generation::Plain, 2).unwrap().rank, 2);
    }
}
