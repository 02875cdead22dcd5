//! Algebraic elements, finiteness of extensions and Galois groups.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::equations::{GWord, Syllable};
use crate::error::{Error, Result};
use crate::ggroup::GGroup;
use crate::group::{enumerate_homs, Elem, FiniteGroup, GroupHom, HomConstraints};

/// Default bound on the syllable length of searched witnesses.
pub const DEFAULT_WITNESS_LENGTH: usize = 4;

const EXPONENTS: [i64; 4] = [1, -1, 2, -2];

/// A one-variable word with at least one variable syllable that vanishes
/// at `x`.
///
/// Words `c₀·X^e₁` and `c₀·X^e₁·c₁·X^e₂` are tried with exponents in
/// `{1, −1, 2, −2}` and `c₁` ranging over `φ(G)`; the leading constant is
/// solved for and kept only if it lies in `φ(G)`. If nothing fits within
/// `max_len` syllables, `X^ord(x)` is returned.
pub fn algebraic_witness(gg: &GGroup, x: Elem, max_len: usize) -> Result<GWord> {
    let h = gg.ambient();
    if x >= h.order() {
        return Err(Error::ElementOutOfRange { element: x, order: h.order() });
    }
    let base = gg.base();
    let mut base_of = vec![None; h.order()];
    for (g, &y) in gg.embedding().iter().enumerate() {
        base_of[y] = Some(g);
    }
    let var = |exp| Syllable::Var { index: 0, exp };
    let accept = |tail: Vec<Syllable>, value: Elem| -> Option<GWord> {
        // c₀ · value = 1
        let c0 = base_of[h.inv(value)]?;
        let mut raw = vec![Syllable::Const(c0)];
        raw.extend(tail);
        let w = GWord::reduce(raw, 1, base);
        (w.has_variable() && w.len() <= max_len && w.evaluate(gg, &[x]) == 0).then_some(w)
    };
    for e in EXPONENTS {
        if let Some(w) = accept(vec![var(e)], h.pow(x, e)) {
            return Ok(w);
        }
    }
    if max_len >= 3 {
        for e in EXPONENTS {
            for c in 1..base.order() {
                for f in EXPONENTS {
                    let value = h.mul(h.mul(h.pow(x, e), gg.embed(c)), h.pow(x, f));
                    if let Some(w) = accept(vec![var(e), Syllable::Const(c), var(f)], value) {
                        return Ok(w);
                    }
                }
            }
        }
    }
    Ok(GWord::reduce([var(h.element_order(x) as i64)], 1, base))
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionReport {
    pub ggroup: String,
    /// Orbits of `φ(G)` acting on `H` by left multiplication.
    pub orbit_count: usize,
    pub g_order: usize,
    pub ambient_order: usize,
    pub algebraic: bool,
    pub finite: bool,
    /// `(x, witness)` for every element, in index order.
    pub witnesses: Vec<(Elem, String)>,
}

pub fn orbit_count(gg: &GGroup) -> usize {
    let h = gg.ambient();
    let g = gg.gsub().elements();
    let mut seen = FixedBitSet::with_capacity(h.order());
    let mut count = 0;
    for x in h.elements() {
        if seen.contains(x) {
            continue;
        }
        count += 1;
        for &a in &g {
            seen.insert(h.mul(a, x));
        }
    }
    count
}

pub fn extension_report(gg: &GGroup) -> Result<ExtensionReport> {
    let h = gg.ambient();
    let mut witnesses = Vec::with_capacity(h.order());
    let mut algebraic = true;
    for x in h.elements() {
        let w = algebraic_witness(gg, x, DEFAULT_WITNESS_LENGTH)?;
        algebraic &= w.has_variable() && w.evaluate(gg, &[x]) == 0;
        witnesses.push((x, w.to_string()));
    }
    Ok(ExtensionReport {
        ggroup: gg.label().to_string(),
        orbit_count: orbit_count(gg),
        g_order: gg.gsub().len(),
        ambient_order: h.order(),
        algebraic,
        finite: true,
        witnesses,
    })
}

/// Automorphisms of `H` fixing `φ(G)` pointwise, with their group structure.
#[derive(Debug, Clone)]
pub struct GaloisGroup {
    /// Element `i` of `group` is `automorphisms[i]`; index 0 is the identity.
    pub group: FiniteGroup,
    pub automorphisms: Vec<GroupHom>,
}

pub fn galois_group(gg: &GGroup) -> Result<GaloisGroup> {
    let h = gg.ambient();
    let constraints =
        HomConstraints { node_budget: gg.limits().hom_budget, ..HomConstraints::automorphisms_fixing(gg.gsub()) };
    let mut autos = enumerate_homs(h, h, &constraints)?;
    let id = autos
        .iter()
        .position(|a| a.map().iter().enumerate().all(|(i, &v)| i == v))
        .ok_or_else(|| Error::Internal("identity automorphism missing".into()))?;
    let identity = autos.remove(id);
    autos.insert(0, identity);
    let index = |m: &[Elem]| autos.iter().position(|a| a.map() == m);
    let mut rows = Vec::with_capacity(autos.len());
    for a in &autos {
        let mut row = Vec::with_capacity(autos.len());
        for b in &autos {
            // (a·b)(x) = a(b(x))
            let ab = b.then(a)?;
            row.push(index(ab.map()).ok_or_else(|| Error::Internal("automorphisms not closed".into()))?);
        }
        rows.push(row);
    }
    let group = FiniteGroup::from_table(format!("Gal({})", gg.label()), &rows)?;
    Ok(GaloisGroup { group, automorphisms: autos })
}
