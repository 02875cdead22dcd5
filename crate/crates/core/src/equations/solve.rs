use fixedbitset::FixedBitSet;
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::parser::EquationSystem;
use super::word::{CompiledWord, GWord};
use crate::error::{Error, Result};
use crate::ggroup::GGroup;
use crate::group::{Elem, FiniteGroup};

/// Above this many variables the symmetry search is skipped.
const SYMMETRY_MAX_VARS: usize = 6;

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Enumerate one tuple per orbit of the system's variable symmetries.
    pub symmetry: bool,
    /// Largest number of tuples examined.
    pub budget: u64,
}

impl SolveOptions {
    pub fn for_target(target: &GGroup) -> Self {
        Self { symmetry: true, budget: target.limits().solve_budget }
    }

    pub fn without_symmetry(mut self) -> Self {
        self.symmetry = false;
        self
    }
}

/// `V_H(S)`: all solution tuples, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionSet {
    pub nvars: usize,
    pub target: String,
    pub count: usize,
    pub tuples: Vec<Vec<Elem>>,
}

fn require_compatible(sys: &EquationSystem, target: &GGroup) -> Result<()> {
    if !sys.base.same_table(target.base()) {
        return Err(Error::GStructure(format!(
            "system coefficients ({}) are not the base group of {}",
            sys.base.name(),
            target.label()
        )));
    }
    Ok(())
}

fn tuple_count(n: usize, nvars: usize, budget: u64) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..nvars {
        total = total
            .checked_mul(n as u64)
            .filter(|&t| t <= budget)
            .ok_or(Error::BudgetExceeded { what: "equation solving", budget })?;
    }
    Ok(total)
}

/// Decodes tuple number `k` (first variable most significant).
fn decode(mut k: u64, n: usize, out: &mut [Elem]) {
    for slot in out.iter_mut().rev() {
        *slot = (k % n as u64) as usize;
        k /= n as u64;
    }
}

struct Compiled {
    eqs: Vec<CompiledWord>,
    neqs: Vec<CompiledWord>,
}

impl Compiled {
    fn new(sys: &EquationSystem, target: &GGroup) -> Self {
        Self {
            eqs: sys.equalities.iter().map(|w| w.compile(target)).collect(),
            neqs: sys.inequalities.iter().map(|w| w.compile(target)).collect(),
        }
    }

    #[inline]
    fn holds(&self, h: &FiniteGroup, t: &[Elem]) -> bool {
        self.eqs.iter().all(|w| w.eval(h, t) == 0) && self.neqs.iter().all(|w| w.eval(h, t) != 0)
    }
}

/// Variable permutations mapping the equalities and the inequalities onto
/// themselves as sets.
pub fn variable_symmetries(sys: &EquationSystem) -> Vec<Vec<usize>> {
    let n = sys.nvars;
    if n > SYMMETRY_MAX_VARS {
        return vec![(0..n).collect()];
    }
    let g = &sys.base;
    let sorted = |ws: &[GWord]| -> Vec<GWord> { ws.iter().map(|w| cyclic_canonical(w, g)).sorted().collect() };
    let (eq, ne) = (sorted(&sys.equalities), sorted(&sys.inequalities));
    (0..n)
        .permutations(n)
        .filter(|perm| {
            let map = |ws: &[GWord]| -> Vec<GWord> {
                ws.iter().map(|w| cyclic_canonical(&w.map_vars(perm, n, g), g)).sorted().collect()
            };
            map(&sys.equalities) == eq && map(&sys.inequalities) == ne
        })
        .collect()
}

/// The least cyclic rotation of `w` or `w⁻¹`. Each of these is trivial
/// exactly when `w` is, under any assignment.
fn cyclic_canonical(w: &GWord, g: &FiniteGroup) -> GWord {
    let mut best = w.clone();
    for v in [w.clone(), w.inverse(g)] {
        let s = v.syllables();
        for k in 0..s.len() {
            let rotated = GWord::reduce(s[k..].iter().chain(&s[..k]).copied(), w.nvars(), g);
            if rotated < best {
                best = rotated;
            }
        }
    }
    best
}

/// `σ·t` with `(σ·t)[σ(i)] = t[i]`.
fn act(perm: &[usize], t: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0; t.len()];
    for (i, &p) in perm.iter().enumerate() {
        out[p] = t[i];
    }
    out
}

/// Exhaustively solves `sys` in the ambient group of `target`.
pub fn solve(sys: &EquationSystem, target: &GGroup, opts: SolveOptions) -> Result<SolutionSet> {
    require_compatible(sys, target)?;
    let h = target.ambient();
    let n = h.order();
    let total = tuple_count(n, sys.nvars, opts.budget)?;
    let compiled = Compiled::new(sys, target);
    let perms = if opts.symmetry { variable_symmetries(sys) } else { Vec::new() };
    let nontrivial: Vec<&Vec<usize>> = perms.iter().filter(|p| p.iter().enumerate().any(|(i, &v)| i != v)).collect();
    let nv = sys.nvars;

    // chunks keyed by the first variable keep the merge lexicographic
    let chunk = if nv == 0 { total } else { total / n as u64 };
    let chunks = if nv == 0 { 1 } else { n as u64 };
    let parts: Vec<Vec<Vec<Elem>>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut found = Vec::new();
            let mut t = vec![0; nv];
            for k in c * chunk..(c + 1) * chunk {
                decode(k, n, &mut t);
                if !nontrivial.is_empty() && nontrivial.iter().any(|p| act(p, &t) < t) {
                    continue;
                }
                if compiled.holds(h, &t) {
                    found.push(t.clone());
                }
            }
            found
        })
        .collect();
    let mut tuples: Vec<Vec<Elem>> = parts.into_iter().flatten().collect();
    if !nontrivial.is_empty() {
        let reps = std::mem::take(&mut tuples);
        for t in reps {
            tuples.extend(perms.iter().map(|p| act(p, &t)));
        }
        tuples.sort_unstable();
        tuples.dedup();
    }
    Ok(SolutionSet { nvars: nv, target: target.label().to_string(), count: tuples.len(), tuples })
}

/// A smallest subset of the equalities with the same solutions as the whole
/// system over `target`; inequalities are always kept.
#[derive(Debug, Clone, Serialize)]
pub struct NoetherianReduction {
    /// Indices into the original equalities, increasing.
    pub kept: Vec<usize>,
    pub solutions: usize,
}

pub fn noetherian_reduce(sys: &EquationSystem, target: &GGroup, budget: u64) -> Result<NoetherianReduction> {
    require_compatible(sys, target)?;
    let h = target.ambient();
    let n = h.order();
    let total = tuple_count(n, sys.nvars, budget)? as usize;
    let compiled = Compiled::new(sys, target);
    // satisfaction bitsets, one per equality, over tuples passing the inequalities
    let mut admissible = FixedBitSet::with_capacity(total);
    let mut sat: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(total); compiled.eqs.len()];
    let mut t = vec![0; sys.nvars];
    for k in 0..total {
        decode(k as u64, n, &mut t);
        if compiled.neqs.iter().all(|w| w.eval(h, &t) != 0) {
            admissible.insert(k);
            for (i, w) in compiled.eqs.iter().enumerate() {
                if w.eval(h, &t) == 0 {
                    sat[i].insert(k);
                }
            }
        }
    }
    let solutions_of = |subset: &[usize]| {
        let mut s = admissible.clone();
        for &i in subset {
            s.intersect_with(&sat[i]);
        }
        s
    };
    let all: Vec<usize> = (0..sat.len()).collect();
    let full = solutions_of(&all);
    for k in 0..=sat.len() {
        for subset in (0..sat.len()).combinations(k) {
            if solutions_of(&subset) == full {
                return Ok(NoetherianReduction { kept: subset, solutions: full.count_ones(..) });
            }
        }
    }
    unreachable!("the full set of equalities always qualifies")
}
