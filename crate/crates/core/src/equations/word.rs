use std::fmt;

use crate::ggroup::GGroup;
use crate::group::{Elem, FiniteGroup};

/// One syllable of a word in `G * F(X₁..Xₙ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syllable {
    /// An element of the coefficient group `G`.
    Const(Elem),
    /// `X_{index+1}^exp`
    Var { index: usize, exp: i64 },
}

/// A word in normal form: no identity constants, no zero exponents, and no
/// two adjacent syllables that could merge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GWord {
    syllables: Vec<Syllable>,
    nvars: usize,
}

impl GWord {
    pub fn empty(nvars: usize) -> Self {
        Self { syllables: Vec::new(), nvars }
    }

    /// Reduces a raw syllable list over the coefficient group `g`.
    pub fn reduce(raw: impl IntoIterator<Item = Syllable>, nvars: usize, g: &FiniteGroup) -> Self {
        let mut out: Vec<Syllable> = Vec::new();
        for s in raw {
            match s {
                Syllable::Const(0) | Syllable::Var { exp: 0, .. } => continue,
                _ => {}
            }
            let merged = match (out.last(), s) {
                (Some(&Syllable::Const(a)), Syllable::Const(b)) => Some(Syllable::Const(g.mul(a, b))),
                (Some(&Syllable::Var { index: i, exp: e }), Syllable::Var { index: j, exp: f }) if i == j => {
                    Some(Syllable::Var { index: i, exp: e + f })
                }
                _ => None,
            };
            match merged {
                Some(m) => {
                    out.pop();
                    if !matches!(m, Syllable::Const(0) | Syllable::Var { exp: 0, .. }) {
                        out.push(m);
                    }
                }
                None => out.push(s),
            }
        }
        Self { syllables: out, nvars }
    }

    pub fn constant(c: Elem, nvars: usize, g: &FiniteGroup) -> Self {
        Self::reduce([Syllable::Const(c)], nvars, g)
    }

    /// `X_{index+1}`
    pub fn var(index: usize, nvars: usize) -> Self {
        Self { syllables: vec![Syllable::Var { index, exp: 1 }], nvars }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn has_variable(&self) -> bool {
        self.syllables.iter().any(|s| matches!(s, Syllable::Var { .. }))
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = nvars;
        self
    }

    pub fn mul(&self, other: &GWord, g: &FiniteGroup) -> GWord {
        let nvars = self.nvars.max(other.nvars);
        Self::reduce(self.syllables.iter().chain(&other.syllables).copied(), nvars, g)
    }

    pub fn inverse(&self, g: &FiniteGroup) -> GWord {
        let raw = self.syllables.iter().rev().map(|&s| match s {
            Syllable::Const(c) => Syllable::Const(g.inv(c)),
            Syllable::Var { index, exp } => Syllable::Var { index, exp: -exp },
        });
        Self::reduce(raw, self.nvars, g)
    }

    pub fn pow(&self, exp: i64, g: &FiniteGroup) -> GWord {
        let base = if exp < 0 { self.inverse(g) } else { self.clone() };
        let mut out = GWord::empty(self.nvars);
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base, g);
        }
        out
    }

    /// `[a, b] = a·b·a⁻¹·b⁻¹`
    pub fn commutator(a: &GWord, b: &GWord, g: &FiniteGroup) -> GWord {
        a.mul(b, g).mul(&a.inverse(g), g).mul(&b.inverse(g), g)
    }

    /// Renames variable `i` to `rename[i]`.
    pub fn map_vars(&self, rename: &[usize], nvars: usize, g: &FiniteGroup) -> GWord {
        let raw = self.syllables.iter().map(|&s| match s {
            Syllable::Var { index, exp } => Syllable::Var { index: rename[index], exp },
            c => c,
        });
        Self::reduce(raw, nvars, g)
    }

    /// Replaces each constant `c` by `f(c)`, re-reducing over `g`.
    pub fn map_consts(&self, f: impl Fn(Elem) -> Elem, g: &FiniteGroup) -> GWord {
        let raw = self.syllables.iter().map(|&s| match s {
            Syllable::Const(c) => Syllable::Const(f(c)),
            v => v,
        });
        Self::reduce(raw, self.nvars, g)
    }

    /// Value in the ambient group of `target` with `Xᵢ ↦ assignment[i]`.
    pub fn evaluate(&self, target: &GGroup, assignment: &[Elem]) -> Elem {
        evaluate_raw(&self.syllables, target, assignment)
    }

    pub fn compile(&self, target: &GGroup) -> CompiledWord {
        CompiledWord {
            ops: self
                .syllables
                .iter()
                .map(|&s| match s {
                    Syllable::Const(c) => Op::Const(target.embed(c)),
                    Syllable::Var { index, exp } => Op::Var(index, exp),
                })
                .collect(),
        }
    }
}

/// Evaluates a syllable list that need not be reduced.
pub fn evaluate_raw(syllables: &[Syllable], target: &GGroup, assignment: &[Elem]) -> Elem {
    let h = target.ambient();
    syllables.iter().fold(0, |acc, &s| match s {
        Syllable::Const(c) => h.mul(acc, target.embed(c)),
        Syllable::Var { index, exp } => h.mul(acc, h.pow(assignment[index], exp)),
    })
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Const(Elem),
    Var(usize, i64),
}

/// A word with constants already embedded in a target group.
#[derive(Debug, Clone)]
pub struct CompiledWord {
    ops: Vec<Op>,
}

impl CompiledWord {
    #[inline]
    pub fn eval(&self, h: &FiniteGroup, assignment: &[Elem]) -> Elem {
        let mut acc = 0;
        for op in &self.ops {
            acc = match *op {
                Op::Const(c) => h.mul(acc, c),
                Op::Var(i, e) => h.mul(acc, h.pow(assignment[i], e)),
            };
        }
        acc
    }
}

impl fmt::Display for GWord {
    /// Constants print as `g<index>`; use the system printer for names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match *s {
                Syllable::Const(c) => write!(f, "g{c}")?,
                Syllable::Var { index, exp: 1 } => write!(f, "X{}", index + 1)?,
                Syllable::Var { index, exp } => write!(f, "X{}^{}", index + 1, exp)?,
            }
        }
        Ok(())
    }
}
