//! The equation language.
//!
//! ```text
//! let a = 3;          # binds a name to an element of φ(G), by ambient index
//! vars 2;             # optional; otherwise the largest Xk used
//! [a, X1] = 1;
//! X1 X2^-1 != a;
//! ```
//!
//! Words are concatenations (whitespace or `*`) of atoms: a bound name,
//! `X<k>`, `(word)`, `[word, word]` or the literal `1`, each optionally
//! followed by `^<integer>`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::word::{GWord, Syllable};
use crate::error::{Error, Result};
use crate::ggroup::GGroup;
use crate::group::{Elem, FiniteGroup};

/// Equalities `w = 1` and inequalities `w ≠ 1` over a coefficient group.
#[derive(Debug, Clone)]
pub struct EquationSystem {
    pub nvars: usize,
    pub equalities: Vec<GWord>,
    pub inequalities: Vec<GWord>,
    /// Names bound to elements of the coefficient group.
    pub symbols: BTreeMap<String, Elem>,
    pub base: Arc<FiniteGroup>,
}

impl PartialEq for EquationSystem {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.equalities == other.equalities
            && self.inequalities == other.inequalities
            && self.base.same_table(&other.base)
    }
}

impl EquationSystem {
    pub fn new(base: Arc<FiniteGroup>, nvars: usize) -> Self {
        Self { nvars, equalities: Vec::new(), inequalities: Vec::new(), symbols: BTreeMap::new(), base }
    }

    pub fn with_equalities(mut self, words: impl IntoIterator<Item = GWord>) -> Self {
        let n = self.nvars;
        self.equalities.extend(words.into_iter().map(|w| w.with_nvars(n)));
        self
    }

    pub fn with_inequalities(mut self, words: impl IntoIterator<Item = GWord>) -> Self {
        let n = self.nvars;
        self.inequalities.extend(words.into_iter().map(|w| w.with_nvars(n)));
        self
    }

    /// Prints the system in the equation language. Constants without a
    /// bound name get one of the form `c<ambient index>`.
    pub fn to_dsl(&self, binding: &GGroup) -> String {
        let mut names: BTreeMap<Elem, String> = BTreeMap::new();
        for (name, &c) in &self.symbols {
            names.entry(c).or_insert_with(|| name.clone());
        }
        for w in self.equalities.iter().chain(&self.inequalities) {
            for s in w.syllables() {
                if let Syllable::Const(c) = *s {
                    names.entry(c).or_insert_with(|| format!("c{}", binding.embed(c)));
                }
            }
        }
        let mut out = String::new();
        for (&c, name) in &names {
            let _ = writeln!(out, "let {name} = {};", binding.embed(c));
        }
        let _ = writeln!(out, "vars {};", self.nvars);
        let word = |w: &GWord| -> String {
            if w.is_empty() {
                return "1".into();
            }
            let parts: Vec<String> = w
                .syllables()
                .iter()
                .map(|s| match *s {
                    Syllable::Const(c) => names[&c].clone(),
                    Syllable::Var { index, exp: 1 } => format!("X{}", index + 1),
                    Syllable::Var { index, exp } => format!("X{}^{}", index + 1, exp),
                })
                .collect();
            parts.join(" ")
        };
        for w in &self.equalities {
            let _ = writeln!(out, "{} = 1;", word(w));
        }
        for w in &self.inequalities {
            let _ = writeln!(out, "{} != 1;", word(w));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Var(usize),
    Int(i64),
    Eq,
    Ne,
    Semi,
    Comma,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn tokenize(text: &str) -> Result<(Vec<Token>, (usize, usize))> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let mut advance = |n: usize, i: &mut usize| {
            *i += n;
            col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                advance(1, &mut i);
                continue;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            _ => {}
        }
        let tok = match c {
            '=' => {
                advance(1, &mut i);
                Tok::Eq
            }
            '!' if chars.get(i + 1) == Some(&'=') => {
                advance(2, &mut i);
                Tok::Ne
            }
            ';' => {
                advance(1, &mut i);
                Tok::Semi
            }
            ',' => {
                advance(1, &mut i);
                Tok::Comma
            }
            '*' => {
                advance(1, &mut i);
                Tok::Star
            }
            '^' => {
                advance(1, &mut i);
                Tok::Caret
            }
            '(' => {
                advance(1, &mut i);
                Tok::LParen
            }
            ')' => {
                advance(1, &mut i);
                Tok::RParen
            }
            '[' => {
                advance(1, &mut i);
                Tok::LBracket
            }
            ']' => {
                advance(1, &mut i);
                Tok::RBracket
            }
            c if c.is_ascii_digit() || c == '-' => {
                let start = i;
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = chars[start..j].iter().collect();
                let v = s.parse::<i64>().map_err(|_| syntax(l0, c0, format!("bad integer `{s}`")))?;
                advance(j - i, &mut i);
                Tok::Int(v)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let s: String = chars[start..j].iter().collect();
                advance(j - i, &mut i);
                match s.strip_prefix('X') {
                    Some(k) if !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()) => {
                        let k: usize = k.parse().map_err(|_| syntax(l0, c0, "variable index too large"))?;
                        if k == 0 {
                            return Err(syntax(l0, c0, "variables are numbered from X1"));
                        }
                        Tok::Var(k)
                    }
                    _ => Tok::Ident(s),
                }
            }
            other => return Err(syntax(l0, c0, format!("unexpected character `{other}`"))),
        };
        out.push(Token { tok, line: l0, column: c0 });
    }
    Ok((out, (line, col)))
}

/// A word before reduction, so that variable indices can be checked once
/// `vars` is known.
#[derive(Debug, Clone)]
struct RawWord {
    syllables: Vec<Syllable>,
    max_var: usize,
    first_var_pos: Option<(usize, usize)>,
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
    binding: &'a GGroup,
    symbols: BTreeMap<String, Elem>,
    /// Inverse of the embedding, for reading `let` indices.
    base_of: Vec<Option<Elem>>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens.get(self.pos).map_or(self.end, |t| (t.line, t.column))
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(syntax(l, c, message))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn g(&self) -> &FiniteGroup {
        self.binding.base()
    }

    fn word(&mut self) -> Result<RawWord> {
        let mut out = RawWord { syllables: Vec::new(), max_var: 0, first_var_pos: None };
        let mut any = false;
        loop {
            match self.peek() {
                Some(Tok::Star) if any => {
                    self.pos += 1;
                    if !self.starts_atom() {
                        return self.err("expected a factor after `*`");
                    }
                }
                _ if self.starts_atom() => {}
                _ => break,
            }
            let atom = self.factor()?;
            out.max_var = out.max_var.max(atom.max_var);
            out.first_var_pos = out.first_var_pos.or(atom.first_var_pos);
            out.syllables.extend(atom.syllables);
            any = true;
        }
        if !any {
            return self.err("expected a word");
        }
        Ok(out)
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(_) | Tok::Var(_) | Tok::Int(1) | Tok::LParen | Tok::LBracket))
    }

    fn factor(&mut self) -> Result<RawWord> {
        let mut atom = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp = match self.peek() {
                Some(Tok::Int(v)) => *v,
                _ => return self.err("expected an integer exponent"),
            };
            self.pos += 1;
            atom.syllables = raw_pow(&atom.syllables, exp, self.g());
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<RawWord> {
        let (line, column) = self.here();
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.symbols.get(&name) {
                    Some(&c) => Ok(RawWord { syllables: vec![Syllable::Const(c)], max_var: 0, first_var_pos: None }),
                    None => Err(syntax(line, column, format!("unbound constant `{name}`"))),
                }
            }
            Some(Tok::Var(k)) => {
                self.pos += 1;
                Ok(RawWord {
                    syllables: vec![Syllable::Var { index: k - 1, exp: 1 }],
                    max_var: k,
                    first_var_pos: Some((line, column)),
                })
            }
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(RawWord { syllables: Vec::new(), max_var: 0, first_var_pos: None })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(w)
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(Tok::Comma, "`,` in commutator")?;
                let b = self.word()?;
                self.expect(Tok::RBracket, "`]`")?;
                let g = self.g();
                let mut syllables = a.syllables.clone();
                syllables.extend(b.syllables.iter().copied());
                syllables.extend(raw_inverse(&a.syllables, g));
                syllables.extend(raw_inverse(&b.syllables, g));
                Ok(RawWord {
                    syllables,
                    max_var: a.max_var.max(b.max_var),
                    first_var_pos: a.first_var_pos.or(b.first_var_pos),
                })
            }
            _ => self.err("expected a word"),
        }
    }
}

fn raw_inverse(w: &[Syllable], g: &FiniteGroup) -> Vec<Syllable> {
    w.iter()
        .rev()
        .map(|&s| match s {
            Syllable::Const(c) => Syllable::Const(g.inv(c)),
            Syllable::Var { index, exp } => Syllable::Var { index, exp: -exp },
        })
        .collect()
}

fn raw_pow(w: &[Syllable], exp: i64, g: &FiniteGroup) -> Vec<Syllable> {
    let base = if exp < 0 { raw_inverse(w, g) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * exp.unsigned_abs() as usize);
    for _ in 0..exp.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

/// Parses a system whose constants are read in `binding`.
pub fn parse_system(text: &str, binding: &GGroup) -> Result<EquationSystem> {
    let (tokens, end) = tokenize(text)?;
    let mut base_of = vec![None; binding.ambient().order()];
    for (g, &x) in binding.embedding().iter().enumerate() {
        base_of[x] = Some(g);
    }
    let mut p = Parser { tokens, pos: 0, end, binding, symbols: BTreeMap::new(), base_of };
    let mut declared: Option<usize> = None;
    let mut statements: Vec<(RawWord, bool)> = Vec::new();
    while p.peek().is_some() {
        match p.peek().cloned() {
            Some(Tok::Semi) => {
                p.pos += 1;
                continue;
            }
            Some(Tok::Ident(kw)) if kw == "let" => {
                p.pos += 1;
                let (line, column) = p.here();
                let name = match p.peek().cloned() {
                    Some(Tok::Ident(n)) if n != "let" && n != "vars" => n,
                    _ => return p.err("expected a constant name"),
                };
                p.pos += 1;
                p.expect(Tok::Eq, "`=`")?;
                let (il, ic) = p.here();
                let idx = match p.peek() {
                    Some(Tok::Int(v)) => *v,
                    _ => return p.err("expected an element index"),
                };
                p.pos += 1;
                if idx < 0 || idx as usize >= binding.ambient().order() {
                    return Err(syntax(il, ic, format!("element {idx} is out of range")));
                }
                let base = p.base_of[idx as usize]
                    .ok_or_else(|| syntax(il, ic, format!("element {idx} is not in the image of G")))?;
                if p.symbols.insert(name.clone(), base).is_some() {
                    return Err(syntax(line, column, format!("`{name}` is bound twice")));
                }
                p.expect(Tok::Semi, "`;`")?;
            }
            Some(Tok::Ident(kw)) if kw == "vars" => {
                p.pos += 1;
                let n = match p.peek() {
                    Some(Tok::Int(v)) if *v >= 0 => *v as usize,
                    _ => return p.err("expected a variable count"),
                };
                if declared.is_some() {
                    return p.err("`vars` declared twice");
                }
                p.pos += 1;
                declared = Some(n);
                p.expect(Tok::Semi, "`;`")?;
            }
            _ => {
                let lhs = p.word()?;
                let equal = match p.peek() {
                    Some(Tok::Eq) => true,
                    Some(Tok::Ne) => false,
                    _ => return p.err("expected `=` or `!=`"),
                };
                p.pos += 1;
                let rhs = p.word()?;
                if p.peek().is_some() {
                    p.expect(Tok::Semi, "`;`")?;
                }
                let mut syllables = lhs.syllables;
                syllables.extend(raw_inverse(&rhs.syllables, binding.base()));
                let raw = RawWord {
                    syllables,
                    max_var: lhs.max_var.max(rhs.max_var),
                    first_var_pos: lhs.first_var_pos.or(rhs.first_var_pos),
                };
                statements.push((raw, equal));
            }
        }
    }
    let max_var = statements.iter().map(|(w, _)| w.max_var).max().unwrap_or(0);
    let nvars = match declared {
        Some(n) => {
            if let Some((w, _)) = statements.iter().find(|(w, _)| w.max_var > n) {
                let (l, c) = w.first_var_pos.unwrap_or((1, 1));
                return Err(syntax(l, c, format!("variable X{} exceeds `vars {n}`", w.max_var)));
            }
            n
        }
        None => max_var,
    };
    let g = binding.base().clone();
    let mut sys = EquationSystem::new(g.clone(), nvars);
    for (w, equal) in statements {
        let word = GWord::reduce(w.syllables, nvars, &g);
        if equal {
            sys.equalities.push(word);
        } else {
            sys.inequalities.push(word);
        }
    }
    sys.symbols = p.symbols;
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cycle_perm;

    fn s3() -> GGroup {
        GGroup::over_itself(&FiniteGroup::symmetric(3).unwrap().into_arc())
    }

    #[test]
    fn inconsistent_system() {
        let gg = s3();
        let sys = parse_system("X1^2 = 1; X1^3 = 1; X1 != 1", &gg).unwrap();
        assert_eq!(sys.nvars, 1);
        assert_eq!(sys.equalities.len(), 2);
        assert_eq!(sys.inequalities.len(), 1);
    }

    #[test]
    fn commutator_with_constant() {
        let gg = s3();
        let h = gg.ambient();
        let c: Vec<u32> = cycle_perm(3, &[0, 1, 2]).into_iter().map(|v| v as u32).collect();
        let a = h.find_perm(&c).unwrap();
        let sys = parse_system(&format!("let a = {a}; [a, X1] = 1;"), &gg).unwrap();
        assert_eq!(sys.equalities.len(), 1);
        assert_eq!(sys.equalities[0].len(), 4);
    }

    #[test]
    fn errors_carry_positions() {
        let gg = s3();
        match parse_system("X1 * X2 * X1^-1", &gg) {
            Err(Error::Syntax { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_system("vars 1;\nX1 = b;", &gg) {
            Err(Error::Syntax { line: 2, column: 6, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_system("vars 1;\n  X2 = 1;", &gg) {
            Err(Error::Syntax { line: 2, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_system("let a = 99; X1 = a;", &gg).is_err());
        assert!(parse_system("X1 = ;", &gg).is_err());
        assert!(parse_system("X1 = (X2;", &gg).is_err());
    }

    #[test]
    fn constants_must_lie_in_g() {
        let h = FiniteGroup::symmetric(3).unwrap().into_arc();
        let gg = GGroup::over_trivial(&h);
        assert!(parse_system("let a = 1; X1 = a;", &gg).is_err());
        assert!(parse_system("let e = 0; X1 = e;", &gg).is_ok());
    }

    #[test]
    fn printing_round_trips() {
        let gg = s3();
        let texts = [
            "X1^2 = 1; X1^3 = 1; X1 != 1",
            "let a = 1; let b = 2; [a, X1] = b X2^-3; vars 2;",
            "let a = 3; (a X1)^2 = X2 * a; X1 a X1^-1 != 1;",
            "1 = 1;",
        ];
        for t in texts {
            let sys = parse_system(t, &gg).unwrap();
            let printed = sys.to_dsl(&gg);
            let back = parse_system(&printed, &gg).unwrap();
            assert_eq!(sys, back, "{printed}");
            assert_eq!(back.to_dsl(&gg), printed);
        }
    }
}
