//! Finite groups stored as full multiplication tables.
//!
//! Elements are dense indices `0..order` with the identity fixed at index 0.
//! Every subset of a group is a bit vector ([`ElementSet`]), and every
//! algorithm in this crate is an exhaustive loop over those indices.

mod hom;
pub mod io;
mod product;
mod set;
pub(crate) mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub use hom::{enumerate_homs, GroupHom, HomConstraints, DEFAULT_HOM_BUDGET};
pub use product::{direct_product, quotient, Quotient};
pub use set::{ElementSet, SetKind};
pub use subgroup::{
    centralizer, commutator_subgroup, conjugacy_classes, derived_series, generators_of, is_simple, is_solvable,
    normal_subgroups, normal_subgroups_capped, subgroup_generated, Closure, DEFAULT_NORMAL_CAP,
};

/// Index of a group element.
pub type Elem = usize;

/// Largest order accepted by default when closing permutation generators or
/// forming products.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Groups up to this order get the full `O(n³)` associativity check; larger
/// ones are sampled.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;

/// Hard ceiling imposed by the `u16` table storage.
pub const MAX_ORDER: usize = u16::MAX as usize;

/// A finite group given by its multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    perms: Option<Vec<Vec<u32>>>,
    warnings: Vec<String>,
    generators: OnceLock<Vec<Elem>>,
    orders: OnceLock<Vec<usize>>,
    classes: OnceLock<Vec<Vec<Elem>>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("name", &self.name).field("order", &self.order).finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a Cayley table, relocating the identity to index 0.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let name = name.into();
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedGroup("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderCap { order: n, cap: MAX_ORDER });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedGroup(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::MalformedGroup(format!("row {i} contains {bad}, outside 0..{n}")));
            }
        }
        check_latin(n, |i, j| rows[i][j])?;

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| rows[e][j] == j && rows[j][e] == j))
            .ok_or_else(|| Error::MalformedGroup("no identity element".into()))?;

        // swap the identity into slot 0
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(rows[i][j]) as u16;
            }
        }
        let mut group = Self::from_parts(name, n, table, None)?;
        group.warnings = group.validate()?;
        Ok(group)
    }

    /// Closes a set of permutations (0-based one-line images) into a group.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[Vec<usize>],
        order_cap: usize,
    ) -> Result<Self> {
        let name = name.into();
        let cap = order_cap.min(MAX_ORDER);
        let mut gens: Vec<Vec<u32>> = Vec::with_capacity(generators.len());
        for (k, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::MalformedGroup(format!(
                    "generator {k} has length {}, expected degree {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &v in g {
                if v >= degree || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::MalformedGroup(format!("generator {k} is not a permutation of 0..{degree}")));
                }
            }
            gens.push(g.iter().map(|&v| v as u32).collect());
        }

        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        // parent[x] = (y, s) with x = y·gens[s]
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut cursor = 0;
        while cursor < elements.len() {
            let mut row = Vec::with_capacity(gens.len());
            for (s, g) in gens.iter().enumerate() {
                let cur = &elements[cursor];
                let prod: Vec<u32> = g.iter().map(|&x| cur[x as usize]).collect();
                let next = match index.get(&prod) {
                    Some(&k) => k,
                    None => {
                        let k = elements.len();
                        if k >= cap {
                            return Err(Error::OrderCap { order: k + 1, cap });
                        }
                        index.insert(prod.clone(), k);
                        elements.push(prod);
                        parent.push((cursor, s));
                        k
                    }
                };
                row.push(next);
            }
            right.push(row);
            cursor += 1;
        }

        let n = elements.len();
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            let base = i * n;
            table[base] = i as u16;
            for x in 1..n {
                let (p, s) = parent[x];
                table[base + x] = right[table[base + p] as usize][s] as u16;
            }
        }
        let mut group = Self::from_parts(name, n, table, Some(elements))?;
        group.warnings = group.validate()?;
        Ok(group)
    }

    /// Assembles a group from a table already known to satisfy the axioms.
    pub(crate) fn from_parts(
        name: String,
        order: usize,
        table: Vec<u16>,
        perms: Option<Vec<Vec<u32>>>,
    ) -> Result<Self> {
        let mut inverse = vec![u16::MAX; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            match row.iter().position(|&v| v == 0) {
                Some(j) => inverse[i] = j as u16,
                None => return Err(Error::MalformedGroup(format!("element {i} has no inverse"))),
            }
        }
        Ok(Self {
            name,
            order,
            table,
            inverse,
            perms,
            warnings: Vec::new(),
            generators: OnceLock::new(),
            orders: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn trivial() -> Self {
        Self::from_parts("Z1".into(), 1, vec![0], None).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(format!("Z{n}"), &rows)
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(cycle_perm(n, &(0..n).collect::<Vec<_>>()));
            gens.push(cycle_perm(n, &[0, 1]));
        }
        Self::from_permutations(format!("S{n}"), n, &gens, DEFAULT_ORDER_CAP)
    }

    pub fn alternating(n: usize) -> Result<Self> {
        // 3-cycles (0 1 k) generate A_n
        let gens: Vec<Vec<usize>> = (2..n).map(|k| cycle_perm(n, &[0, 1, k])).collect();
        Self::from_permutations(format!("A{n}"), n, &gens, DEFAULT_ORDER_CAP)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as Elem
    }

    /// `g·x·g⁻¹`
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a·b·a⁻¹·b⁻¹`
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, x: Elem, exp: i64) -> Elem {
        let ord = self.element_order(x) as i64;
        let e = exp.rem_euclid(ord);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn row(&self, a: Elem) -> &[u16] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Permutation images of element `x`, when the group was closed from
    /// permutation generators.
    pub fn perm(&self, x: Elem) -> Option<&[u32]> {
        self.perms.as_ref().map(|p| p[x].as_slice())
    }

    /// Element whose permutation equals `images`, if the group carries a
    /// permutation representation and contains it.
    pub fn find_perm(&self, images: &[u32]) -> Option<Elem> {
        self.perms.as_ref().and_then(|p| p.iter().position(|q| q.as_slice() == images))
    }

    /// Structural equality: same order and same table.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }

    /// Notes recorded during validation (sampled associativity).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn element_order(&self, x: Elem) -> usize {
        self.element_orders()[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.orders.get_or_init(|| {
            (0..self.order)
                .map(|x| {
                    let mut k = 1;
                    let mut acc = x;
                    while acc != 0 {
                        acc = self.mul(acc, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// A small generating set chosen greedily: each step adds the element
    /// that enlarges the generated subgroup the most (ties to the lowest
    /// index).
    pub fn generators(&self) -> &[Elem] {
        self.generators.get_or_init(|| subgroup::greedy_generators(self, &[]))
    }

    /// Conjugacy classes ordered by least member.
    pub fn classes(&self) -> &[Vec<Elem>] {
        self.classes.get_or_init(|| subgroup::compute_classes(self))
    }

    /// Latin-square and associativity checks. Full associativity up to
    /// [`FULL_ASSOCIATIVITY_LIMIT`], `10·n²` seeded random triples beyond.
    pub fn validate(&self) -> Result<Vec<String>> {
        let n = self.order;
        check_latin(n, |i, j| self.mul(i, j))?;
        for j in 0..n {
            if self.mul(0, j) != j || self.mul(j, 0) != j {
                return Err(Error::MalformedGroup("index 0 is not the identity".into()));
            }
        }
        for i in 0..n {
            if self.mul(i, self.inv(i)) != 0 {
                return Err(Error::MalformedGroup(format!("bad inverse for {i}")));
            }
        }
        let assoc = |i: usize, j: usize, k: usize| self.mul(self.mul(i, j), k) == self.mul(i, self.mul(j, k));
        let mut warnings = Vec::new();
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !assoc(i, j, k) {
                            return Err(Error::MalformedGroup(format!("not associative at ({i}, {j}, {k})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n as u64);
            for _ in 0..10 * n * n {
                let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(i, j, k) {
                    return Err(Error::MalformedGroup(format!("not associative at ({i}, {j}, {k})")));
                }
            }
            warnings.push(format!(
                "{}: order {n} above {FULL_ASSOCIATIVITY_LIMIT}, associativity sampled on {} triples",
                self.name,
                10 * n * n
            ));
        }
        Ok(warnings)
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }
}

fn check_latin(n: usize, at: impl Fn(usize, usize) -> usize) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = at(i, j);
            if seen[v] == i {
                return Err(Error::MalformedGroup(format!("row {i} repeats element {v}")));
            }
            seen[v] = i;
        }
    }
    seen.iter_mut().for_each(|s| *s = usize::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = at(i, j);
            if seen[v] == j {
                return Err(Error::MalformedGroup(format!("column {j} repeats element {v}")));
            }
            seen[v] = j;
        }
    }
    Ok(())
}

/// One-line images of the cycle `(c0 c1 … ck)` on `degree` points.
pub fn cycle_perm(degree: usize, cycle: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for (k, &a) in cycle.iter().enumerate() {
        p[a] = cycle[(k + 1) % cycle.len()];
    }
    p
}

/// One-line images of a product of disjoint cycles.
pub fn cycles_perm(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for cycle in cycles {
        for (k, &a) in cycle.iter().enumerate() {
            p[a] = cycle[(k + 1) % cycle.len()];
        }
    }
    p
}
