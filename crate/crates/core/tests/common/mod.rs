//! Brute-force oracles written directly from the definitions. They share
//! only the multiplication table with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gspec::group::FiniteGroup;
use gspec::GGroup;

pub type Set = BTreeSet<usize>;

pub fn conj(h: &FiniteGroup, g: usize, x: usize) -> usize {
    h.mul(h.mul(g, x), h.inv(g))
}

pub fn comm(h: &FiniteGroup, a: usize, b: usize) -> usize {
    h.mul(h.mul(a, b), h.mul(h.inv(a), h.inv(b)))
}

/// Closure of `seed` under multiplication.
pub fn closure(h: &FiniteGroup, seed: impl IntoIterator<Item = usize>) -> Set {
    let mut set: Set = seed.into_iter().collect();
    set.insert(0);
    loop {
        let mut grown = set.clone();
        for &a in &set {
            for &b in &set {
                grown.insert(h.mul(a, b));
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

pub fn classes(h: &FiniteGroup) -> Vec<Set> {
    let mut seen = Set::new();
    let mut out = Vec::new();
    for x in 0..h.order() {
        if seen.contains(&x) {
            continue;
        }
        let class: Set = (0..h.order()).map(|g| conj(h, g, x)).collect();
        seen.extend(&class);
        out.push(class);
    }
    out
}

/// Normal subgroups as the unions of conjugacy classes closed under
/// multiplication; needs few classes.
pub fn normal_subgroups(h: &FiniteGroup) -> BTreeSet<Set> {
    let cls = classes(h);
    assert!(cls.len() <= 16, "too many classes for the oracle");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << cls.len()) {
        if mask & 1 == 0 {
            continue;
        }
        let set: Set = (0..cls.len()).filter(|i| mask >> i & 1 == 1).flat_map(|i| cls[i].iter().copied()).collect();
        if set.iter().all(|&a| set.iter().all(|&b| set.contains(&h.mul(a, b)))) {
            out.insert(set);
        }
    }
    out
}

pub fn gsub(gg: &GGroup) -> Vec<usize> {
    gg.gsub().elements()
}

/// `[G(x), G(y)] ⊆ n`, tested on the generating conjugates.
pub fn orbits_commute_mod(gg: &GGroup, x: usize, y: usize, n: &Set) -> bool {
    let h = gg.ambient();
    let g = gsub(gg);
    let xs: Set = g.iter().map(|&a| conj(h, a, x)).collect();
    let ys: Set = g.iter().map(|&a| conj(h, a, y)).collect();
    xs.iter().all(|&a| ys.iter().all(|&b| n.contains(&comm(h, a, b))))
}

pub fn zero_divisors(gg: &GGroup) -> Set {
    let n = gg.ambient().order();
    let one: Set = [0].into();
    (1..n).filter(|&x| (1..n).any(|y| orbits_commute_mod(gg, x, y, &one))).collect()
}

/// Primes: proper normal subgroups meeting `G` trivially with no zero
/// divisors modulo them.
pub fn spec(gg: &GGroup) -> Vec<Set> {
    let h = gg.ambient();
    let g: Set = gsub(gg).into_iter().collect();
    let mut out: Vec<Set> = normal_subgroups(h)
        .into_iter()
        .filter(|n| n.len() < h.order() && n.intersection(&g).count() == 1)
        .filter(|n| {
            let outside: Vec<usize> = (0..h.order()).filter(|x| !n.contains(x)).collect();
            !outside.iter().any(|&x| outside.iter().any(|&y| orbits_commute_mod(gg, x, y, n)))
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// All homomorphisms `a → b` as element maps, by trying every image of a
/// generating set and extending along products.
pub fn homs(a: &FiniteGroup, b: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = a.generators().to_vec();
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    loop {
        if let Some(map) = extend(a, b, &gens, &images) {
            out.push(map);
        }
        let mut k = 0;
        loop {
            if k == images.len() {
                out.sort();
                return out;
            }
            images[k] += 1;
            if images[k] < b.order() {
                break;
            }
            images[k] = 0;
            k += 1;
        }
    }
}

fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    map[0] = 0;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = a.mul(x, s);
            let v = b.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    let ok = (0..a.order()).all(|x| (0..a.order()).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
    ok.then_some(map)
}
