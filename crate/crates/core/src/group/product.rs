use std::sync::Arc;

use super::{Elem, ElementSet, FiniteGroup, GroupHom, MAX_ORDER};
use crate::error::{Error, Result};

/// A quotient group together with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    pub projection: GroupHom,
    pub kernel: ElementSet,
    /// Least member of each coset, indexed by coset.
    pub reps: Vec<Elem>,
}

impl Quotient {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Coset of `x`.
    pub fn project(&self, x: Elem) -> Elem {
        self.projection.apply(x)
    }
}

/// `H/N` with cosets numbered by their least member, so the identity coset
/// is 0.
pub fn quotient(h: &Arc<FiniteGroup>, n: &ElementSet) -> Result<Quotient> {
    n.require_normal()?;
    let order = h.order();
    if n.is_trivial() {
        return Ok(Quotient {
            group: h.clone(),
            projection: GroupHom::identity(h),
            kernel: n.clone(),
            reps: h.elements().collect(),
        });
    }
    let members = n.elements();
    let mut coset = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &m in &members {
            coset[h.mul(x, m)] = id;
        }
    }
    let m = reps.len();
    let mut table = vec![0u16; m * m];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * m + j] = coset[h.mul(a, b)] as u16;
        }
    }
    let name = format!("{}/N{}", h.name(), members.len());
    let group = Arc::new(FiniteGroup::from_parts(name, m, table, None)?);
    let projection = GroupHom::new_unchecked(h.clone(), group.clone(), coset);
    Ok(Quotient { group, projection, kernel: n.clone(), reps })
}

/// `A × B` with `(a, b)` stored at index `a·|B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, order_cap: usize) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let order = na * nb;
    let cap = order_cap.min(MAX_ORDER);
    if order > cap {
        return Err(Error::OrderCap { order, cap });
    }
    let mut table = vec![0u16; order * order];
    for a1 in 0..na {
        for b1 in 0..nb {
            let row = (a1 * nb + b1) * order;
            for a2 in 0..na {
                let a3 = a.mul(a1, a2) * nb;
                for b2 in 0..nb {
                    table[row + a2 * nb + b2] = (a3 + b.mul(b1, b2)) as u16;
                }
            }
        }
    }
    FiniteGroup::from_parts(format!("{}x{}", a.name(), b.name()), order, table, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{centralizer, normal_subgroups, DEFAULT_ORDER_CAP};

    #[test]
    fn klein_four() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v = direct_product(&z2, &z2, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(v.order(), 4);
        assert!(v.validate().is_ok());
        assert!(v.elements().all(|x| v.mul(x, x) == 0));
    }

    #[test]
    fn a5_times_z2_has_center_of_order_two() {
        let a5 = FiniteGroup::alternating(5).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let h = direct_product(&a5, &z2, DEFAULT_ORDER_CAP).unwrap().into_arc();
        assert_eq!(h.order(), 120);
        let center: Vec<Elem> = h.elements().filter(|&x| centralizer(&h, x).is_whole()).collect();
        assert_eq!(center.len(), 2);
        // S5 has trivial center, so the two are not isomorphic
        let s5 = FiniteGroup::symmetric(5).unwrap().into_arc();
        assert_eq!(s5.elements().filter(|&x| centralizer(&s5, x).is_whole()).count(), 1);
    }

    #[test]
    fn product_respects_cap() {
        let a5 = FiniteGroup::alternating(5).unwrap();
        assert!(direct_product(&a5, &a5, 1000).is_err());
        assert_eq!(direct_product(&a5, &a5, DEFAULT_ORDER_CAP).unwrap().order(), 3600);
    }

    #[test]
    fn quotients() {
        let s3 = FiniteGroup::symmetric(3).unwrap().into_arc();
        let normals = normal_subgroups(&s3).unwrap();
        let q = quotient(&s3, &normals[1]).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.project(0), 0);

        let q1 = quotient(&s3, &normals[0]).unwrap();
        assert!(Arc::ptr_eq(&q1.group, &s3));

        let plain = ElementSet::from_elements(&s3, [0]).unwrap();
        assert!(quotient(&s3, &plain).is_err());
    }
}
