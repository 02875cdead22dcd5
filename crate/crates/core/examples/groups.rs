//! Building finite groups from tables and permutations.

use gspec::group::io::GroupDescription;
use gspec::group::{conjugacy_classes, is_simple, is_solvable, normal_subgroups, FiniteGroup, DEFAULT_ORDER_CAP};

fn main() -> gspec::Result<()> {
    let z2 = GroupDescription::parse(r#"{"format":"cayley-v1","name":"Z2","order":2,"table":[[0,1],[1,0]]}"#)?
        .build(DEFAULT_ORDER_CAP)?;
    println!("{}: order {}", z2.name(), z2.order());

    for g in [FiniteGroup::symmetric(4)?, FiniteGroup::alternating(5)?] {
        let g = g.into_arc();
        let normals = normal_subgroups(&g)?;
        let orders: Vec<usize> = normals.iter().map(|n| n.len()).collect();
        println!(
            "{}: order {}, {} classes, normal subgroup orders {:?}, solvable {}, simple {}",
            g.name(),
            g.order(),
            conjugacy_classes(&g).len(),
            orders,
            is_solvable(&g),
            is_simple(&g)
        );
    }
    Ok(())
}
