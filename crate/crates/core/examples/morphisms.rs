//! G-homomorphisms and the scheme morphisms they induce.

use std::sync::Arc;

use gspec::corpus::builtin;
use gspec::sheaf::{global_hom, scheme_morphism_from_hom, StructureSheaf};
use gspec::SpecSpace;

fn main() -> gspec::Result<()> {
    let l = builtin("A5/A5")?.ggroup;
    let h = builtin("S5/A5")?.ggroup;
    let ls = StructureSheaf::new(Arc::new(SpecSpace::new(l.clone())?))?;
    let hs = StructureSheaf::new(Arc::new(SpecSpace::new(h.clone())?))?;
    let homs = l.hom_g_set(&h)?;
    println!("|Hom_G(A5, S5)| = {}", homs.len());
    for u in &homs {
        let m = scheme_morphism_from_hom(u, &ls, &hs)?;
        let back = global_hom(&m, &ls, &hs)?;
        println!("point map {:?}, round trip exact: {}", m.point_map, back.map() == u.map());
    }
    Ok(())
}
