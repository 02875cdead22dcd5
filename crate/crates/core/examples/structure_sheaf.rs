//! The structural presheaf of the diagonal A5 x A5 and its sections.

use std::sync::Arc;

use gspec::corpus::builtin;
use gspec::sheaf::StructureSheaf;
use gspec::SpecSpace;

fn main() -> gspec::Result<()> {
    let gg = builtin("A5xA5/diag")?.ggroup;
    let sheaf = StructureSheaf::new(Arc::new(SpecSpace::new(gg)?))?;
    for u in sheaf.opens() {
        let c = sheaf.comparison(u)?;
        println!(
            "U = {:?}: |P(U)| = {}, sections {}, injective {}, surjective {}",
            c.open, c.presheaf_order, c.sheaf_sections, c.injective, c.surjective
        );
    }
    let axioms = sheaf.check_sheaf_axioms()?;
    println!("covers checked: {}, locality {}, gluing {}", axioms.covers, axioms.locality, axioms.gluing);
    println!("stalk orders: {:?}", (0..2).map(|p| sheaf.stalk(p).order()).collect::<Vec<_>>());
    Ok(())
}
