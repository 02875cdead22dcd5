//! Closed sets, irreducibility and the Nil homeomorphism.

use std::sync::Arc;

use gspec::corpus::builtin;
use gspec::{nil_homeo_check, SpecSpace};

fn main() -> gspec::Result<()> {
    for name in ["A5xA5/diag", "A5xZ2/A5"] {
        let gg = builtin(name)?.ggroup;
        let space = SpecSpace::new(gg.clone())?;
        let closed: Vec<Vec<usize>> = space.closed_sets().iter().map(|c| c.points()).collect();
        println!("{name}: {} point(s), closed sets {:?}", space.len(), closed);
        println!(
            "  irreducible: {}, components: {}",
            space.is_irreducible_space(),
            space.irreducible_components().len()
        );
        let rad = gg.radical()?;
        println!("  radical is prime: {}", space.point_of(&rad).is_some());
        let homeo = nil_homeo_check(&Arc::clone(&gg))?;
        println!("  Spec(H/Nil) → Spec(H) homeomorphism: {} (|Nil| = {})", homeo.passed, homeo.nil_order);
        print!("{}", space.to_dot());
    }
    Ok(())
}
