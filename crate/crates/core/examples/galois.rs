//! Galois groups, orbit counts and algebraic witnesses.

use gspec::corpus::builtin;
use gspec::galois::{algebraic_witness, galois_group, orbit_count, DEFAULT_WITNESS_LENGTH};

fn main() -> gspec::Result<()> {
    for name in ["S5/A5", "S3/1", "S3/S3"] {
        let gg = builtin(name)?.ggroup;
        println!("{name}: |Gal| = {}, orbits {}", galois_group(&gg)?.group.order(), orbit_count(&gg));
    }
    let gg = builtin("S5/A5")?.ggroup;
    for x in [0, 1, 7] {
        println!("  witness for element {x}: {}", algebraic_witness(&gg, x, DEFAULT_WITNESS_LENGTH)?);
    }
    Ok(())
}
