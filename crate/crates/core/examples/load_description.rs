//! Loading G-groups from `ggroup-v1` files.

use gspec::corpus::load;
use gspec::Limits;

fn main() -> gspec::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    for file in ["s4_over_v4.json", "a4_over_v4.json", "a4.json"] {
        let gg = load(&format!("{dir}/{file}"), &Limits::default())?;
        println!(
            "{}: |H| = {}, |G| = {}, G normal {}, primes {}",
            gg.label(),
            gg.ambient().order(),
            gg.gsub().len(),
            gg.gsub_is_normal(),
            gg.spec()?.len()
        );
    }
    Ok(())
}
