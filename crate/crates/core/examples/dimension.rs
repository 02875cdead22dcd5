//! G-rank, dimension and G-points.

use gspec::corpus::builtin;
use gspec::dimension::{dimension, g_points, g_rank, split_check, Generation};

fn main() -> gspec::Result<()> {
    for name in ["A5xA5/first", "S5/A5", "S3/Z2"] {
        let gg = builtin(name)?.ggroup;
        let cap = gg.limits().rank_cap;
        let plain = g_rank(&gg, Generation::Plain, cap)?;
        let normal = g_rank(&gg, Generation::Normal, cap)?;
        println!(
            "{name}: rank plain {} / normal {}, dimension {}",
            plain.rank,
            normal.rank,
            dimension(&gg, Generation::Plain, cap)?
        );
        for i in g_points(&gg)? {
            let r = split_check(&gg, &gg.spec()?[i].carrier)?;
            println!("  G-point {i}: H = P x G holds: {}", r.passed);
        }
    }
    Ok(())
}
