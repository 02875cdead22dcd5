//! Products of presentations and sums of G-groups at the level of Hom sets.

use gspec::corpus::builtin;
use gspec::equations::{parse_system, product_check, sum_check, Presentation, SolveOptions};

fn main() -> gspec::Result<()> {
    let s5 = builtin("S5/1")?.ggroup;
    let p = Presentation::from(&parse_system("X1^2 = 1;", &s5)?);
    let q = Presentation::from(&parse_system("X1^3 = 1;", &s5)?);
    let r = product_check(&p, &q, &s5, SolveOptions::for_target(&s5))?;
    println!("over S5: {} · {} = {} (bijective {})", r.left, r.right, r.product, r.bijective);

    let s3 = builtin("S3/1")?.ggroup;
    let z2 = builtin("Z2/1")?.ggroup;
    let r = sum_check(&s3, &s3, &z2)?;
    println!("Hom(S3, S3 x Z2) = {} = {} · {} (bijective {})", r.into_product, r.into_left, r.into_right, r.bijective);
    Ok(())
}
