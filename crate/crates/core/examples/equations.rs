//! Word equations over S3 and S5.

use gspec::corpus::builtin;
use gspec::equations::{noetherian_reduce, parse_system, solve, SolveOptions};

fn main() -> gspec::Result<()> {
    let s3 = builtin("S3/S3")?.ggroup;
    let opts = SolveOptions::for_target(&s3);
    for text in ["X1^2 = 1;", "X1^2 = 1; X1^3 = 1; X1 != 1;", "X1 X2 = X2 X1;"] {
        let sys = parse_system(text, &s3)?;
        println!("S3, {text:<32} {} solution(s)", solve(&sys, &s3, opts)?.count);
    }
    let sys = parse_system("X1^2 = 1; X1^4 = 1;", &s3)?;
    println!("smallest equivalent subset: {:?}", noetherian_reduce(&sys, &s3, opts.budget)?.kept);

    // constants are bound with `let`, by ambient element index
    let s5 = builtin("S5/A5")?.ggroup;
    let c = s5.g_generators()[0];
    let sys = parse_system(&format!("let c = {c}; [X1, c] = 1;"), &s5)?;
    println!(
        "centralizer of element {c} in S5 has {} elements",
        solve(&sys, &s5, SolveOptions::for_target(&s5))?.count
    );
    Ok(())
}
