//! Runs the full verification suite over the builtin corpus.

use gspec::corpus::default_corpus;
use gspec::verify::verify_suite;

fn main() -> gspec::Result<()> {
    let corpus = default_corpus()?;
    let report = verify_suite(&corpus, None)?;
    for r in &report.results {
        println!("{:7} {:?} on {} instance(s)", r.id, r.status, r.instances);
    }
    for d in &report.disputed {
        println!("disputed {}: {}", d.id, d.witness.as_deref().unwrap_or("-"));
    }
    println!("passed: {} in {:.2?}", report.passed, report.elapsed);
    Ok(())
}
