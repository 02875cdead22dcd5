//! Zero divisors of S3 over itself and over a transposition.

use gspec::corpus::builtin;
use gspec::ZeroDivisorMode;

fn main() -> gspec::Result<()> {
    for name in ["S3/S3", "S3/Z2", "S5/A5"] {
        let gg = builtin(name)?.ggroup;
        let fast = gg.zero_divisors(ZeroDivisorMode::Fast);
        let oracle = gg.zero_divisors(ZeroDivisorMode::Oracle);
        assert_eq!(fast, oracle);
        println!("{name}: zero divisors {:?}, G-domain {}", fast.elements(), gg.is_g_domain());
    }
    Ok(())
}
