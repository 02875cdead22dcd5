//! Prime ideals, radical and nilpotents of the corpus test beds.

use gspec::corpus::builtin;

fn main() -> gspec::Result<()> {
    for name in ["S5/A5", "A5xZ2/A5", "A5xA5/first", "A5xA5/diag", "S4/S4"] {
        let gg = builtin(name)?.ggroup;
        let orders: Vec<usize> = gg.spec()?.iter().map(|p| p.carrier.len()).collect();
        println!(
            "{name}: ideals {}, prime orders {:?}, |Rad| = {}, |Nil| = {}, G-simple {}",
            gg.ideals()?.len(),
            orders,
            gg.radical()?.len(),
            gg.nil_subgroup().len(),
            gg.is_g_simple()?
        );
    }
    Ok(())
}
