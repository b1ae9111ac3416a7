//! Which right ideals are annihilators of a single element.
//!
//! `cargo run --example checkable_scan`

use twisted_codes::catalog;
use twisted_codes::checkable::{code_checkable_scan, DEFAULT_CHECK_BUDGET};
use twisted_codes::Result;

fn main() -> Result<()> {
    for name in ["F2[S3]", "F3[S3]", "F2[Klein4]", "F3^a[C2]", "F4[C2;frob]"] {
        let ring = catalog::find(name)?.ring();
        let report = code_checkable_scan(&ring, DEFAULT_CHECK_BUDGET)?;
        let checkable = report.ideals.iter().filter(|i| i.checkable).count();
        println!(
            "{name}: p-nilpotent {} with cyclic Sylow {} -> {checkable}/{} right ideals checkable (implication holds: {})",
            report.hypothesis.p_nilpotent,
            report.hypothesis.sylow_cyclic,
            report.ideals.len(),
            report.proposition_holds()
        );
        if let Some(bad) = report.ideals.iter().find(|i| !i.checkable) {
            println!("  e.g. a non-checkable ideal of dimension {}", bad.dim_p);
        }
    }
    Ok(())
}
