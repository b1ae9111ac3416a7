//! The bound `d·k >= |G|` for codes of principal ideals, together with
//! the per-element support/rank bound.
//!
//! `cargo run --example distance_bound`

use twisted_codes::catalog;
use twisted_codes::codes::{code_bound, element_bound, LinearCode, DEFAULT_DISTANCE_BUDGET};
use twisted_codes::ring::{Side, DEFAULT_IDEAL_BUDGET};
use twisted_codes::Result;

fn main() -> Result<()> {
    for name in ["F3^a[C2]", "F3^dmu[S3]", "F3^a[D4]"] {
        let ring = catalog::find(name)?.ring();
        println!("{name} (|G| = {})", ring.n());
        let mut seen = std::collections::BTreeSet::new();
        for (ideal, gen) in ring.principal_ideals_with_generators(Side::Right, DEFAULT_IDEAL_BUDGET)? {
            if ideal.is_zero() {
                continue;
            }
            let b = code_bound(&LinearCode::from_ideal(&ring, &ideal), DEFAULT_DISTANCE_BUDGET)?;
            let e = element_bound(&ring, &gen);
            if seen.insert((b.k, b.d)) {
                println!(
                    "  [n={}, k={}, d={}] d·k = {} {} | generator support {} · rank {:?}",
                    b.n,
                    b.k,
                    b.d,
                    b.product,
                    if b.extremal { "(extremal)" } else { "" },
                    e.support,
                    e.rank_k
                );
            }
        }
    }
    Ok(())
}
