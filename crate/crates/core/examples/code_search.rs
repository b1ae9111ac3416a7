//! Ranks the codes of principal ideals of skew group rings over `F_9` and
//! `F_4` by `k + d`.
//!
//! `cargo run --release --example code_search`

use twisted_codes::catalog;
use twisted_codes::codes::{search_codes, SearchFilter};
use twisted_codes::ring::Side;
use twisted_codes::Result;

fn main() -> Result<()> {
    let systems = catalog::stretch_systems()?.into_iter().chain([catalog::find("F4[S3;frob]")?, catalog::find("F3[C6]")?]);
    for entry in systems {
        let ring = entry.ring();
        let filter = SearchFilter { min_d: 2, target: Some((6, 3, 4)), ..SearchFilter::default() };
        let report = search_codes(&ring, Side::Left, &filter)?;
        println!("{}: {} left ideals, [6, 3, 4] found: {:?}", entry.name, report.ideals_seen, report.target_found);
        let mut seen = std::collections::HashSet::new();
        for e in report.entries.iter().filter(|e| e.k.is_some() && seen.insert((e.k, e.d))).take(4) {
            println!("  [{}, {}, {}] from {:?}{}", e.n, e.k.unwrap(), e.d, e.generator.codes(), if e.extremal { " extremal" } else { "" });
        }
    }
    Ok(())
}
