//! Codes meeting `d·k = |G|` are generated by an element supported on a
//! subgroup; decompose them and build new ones from a subgroup.
//!
//! `cargo run --example extremal_codes`

use twisted_codes::catalog;
use twisted_codes::codes::{code_bound, extremal_construct, extremal_decompose, LinearCode, DEFAULT_DISTANCE_BUDGET};
use twisted_codes::ring::{Side, DEFAULT_IDEAL_BUDGET};
use twisted_codes::Result;

fn main() -> Result<()> {
    let ring = catalog::find("F3^a[S3]")?.ring();
    println!("extremal right ideal codes of {}", ring.system().label());
    for ideal in ring.enumerate_principal_ideals(Side::Right, DEFAULT_IDEAL_BUDGET)? {
        let code = LinearCode::with_distance(&ring, &ideal, DEFAULT_DISTANCE_BUDGET)?;
        if code.is_zero() || !code_bound(&code, DEFAULT_DISTANCE_BUDGET)?.extremal {
            continue;
        }
        let w = extremal_decompose(&code, DEFAULT_DISTANCE_BUDGET)?;
        println!("  {} = c·R with c = {:?} supported on subgroup {:?}", code.params(), w.c.codes(), w.h.members());
    }

    let ring = catalog::find("F2[A4]")?.ring();
    let klein = ring.group().normal_subgroups().into_iter().find(|h| h.order() == 4).expect("A4 has a Klein subgroup");
    let c = ring.indicator(klein.members());
    let built = extremal_construct(&ring, &klein, &c, DEFAULT_DISTANCE_BUDGET)?;
    println!("F2[A4] from the Klein subgroup {:?}: {}", klein.members(), built.params());
    Ok(())
}
