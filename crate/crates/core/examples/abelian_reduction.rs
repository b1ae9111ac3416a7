//! Small ideals of twisted group rings are monomially equivalent to codes
//! of abelian group algebras, with one exception over `F_3[Klein4]`
//! twisted by the quaternion cocycle, whose two-dimensional ideals are
//! the tetracode.
//!
//! `cargo run --example abelian_reduction`

use twisted_codes::abelianize::{Reducer, Route};
use twisted_codes::catalog;
use twisted_codes::codes::LinearCode;
use twisted_codes::ring::{Side, DEFAULT_IDEAL_BUDGET};
use twisted_codes::{Error, Result};

fn main() -> Result<()> {
    let reducer = Reducer::default();
    for name in ["F3^a[S3]", "F3^dmu[C3]", "F3^a[Klein4]"] {
        let ring = catalog::find(name)?.ring();
        println!("{name}");
        for ideal in ring.enumerate_all_ideals(Side::Right, DEFAULT_IDEAL_BUDGET)? {
            match ideal.dim_k {
                Some(k) if (1..=3).contains(&k) => {}
                _ => continue,
            }
            let params = LinearCode::with_distance(&ring, &ideal, u128::MAX)?.params();
            match reducer.reduce(&ring, &ideal) {
                Ok(r) => {
                    let routes: Vec<Route> = r.steps.iter().map(|s| s.route).collect();
                    println!("  {params} -> code of {} via {routes:?}, verified {}", r.final_label, r.verified);
                }
                Err(Error::ReductionStalled(_)) => {
                    let cert = reducer.obstruction(&ring, &ideal)?.expect("a stalled ideal has an obstruction");
                    println!(
                        "  {params} has no abelian equivalent: weights {:?}, best abelian distance {:?} over {:?}",
                        cert.weight_distribution, cert.best_abelian_distance, cert.abelian_groups
                    );
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}
