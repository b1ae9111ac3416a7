//! The extension group of a crossed system: group axioms, the power closed
//! form, the epimorphism onto the ring, and the transfer of
//! p-nilpotency and cyclic Sylow subgroups.
//!
//! `cargo run --example hat_group_transfer`

use twisted_codes::catalog;
use twisted_codes::hatgroup::HatGroup;
use twisted_codes::Result;

fn main() -> Result<()> {
    for name in ["F3^a[C2]", "F4^a[C4;frob]", "F4[S3;frob]", "F3^a[S3]"] {
        let entry = catalog::find(name)?;
        let ring = entry.ring();
        let hat = HatGroup::build(entry.system.clone())?;
        let axioms = hat.axiom_report();
        let powers = hat.power_report();
        let psi = hat.psi_report(&ring);
        let transfer = hat.transfer_report();
        println!("{name}: extension of order {}", hat.order());
        println!("  group axioms hold: {}", axioms.holds());
        println!(
            "  power closed form failures: {}, unshifted variant failures: {}",
            powers.closed_form_failures, powers.unshifted_formula_failures
        );
        println!("  epimorphism onto the ring: {} (rank {})", psi.surjective && psi.violations == 0, psi.image_rank);
        println!(
            "  p-nilpotent: G {} / extension {}; cyclic Sylow: G {} / extension {}",
            transfer.p_nilpotent_g, transfer.p_nilpotent_hat, transfer.sylow_cyclic_g, transfer.sylow_cyclic_hat
        );
        let x = hat.encode(twisted_codes::gf::FieldElem(2), 1);
        println!("  (2, g1)^-1 = {:?}, (2, g1)^2 = {:?}", hat.decode(hat.inverse_closed_form(x)), hat.decode(hat.power(x, 2)));
    }
    Ok(())
}
