//! Multiplication in a twisted group ring and its one-sided ideals.
//!
//! `cargo run --example twisted_ring_ideals`

use twisted_codes::catalog;
use twisted_codes::ring::{Side, DEFAULT_IDEAL_BUDGET};
use twisted_codes::Result;

fn main() -> Result<()> {
    let ring = catalog::find("F3^a[Klein4]")?.ring();
    println!("{}: dimension {} over F_3", ring.system().label(), ring.dim_p());
    for x in 1..4 {
        let g = ring.term(twisted_codes::gf::FieldElem::ONE, x);
        println!("  basis element {x} squares to {:?}", ring.mul(&g, &g).codes());
    }

    for side in [Side::Left, Side::Right] {
        let ideals = ring.enumerate_all_ideals(side, DEFAULT_IDEAL_BUDGET)?;
        let dims: Vec<usize> = ideals.iter().map(|i| i.dim_p()).collect();
        println!("{side:?} ideals: {} with dimensions {dims:?}", ideals.len());
    }

    let v = ring.elem(&[1, 1, 2, 0])?;
    let right = ring.principal_ideal(&v, Side::Right);
    let ann = ring.annihilator(&v, Side::Left);
    println!("v = {:?}: vR has dimension {}, left annihilator dimension {}", v.codes(), right.dim_p(), ann.dim_p());
    println!("  double annihilator recovers the left ideal: {}", ring.double_annihilator_check(&ann));
    for w in ring.elements_of(&right.basis).iter().filter(|w| !w.is_zero()).take(4) {
        println!("  codeword {:?}", w.codes());
    }
    Ok(())
}
