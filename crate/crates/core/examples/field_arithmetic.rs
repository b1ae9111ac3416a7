//! Arithmetic in `F_9 = F_3[x]/(x^2 + 1)`-style extension fields: element
//! codes, inverses, Frobenius and the multiplicative generator.
//!
//! `cargo run --example field_arithmetic`

use twisted_codes::gf::{FieldElem, FiniteField};
use twisted_codes::Result;

fn main() -> Result<()> {
    let f9 = FiniteField::new(3, 2, None)?;
    println!("F_{} with modulus {:?} (coefficients low to high)", f9.order(), f9.modulus());

    let x = FieldElem(3);
    let y = f9.from_digits(&[1, 2]);
    println!("x = {:?}, y = {:?}", f9.digits(x), f9.digits(y));
    println!("x + y = {:?}", f9.digits(f9.add(x, y)));
    println!("x * y = {:?}", f9.digits(f9.mul(x, y)));
    println!("1 / y = {:?}", f9.digits(f9.inv(y)?));
    println!("frobenius(y) = y^3 = {:?}", f9.digits(f9.frobenius(y, 1)));

    let g = f9.generator();
    println!("generator {:?} has order {:?}", f9.digits(g), f9.unit_order(g));

    let fixed: Vec<u32> = f9.elements().filter(|&a| f9.frobenius(a, 1) == a).map(|a| a.0).collect();
    println!("elements fixed by Frobenius (the prime field): {fixed:?}");
    Ok(())
}
