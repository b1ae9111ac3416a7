//! Building crossed systems: validating cocycles, recognizing coboundaries
//! and enumerating every normalized cocycle of a small group.
//!
//! `cargo run --example crossed_systems`

use twisted_codes::crossed::{
    coboundary_from_lambda, enumerate_cocycles, is_coboundary, validate, CrossedSystem, SigmaAction, SystemSpec,
    DEFAULT_COBOUNDARY_BUDGET, DEFAULT_COCYCLE_BUDGET,
};
use twisted_codes::gf::{FieldElem, FiniteField};
use twisted_codes::groups::FiniteGroup;
use twisted_codes::Result;

fn main() -> Result<()> {
    let spec: SystemSpec = serde_json::from_str(r#"{"field": {"p": 3, "m": 1}, "group": {"builtin": "C2"}, "alpha": [[2]]}"#)?;
    let sys = CrossedSystem::from_spec(&spec)?;
    println!("{}: alpha(g, g) = {}", sys.label(), sys.alpha(1, 1));
    match is_coboundary(&sys, DEFAULT_COBOUNDARY_BUDGET)? {
        Some(l) => println!("  coboundary of {l:?}"),
        None => println!("  not a coboundary: -1 is not a square in F_3"),
    }

    let f3 = FiniteField::prime(3)?;
    let c3 = FiniteGroup::cyclic(3);
    let trivial = SigmaAction::trivial(3);
    let alpha = coboundary_from_lambda(&f3, &c3, &trivial, &[FieldElem::ONE, FieldElem(2), FieldElem(2)])?;
    println!("delta(1, 2, 2) on C3 = {:?}", alpha.rows());
    println!("  valid: {}", validate(&f3, &c3, &trivial, &alpha).is_valid());

    let mut broken = alpha.rows();
    broken[1][1] = FieldElem(1);
    broken[1][2] = FieldElem(2);
    let report = validate(&f3, &c3, &trivial, &twisted_codes::crossed::Cocycle::from_rows(&broken)?);
    println!("after editing two entries: {} violations, first {:?}", report.violations.len(), report.violations.first());

    for (name, m) in [("Klein4", 1), ("C4", 1), ("S3", 1)] {
        let field = FiniteField::new(3, m, None)?;
        let group = FiniteGroup::builtin(name)?;
        let all = enumerate_cocycles(&field, &group, &SigmaAction::trivial(group.order()), DEFAULT_COCYCLE_BUDGET)?;
        let classes = all
            .iter()
            .filter(|a| {
                let sys = CrossedSystem::untwisted(field.clone(), group.clone()).with_cocycle((*a).clone()).unwrap();
                is_coboundary(&sys, DEFAULT_COBOUNDARY_BUDGET).unwrap().is_none()
            })
            .count();
        println!("F3[{name}]: {} normalized cocycles, {classes} of them not coboundaries", all.len());
    }
    Ok(())
}
