//! The desk-scale catalog of crossed systems on which the structure
//! theorems are checked.

use std::sync::Arc;

use serde::Serialize;

use crate::crossed::{
    coboundary_from_lambda, enumerate_cocycles, is_coboundary, Cocycle, CrossedSystem, SigmaAction,
    DEFAULT_COBOUNDARY_BUDGET, DEFAULT_COCYCLE_BUDGET,
};
use crate::error::{Error, Result};
use crate::gf::{FieldElem, FiniteField};
use crate::groups::FiniteGroup;
use crate::ring::Ring;

/// Systems with at most this many ring elements have every principal ideal
/// enumerated by the code-level checks.
pub const CODE_SCALE_LIMIT: u128 = 1 << 16;

/// Structural facts about `(G, p)` tabulated by hand, rechecked on every run.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExpectedFacts {
    pub p_nilpotent: bool,
    pub sylow_cyclic: bool,
    pub provenance: &'static str,
}

/// `(group, p, p-nilpotent, Sylow p-subgroup cyclic)`.
pub const STRUCTURE_TABLE: &[(&str, usize, bool, bool)] = &[
    ("S3", 2, true, true),
    ("S3", 3, false, true),
    ("A4", 2, false, false),
    ("A4", 3, true, true),
    ("C6", 2, true, true),
    ("Q8", 2, true, false),
    ("Klein4", 2, true, false),
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub system: Arc<CrossedSystem>,
    pub expected: Option<ExpectedFacts>,
}

impl CatalogEntry {
    fn new(name: &str, system: CrossedSystem) -> Self {
        let p = system.field().characteristic() as usize;
        let label = system.group().label().to_string();
        let expected = STRUCTURE_TABLE.iter().find(|(g, q, _, _)| *g == label && *q == p).map(|&(_, _, nil, cyc)| {
            ExpectedFacts { p_nilpotent: nil, sylow_cyclic: cyc, provenance: "definitional table" }
        });
        CatalogEntry { name: name.to_string(), system: Arc::new(system.with_label(name)), expected }
    }

    pub fn ring(&self) -> Ring {
        Ring::from_arc(self.system.clone())
    }

    /// `|R| = q^|G|` is within [`CODE_SCALE_LIMIT`].
    pub fn code_scale(&self) -> bool {
        let q = self.system.field().order() as u128;
        q.checked_pow(self.system.n() as u32).is_some_and(|s| s <= CODE_SCALE_LIMIT)
    }
}

/// Frobenius exponent 1 off an index-2 subgroup and 0 on it: the action of
/// `G → G/H ≅ C2 = Gal(F_{p^2}/F_p)`.
pub fn sign_action(group: &FiniteGroup, index_two: &[usize]) -> Result<SigmaAction> {
    let h = group
        .subgroup(index_two)
        .filter(|h| 2 * h.order() == group.order())
        .ok_or_else(|| Error::Input(format!("{index_two:?} is not an index-2 subgroup")))?;
    Ok(SigmaAction::new((0..group.order()).map(|g| u32::from(!h.contains(g))).collect()))
}

/// [`sign_action`] for the first index-2 subgroup.
fn index_two_action(group: &FiniteGroup) -> SigmaAction {
    let h = group
        .normal_subgroups()
        .into_iter()
        .find(|h| 2 * h.order() == group.order())
        .expect("an index-2 subgroup");
    sign_action(group, h.members()).expect("index-2 subgroup")
}

fn field(p: u32, m: u32) -> FiniteField {
    FiniteField::new(p, m, None).expect("catalog field")
}

fn plain(p: u32, m: u32, group: FiniteGroup) -> CrossedSystem {
    CrossedSystem::untwisted(field(p, m), group)
}

/// The first cocycle (in enumeration order) that is not a coboundary.
pub fn first_non_coboundary(field: &FiniteField, group: &FiniteGroup) -> Result<CrossedSystem> {
    let n = group.order();
    for alpha in enumerate_cocycles(field, group, &SigmaAction::trivial(n), DEFAULT_COCYCLE_BUDGET)? {
        let sys = CrossedSystem::new(field.clone(), group.clone(), SigmaAction::trivial(n), alpha)?;
        if is_coboundary(&sys, DEFAULT_COBOUNDARY_BUDGET)?.is_none() {
            return Ok(sys);
        }
    }
    Err(Error::Input(format!("every cocycle on {} over F{} is a coboundary", group.label(), field.order())))
}

/// `F_3^α[C2]` with `α(g, g) = 2`, isomorphic to `F_9`.
pub fn f3_c2_twisted() -> CrossedSystem {
    let alpha = Cocycle::from_entries(2, &[(1, 1, FieldElem(2))]);
    CrossedSystem::new(field(3, 1), FiniteGroup::cyclic(2), SigmaAction::trivial(2), alpha).expect("valid cocycle")
}

/// `F_3^α[Klein4]` with `ī² = j̄² = k̄² = -1`, `īj̄ = k̄ = -j̄ī` and cyclic
/// relatives: the split quaternion algebra `M_2(F_3)`.
pub fn f3_klein4_quaternion() -> CrossedSystem {
    let (one, two) = (FieldElem(1), FieldElem(2));
    let entries = [
        (1, 1, two),
        (2, 2, two),
        (3, 3, two),
        (1, 2, one),
        (2, 3, one),
        (3, 1, one),
        (2, 1, two),
        (3, 2, two),
        (1, 3, two),
    ];
    let alpha = Cocycle::from_entries(4, &entries);
    CrossedSystem::new(field(3, 1), FiniteGroup::klein4(), SigmaAction::trivial(4), alpha).expect("valid cocycle")
}

/// `F_3^α[C3]` with `α = δμ`, `μ = (1, 2, 2)`.
pub fn f3_c3_coboundary() -> CrossedSystem {
    let f = field(3, 1);
    let g = FiniteGroup::cyclic(3);
    let mu = [FieldElem(1), FieldElem(2), FieldElem(2)];
    let alpha = coboundary_from_lambda(&f, &g, &SigmaAction::trivial(3), &mu).expect("valid λ");
    CrossedSystem::new(f, g, SigmaAction::trivial(3), alpha).expect("coboundaries are cocycles")
}

/// `F_4[C2; Frobenius]`, the skew group ring `F_4 ⋊ C2 ≅ M_2(F_2)`.
pub fn f4_c2_frobenius() -> CrossedSystem {
    CrossedSystem::new(field(2, 2), FiniteGroup::cyclic(2), SigmaAction::new(vec![0, 1]), Cocycle::trivial(2))
        .expect("valid skew system")
}

/// Every catalog system, in a fixed order.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    let mut add = |name: &str, sys: CrossedSystem| out.push(CatalogEntry::new(name, sys));

    for (name, g) in [
        ("F2[C2]", FiniteGroup::cyclic(2)),
        ("F2[C4]", FiniteGroup::cyclic(4)),
        ("F2[C6]", FiniteGroup::cyclic(6)),
        ("F2[S3]", FiniteGroup::symmetric(3)),
        ("F2[Klein4]", FiniteGroup::klein4()),
        ("F2[D4]", FiniteGroup::dihedral(4)),
        ("F2[Q8]", FiniteGroup::quaternion()),
        ("F2[A4]", FiniteGroup::alternating(4)),
    ] {
        add(name, plain(2, 1, g));
    }
    for (name, g) in [
        ("F3[C2]", FiniteGroup::cyclic(2)),
        ("F3[C3]", FiniteGroup::cyclic(3)),
        ("F3[C6]", FiniteGroup::cyclic(6)),
        ("F3[S3]", FiniteGroup::symmetric(3)),
        ("F3[A4]", FiniteGroup::alternating(4)),
    ] {
        add(name, plain(3, 1, g));
    }
    add("F3^a[C2]", f3_c2_twisted());
    add("F3^dmu[C3]", f3_c3_coboundary());
    add("F3^a[Klein4]", f3_klein4_quaternion());
    {
        let f = field(3, 1);
        let s3 = FiniteGroup::symmetric(3);
        let mu = [FieldElem(1), FieldElem(2), FieldElem(1), FieldElem(2), FieldElem(2), FieldElem(1)];
        let alpha = coboundary_from_lambda(&f, &s3, &SigmaAction::trivial(6), &mu)?;
        add("F3^dmu[S3]", CrossedSystem::new(f.clone(), s3.clone(), SigmaAction::trivial(6), alpha)?);
        add("F3^a[S3]", first_non_coboundary(&f, &s3)?);
        add("F3^a[D4]", first_non_coboundary(&f, &FiniteGroup::dihedral(4))?);
    }
    for (name, g) in [
        ("F4[C2]", FiniteGroup::cyclic(2)),
        ("F4[C3]", FiniteGroup::cyclic(3)),
        ("F4[S3]", FiniteGroup::symmetric(3)),
        ("F4[A4]", FiniteGroup::alternating(4)),
    ] {
        add(name, plain(2, 2, g));
    }
    add("F4[C2;frob]", f4_c2_frobenius());
    {
        let f4 = field(2, 2);
        let c4 = FiniteGroup::cyclic(4);
        let sigma = sign_action(&c4, &[0, 2])?;
        let lambda = [FieldElem(1), FieldElem(2), FieldElem(1), FieldElem(1)];
        let alpha = coboundary_from_lambda(&f4, &c4, &sigma, &lambda)?;
        add("F4^a[C4;frob]", CrossedSystem::new(f4.clone(), c4, sigma, alpha)?);
        for (name, g) in [
            ("F4[S3;frob]", FiniteGroup::symmetric(3)),
            ("F4[C6;frob]", FiniteGroup::cyclic(6)),
        ] {
            let sigma = index_two_action(&g);
            add(name, CrossedSystem::new(f4.clone(), g, sigma, Cocycle::trivial(6))?);
        }
        let q8 = FiniteGroup::quaternion();
        let i = q8.generate(&[1]);
        let sigma = sign_action(&q8, i.members())?;
        add("F4[Q8;frob]", CrossedSystem::new(f4.clone(), q8, sigma, Cocycle::trivial(8))?);
        let v4 = FiniteGroup::klein4();
        let sigma = sign_action(&v4, &[0, 1])?;
        add("F4[Klein4;frob]", CrossedSystem::new(f4, v4, sigma, Cocycle::trivial(4))?);
    }
    Ok(out)
}

/// `F_9` systems on the groups of order 6 with a Frobenius action of order 2.
pub fn stretch_systems() -> Result<Vec<CatalogEntry>> {
    let f9 = field(3, 2);
    let mut out = Vec::new();
    for (name, g) in [("F9[C6;frob]", FiniteGroup::cyclic(6)), ("F9[S3;frob]", FiniteGroup::symmetric(3))] {
        let sigma = index_two_action(&g);
        out.push(CatalogEntry::new(name, CrossedSystem::new(f9.clone(), g, sigma, Cocycle::trivial(6))?));
    }
    Ok(out)
}

pub fn find(name: &str) -> Result<CatalogEntry> {
    catalog()?
        .into_iter()
        .chain(stretch_systems()?)
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::Input(format!("no catalog system named {name}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds_with_distinct_names() {
        let c = catalog().unwrap();
        let mut names: Vec<_> = c.iter().map(|e| e.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        assert!(c.iter().any(|e| e.expected.is_some()));
    }

    #[test]
    fn twisted_entries_are_not_coboundaries() {
        for name in ["F3^a[C2]", "F3^a[Klein4]", "F3^a[S3]", "F3^a[D4]"] {
            let e = find(name).unwrap();
            assert!(is_coboundary(&e.system, DEFAULT_COBOUNDARY_BUDGET).unwrap().is_none(), "{name}");
        }
        let e = find("F3^dmu[S3]").unwrap();
        assert!(is_coboundary(&e.system, DEFAULT_COBOUNDARY_BUDGET).unwrap().is_some());
    }

    #[test]
    fn sign_actions() {
        let s3 = FiniteGroup::symmetric(3);
        let s = index_two_action(&s3);
        assert_eq!(s.exps().iter().filter(|&&e| e == 1).count(), 3);
        assert!(sign_action(&s3, &[0, 1]).is_err());
    }
}
