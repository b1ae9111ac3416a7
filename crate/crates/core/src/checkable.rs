//! Checkable right ideals (`I = Ann_r(v)` for some `v`) and the scan that
//! tests whether every right ideal of a ring is checkable.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{IdealHandle, Ring, RingElem, Side};

pub const DEFAULT_CHECK_BUDGET: u128 = 1_000_000;

/// A `v` with `Ann_r(v) = I`. Any such `v` kills `I` from the left, so only
/// `Ann_ℓ(I)` is searched.
pub fn is_checkable(ring: &Ring, ideal: &IdealHandle, budget: u128) -> Result<Option<RingElem>> {
    if ideal.is_zero() {
        return Ok(Some(ring.one()));
    }
    let left = ring.annihilator_of(ideal, Side::Left);
    search(ring, &left, budget, "checkability witnesses", |v| ring.annihilator(v, Side::Right).basis == ideal.basis)
}

/// A `w ∈ L` with `R·w = L`.
pub fn left_principal_witness(ring: &Ring, left: &IdealHandle, budget: u128) -> Result<Option<RingElem>> {
    search(ring, left, budget, "left generators", |w| ring.principal_ideal(w, Side::Left).basis == left.basis)
}

fn search(
    ring: &Ring,
    space: &IdealHandle,
    budget: u128,
    what: &'static str,
    accept: impl Fn(&RingElem) -> bool,
) -> Result<Option<RingElem>> {
    let size = space.basis.size(ring.fp());
    if size > budget {
        return Err(Error::budget(what, size, budget));
    }
    let mut found = None;
    space.basis.for_each_vector(ring.fp(), |v| {
        let x = ring.contract(v);
        if accept(&x) {
            found = Some(x);
            return false;
        }
        true
    });
    Ok(found)
}

#[derive(Clone, Debug, Serialize)]
pub struct Hypothesis {
    pub p_nilpotent: bool,
    pub sylow_cyclic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealCheck {
    pub dim_p: usize,
    pub checkable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<RingElem>,
    /// `Ann_ℓ(I)` is a principal left ideal.
    pub annihilator_principal: bool,
    /// `Ann_r(Ann_ℓ(I)) = I`.
    pub double_annihilator: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckableReport {
    pub system: String,
    pub hypothesis: Hypothesis,
    pub hypothesis_holds: bool,
    pub ideals: Vec<IdealCheck>,
    pub all_checkable: bool,
    /// Every ideal satisfies the double-annihilator identity and is
    /// checkable exactly when its left annihilator is principal.
    pub frobenius_consistent: bool,
}

impl CheckableReport {
    /// The implication "hypothesis ⟹ every right ideal is checkable".
    pub fn proposition_holds(&self) -> bool {
        !self.hypothesis_holds || self.all_checkable
    }
}

/// Enumerates every right ideal and tests each for checkability.
pub fn code_checkable_scan(ring: &Ring, budget: u128) -> Result<CheckableReport> {
    let p = ring.field().characteristic() as usize;
    let group = ring.group();
    let hypothesis = Hypothesis { p_nilpotent: group.is_p_nilpotent(p), sylow_cyclic: group.has_cyclic_sylow(p) };
    let ideals = ring.enumerate_all_ideals(Side::Right, budget)?;
    let checks: Vec<IdealCheck> = ideals
        .par_iter()
        .map(|ideal| {
            let witness = is_checkable(ring, ideal, budget)?;
            let left = ring.annihilator_of(ideal, Side::Left);
            let annihilator_principal = left_principal_witness(ring, &left, budget)?.is_some();
            let double_annihilator = ring.annihilator_of(&left, Side::Right).basis == ideal.basis;
            Ok(IdealCheck {
                dim_p: ideal.dim_p(),
                checkable: witness.is_some(),
                witness,
                annihilator_principal,
                double_annihilator,
            })
        })
        .collect::<Result<_>>()?;
    let all_checkable = checks.iter().all(|c| c.checkable);
    let frobenius_consistent = checks.iter().all(|c| c.double_annihilator && c.checkable == c.annihilator_principal);
    Ok(CheckableReport {
        system: ring.system().label().to_string(),
        hypothesis_holds: hypothesis.p_nilpotent && hypothesis.sylow_cyclic,
        hypothesis,
        ideals: checks,
        all_checkable,
        frobenius_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::{Cocycle, CrossedSystem, SigmaAction};
    use crate::gf::FiniteField;
    use crate::groups::FiniteGroup;
    use crate::ring::IdealKind;

    fn plain(p: u32, g: FiniteGroup) -> Ring {
        Ring::new(CrossedSystem::untwisted(FiniteField::prime(p).unwrap(), g))
    }

    #[test]
    fn witnesses_on_c4() {
        let r = plain(2, FiniteGroup::cyclic(4));
        let zero = r.zero_ideal(IdealKind::Right);
        assert_eq!(is_checkable(&r, &zero, DEFAULT_CHECK_BUDGET).unwrap(), Some(r.one()));
        let whole = r.whole(IdealKind::Right);
        assert_eq!(is_checkable(&r, &whole, DEFAULT_CHECK_BUDGET).unwrap(), Some(r.zero()));
        let v = r.elem(&[1, 0, 1, 0]).unwrap();
        let i = r.principal_ideal(&v, Side::Right);
        let w = is_checkable(&r, &i, DEFAULT_CHECK_BUDGET).unwrap().unwrap();
        assert_eq!(r.annihilator(&w, Side::Right).basis, i.basis);
        assert_eq!(r.annihilator(&v, Side::Right).basis, i.basis);
    }

    #[test]
    fn left_generators() {
        let r = plain(2, FiniteGroup::cyclic(4));
        assert_eq!(
            left_principal_witness(&r, &r.zero_ideal(IdealKind::Left), DEFAULT_CHECK_BUDGET).unwrap(),
            Some(r.zero())
        );
        assert_eq!(
            left_principal_witness(&r, &r.whole(IdealKind::Left), DEFAULT_CHECK_BUDGET).unwrap(),
            Some(r.one())
        );
        let l = r.principal_ideal(&r.elem(&[1, 1, 0, 0]).unwrap(), Side::Left);
        assert_eq!(l.dim_p(), 3);
        let w = left_principal_witness(&r, &l, DEFAULT_CHECK_BUDGET).unwrap().unwrap();
        assert_eq!(r.principal_ideal(&w, Side::Left).basis, l.basis);
    }

    #[test]
    fn scans_match_the_proposition() {
        let c4 = code_checkable_scan(&plain(2, FiniteGroup::cyclic(4)), DEFAULT_CHECK_BUDGET).unwrap();
        assert!(c4.hypothesis_holds && c4.all_checkable && c4.frobenius_consistent);
        let v4 = code_checkable_scan(&plain(2, FiniteGroup::klein4()), DEFAULT_CHECK_BUDGET).unwrap();
        assert!(!v4.hypothesis_holds && !v4.all_checkable && v4.frobenius_consistent);
        let f4 = FiniteField::new(2, 2, None).unwrap();
        let skew = Ring::new(
            CrossedSystem::new(f4, FiniteGroup::cyclic(2), SigmaAction::new(vec![0, 1]), Cocycle::trivial(2)).unwrap(),
        );
        let s = code_checkable_scan(&skew, DEFAULT_CHECK_BUDGET).unwrap();
        assert!(s.hypothesis_holds && s.all_checkable && s.frobenius_consistent);
    }
}
