//! The group `Ĝ = K* × G` with `(a, g)(b, h) = (a·σ(g)(b)·α(g, h), gh)` and
//! the algebra epimorphism `ψ: F_p Ĝ → K^α[G; σ]`, `ψ(c·(a, g)‾) = c·a·ḡ`.
//!
//! Element `(a, g)` has index `(code(a) - 1)·|G| + g`, so `(1, e)` is 0.

use std::sync::Arc;

use serde::Serialize;

use crate::crossed::CrossedSystem;
use crate::error::Result;
use crate::gf::FieldElem;
use crate::groups::FiniteGroup;
use crate::linalg::rank;
use crate::ring::{Ring, RingElem};

#[derive(Clone, Debug)]
pub struct HatGroup {
    sys: Arc<CrossedSystem>,
    group: FiniteGroup,
}

/// Outcome of the exhaustive group-axiom check on `Ĝ`.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub order: usize,
    pub closure_and_associativity_failures: usize,
    pub identity_ok: bool,
    pub inverse_formula_failures: usize,
    pub projection_failures: usize,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.closure_and_associativity_failures == 0
            && self.identity_ok
            && self.inverse_formula_failures == 0
            && self.projection_failures == 0
    }
}

/// Comparison of the two closed forms for `(a, g)^b` against repeated
/// multiplication, over every element and every `1 ≤ b ≤ |Ĝ|`.
#[derive(Clone, Debug, Serialize)]
pub struct PowerReport {
    pub checked: usize,
    pub closed_form_failures: usize,
    /// Failures of `∏_k α(g, g^k)·σ(g^k)(a)`, which pairs each cocycle
    /// value with the wrong twist when σ moves the cocycle.
    pub unshifted_formula_failures: usize,
    pub first_unshifted_failure: Option<(usize, usize)>,
}

/// Outcome of the multiplicativity check of ψ on basis pairs.
#[derive(Clone, Debug, Serialize)]
pub struct PsiReport {
    pub pairs_checked: usize,
    pub violations: usize,
    pub image_rank: usize,
    pub surjective: bool,
}

/// Structural predicates of `G` and `Ĝ` computed independently.
#[derive(Clone, Debug, Serialize)]
pub struct TransferReport {
    pub order: usize,
    #[serde(rename = "p_nilpotent_G")]
    pub p_nilpotent_g: bool,
    pub p_nilpotent_hat: bool,
    #[serde(rename = "sylow_cyclic_G")]
    pub sylow_cyclic_g: bool,
    pub sylow_cyclic_hat: bool,
    pub lemma1_agrees: bool,
    pub lemma2_agrees: bool,
}

impl HatGroup {
    pub fn build(sys: Arc<CrossedSystem>) -> Result<Self> {
        let n = sys.n();
        let units = (sys.field().order() - 1) as usize;
        let total = units * n;
        let mut rows = vec![vec![0usize; total]; total];
        for (x, row) in rows.iter_mut().enumerate() {
            let (a, g) = decode_with(n, x);
            for (y, slot) in row.iter_mut().enumerate() {
                let (b, h) = decode_with(n, y);
                *slot = encode_with(n, product(&sys, a, g, b, h), sys.group().mul(g, h));
            }
        }
        let group = FiniteGroup::from_table(rows)?.with_label(format!("hat {}", sys.label()));
        Ok(HatGroup { sys, group })
    }

    pub fn system(&self) -> &CrossedSystem {
        &self.sys
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn encode(&self, a: FieldElem, g: usize) -> usize {
        encode_with(self.sys.n(), a, g)
    }

    pub fn decode(&self, x: usize) -> (FieldElem, usize) {
        decode_with(self.sys.n(), x)
    }

    /// `(x, y)⁻¹ = (σ(y⁻¹)(1 / (x·α(y, y⁻¹))), y⁻¹)`.
    pub fn inverse_closed_form(&self, x: usize) -> usize {
        let (a, g) = self.decode(x);
        let f = self.sys.field();
        let gi = self.sys.group().inv(g);
        let inner = f.div_unit(FieldElem::ONE, f.mul(a, self.sys.alpha(g, gi)));
        self.encode(self.sys.act(gi, inner), gi)
    }

    /// `(a, g)^b = (∏_{k<b} σ(g^k)(a) · ∏_{k<b} σ(g^{b-1-k})(α(g, g^k)), g^b)`,
    /// obtained by unrolling `x^{b+1} = x·x^b`.
    pub fn power(&self, x: usize, b: usize) -> usize {
        let (a, g) = self.decode(x);
        let f = self.sys.field();
        let grp = self.sys.group();
        let mut acc = FieldElem::ONE;
        for k in 0..b {
            let twisted_a = self.sys.act(grp.pow(g, k), a);
            let shifted_alpha = self.sys.act(grp.pow(g, b - 1 - k), self.sys.alpha(g, grp.pow(g, k)));
            acc = f.mul(acc, f.mul(twisted_a, shifted_alpha));
        }
        self.encode(acc, grp.pow(g, b))
    }

    /// `(∏_{k<b} α(g, g^k)·σ(g^k)(a), g^b)`. Agrees with [`power`](Self::power)
    /// whenever σ fixes the cocycle values on `⟨g⟩`, in particular when σ is
    /// trivial.
    pub fn power_unshifted(&self, x: usize, b: usize) -> usize {
        let (a, g) = self.decode(x);
        let f = self.sys.field();
        let grp = self.sys.group();
        let mut acc = FieldElem::ONE;
        for k in 0..b {
            let gk = grp.pow(g, k);
            acc = f.mul(acc, f.mul(self.sys.alpha(g, gk), self.sys.act(gk, a)));
        }
        self.encode(acc, grp.pow(g, b))
    }

    /// Projection onto the second component.
    pub fn project(&self, x: usize) -> usize {
        x % self.sys.n()
    }

    /// Re-checks closure, associativity, identity, the inverse formula and
    /// the projection homomorphism over every element, pair and triple.
    pub fn axiom_report(&self) -> AxiomReport {
        let g = &self.group;
        let n = g.order();
        let mut assoc = 0;
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                for z in 0..n {
                    if g.mul(xy, z) != g.mul(x, g.mul(y, z)) {
                        assoc += 1;
                    }
                }
            }
        }
        let identity_ok = (0..n).all(|x| g.mul(0, x) == x && g.mul(x, 0) == x);
        let inverse_formula_failures = (0..n)
            .filter(|&x| {
                let i = self.inverse_closed_form(x);
                g.mul(x, i) != 0 || g.mul(i, x) != 0 || i != g.inv(x)
            })
            .count();
        let base = self.sys.group();
        let mut projection_failures = 0;
        for x in 0..n {
            for y in 0..n {
                if self.project(g.mul(x, y)) != base.mul(self.project(x), self.project(y)) {
                    projection_failures += 1;
                }
            }
        }
        AxiomReport {
            order: n,
            closure_and_associativity_failures: assoc,
            identity_ok,
            inverse_formula_failures,
            projection_failures,
        }
    }

    pub fn power_report(&self) -> PowerReport {
        let g = &self.group;
        let n = g.order();
        let mut report =
            PowerReport { checked: 0, closed_form_failures: 0, unshifted_formula_failures: 0, first_unshifted_failure: None };
        for x in 0..n {
            let mut iter = x;
            for b in 1..=n {
                report.checked += 1;
                if self.power(x, b) != iter {
                    report.closed_form_failures += 1;
                }
                if self.power_unshifted(x, b) != iter {
                    report.unshifted_formula_failures += 1;
                    report.first_unshifted_failure.get_or_insert((x, b));
                }
                iter = g.mul(iter, x);
            }
        }
        report
    }

    /// `ψ` of a formal F_p-combination, given as one prime-field coefficient
    /// per element of `Ĝ`.
    pub fn psi(&self, ring: &Ring, combo: &[u32]) -> RingElem {
        let f = self.sys.field();
        let mut coeffs = ring.zero().coeffs().to_vec();
        for (x, &c) in combo.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (a, g) = self.decode(x);
            coeffs[g] = f.add(coeffs[g], f.mul(f.from_int(c as i64), a));
        }
        RingElem::from_coeffs(coeffs)
    }

    /// `ψ((a, g)‾) = a·ḡ`.
    pub fn psi_basis(&self, ring: &Ring, x: usize) -> RingElem {
        let (a, g) = self.decode(x);
        ring.term(a, g)
    }

    pub fn psi_report(&self, ring: &Ring) -> PsiReport {
        let n = self.order();
        let images: Vec<RingElem> = (0..n).map(|x| self.psi_basis(ring, x)).collect();
        let mut violations = 0;
        for x in 0..n {
            for y in 0..n {
                if self.psi_basis(ring, self.group.mul(x, y)) != ring.mul(&images[x], &images[y]) {
                    violations += 1;
                }
            }
        }
        let rows: Vec<Vec<u32>> = images.iter().map(|e| ring.expand(e)).collect();
        let image_rank = rank(ring.fp(), &rows);
        PsiReport { pairs_checked: n * n, violations, image_rank, surjective: image_rank == ring.dim_p() }
    }

    /// Computes p-nilpotency and Sylow-cyclicity of `G` and of `Ĝ`
    /// separately, for `p` the characteristic.
    pub fn transfer_report(&self) -> TransferReport {
        let p = self.sys.field().characteristic() as usize;
        let g = self.sys.group();
        let p_nilpotent_g = g.is_p_nilpotent(p);
        let p_nilpotent_hat = self.group.is_p_nilpotent(p);
        let sylow_cyclic_g = g.has_cyclic_sylow(p);
        let sylow_cyclic_hat = self.group.has_cyclic_sylow(p);
        TransferReport {
            order: self.order(),
            p_nilpotent_g,
            p_nilpotent_hat,
            sylow_cyclic_g,
            sylow_cyclic_hat,
            lemma1_agrees: p_nilpotent_g == p_nilpotent_hat,
            lemma2_agrees: sylow_cyclic_g == sylow_cyclic_hat,
        }
    }
}

fn encode_with(n: usize, a: FieldElem, g: usize) -> usize {
    (a.0 as usize - 1) * n + g
}

fn decode_with(n: usize, x: usize) -> (FieldElem, usize) {
    (FieldElem((x / n) as u32 + 1), x % n)
}

fn product(sys: &CrossedSystem, a: FieldElem, g: usize, b: FieldElem, h: usize) -> FieldElem {
    let f = sys.field();
    f.mul(f.mul(a, sys.act(g, b)), sys.alpha(g, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::{enumerate_cocycles, Cocycle, SigmaAction, DEFAULT_COCYCLE_BUDGET};
    use crate::gf::FiniteField;

    fn c2_f3(alpha_gg: u32) -> Arc<CrossedSystem> {
        Arc::new(
            CrossedSystem::new(
                FiniteField::prime(3).unwrap(),
                FiniteGroup::cyclic(2),
                SigmaAction::trivial(2),
                Cocycle::from_entries(2, &[(1, 1, FieldElem(alpha_gg))]),
            )
            .unwrap(),
        )
    }

    fn max_order(g: &FiniteGroup) -> usize {
        (0..g.order()).map(|x| g.element_order(x)).max().unwrap()
    }

    #[test]
    fn twisted_c2_gives_cyclic_hat_group() {
        let hat = HatGroup::build(c2_f3(2)).unwrap();
        assert_eq!(hat.order(), 4);
        let x = hat.encode(FieldElem(2), 1);
        assert_eq!(hat.group().mul(x, x), hat.encode(FieldElem(2), 0));
        assert_eq!(hat.group().element_order(x), 4);
        assert_eq!(hat.power(x, 2), hat.encode(FieldElem(2), 0));
        let plain = HatGroup::build(c2_f3(1)).unwrap();
        assert_eq!(max_order(plain.group()), 2);
    }

    #[test]
    fn hat_group_over_f2_is_the_group() {
        let sys = Arc::new(CrossedSystem::untwisted(FiniteField::prime(2).unwrap(), FiniteGroup::alternating(4)));
        let hat = HatGroup::build(sys.clone()).unwrap();
        assert_eq!(hat.group(), sys.group());
    }

    #[test]
    fn psi_examples() {
        let sys = c2_f3(2);
        let ring = Ring::from_arc(sys.clone());
        let hat = HatGroup::build(sys).unwrap();
        assert_eq!(hat.psi_basis(&ring, 0), ring.one());
        let x = hat.encode(FieldElem(2), 1);
        assert_eq!(hat.psi_basis(&ring, x), ring.term(FieldElem(2), 1));
        let mut combo = vec![0; 4];
        combo[hat.group().mul(x, x)] = 1;
        assert_eq!(hat.psi(&ring, &combo), ring.term(FieldElem(2), 0));
        let r = hat.psi_report(&ring);
        assert_eq!(r.violations, 0);
        assert!(r.surjective);
    }

    #[test]
    fn unshifted_power_formula_fails_for_a_moving_cocycle() {
        // C4 acting on F_4 through the Frobenius, with a cocycle whose values
        // the action does not fix.
        let f4 = FiniteField::new(2, 2, None).unwrap();
        let c4 = FiniteGroup::cyclic(4);
        let sigma = SigmaAction::new(vec![0, 1, 0, 1]);
        let cocycles = enumerate_cocycles(&f4, &c4, &sigma, DEFAULT_COCYCLE_BUDGET).unwrap();
        let mut saw_failure = false;
        for alpha in cocycles {
            let sys = Arc::new(CrossedSystem::new(f4.clone(), c4.clone(), sigma.clone(), alpha).unwrap());
            let hat = HatGroup::build(sys).unwrap();
            let report = hat.power_report();
            assert_eq!(report.closed_form_failures, 0);
            saw_failure |= report.unshifted_formula_failures > 0;
            assert!(hat.axiom_report().holds());
        }
        assert!(saw_failure);
    }

    #[test]
    fn transfer_on_s3_over_f4() {
        let f4 = FiniteField::new(2, 2, None).unwrap();
        let sys = Arc::new(CrossedSystem::untwisted(f4, FiniteGroup::symmetric(3)));
        let hat = HatGroup::build(sys).unwrap();
        let t = hat.transfer_report();
        assert_eq!(t.order, 18);
        assert!(t.p_nilpotent_g && t.p_nilpotent_hat && t.sylow_cyclic_g && t.sylow_cyclic_hat);
        assert!(t.lemma1_agrees && t.lemma2_agrees);
    }
}
