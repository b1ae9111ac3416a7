//! Crossed systems `(G, K, σ, α)`: a group acting on `K = F_{p^m}` through
//! Frobenius powers together with a normalized 2-cocycle.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec, FiniteField, TABLE_LIMIT};
use crate::groups::{FiniteGroup, GroupSpec};

pub const DEFAULT_COBOUNDARY_BUDGET: u128 = 10_000_000;
pub const DEFAULT_COCYCLE_BUDGET: u64 = 1_000_000;

/// `g` acts on `K` as `a ↦ a^(p^exps[g])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SigmaAction {
    exps: Vec<u32>,
}

impl SigmaAction {
    pub fn trivial(n: usize) -> Self {
        SigmaAction { exps: vec![0; n] }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        SigmaAction { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, g: usize) -> u32 {
        self.exps[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

/// A table `α(x, y)` of field elements indexed by pairs of group elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cocycle {
    n: usize,
    tab: Vec<FieldElem>,
}

impl Serialize for Cocycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl Cocycle {
    pub fn trivial(n: usize) -> Self {
        Cocycle { n, tab: vec![FieldElem::ONE; n * n] }
    }

    pub fn from_rows(rows: &[Vec<FieldElem>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSystem("cocycle table must be square".into()));
        }
        Ok(Cocycle { n, tab: rows.concat() })
    }

    /// The trivial table with the listed `(x, y, value)` entries overridden.
    pub fn from_entries(n: usize, entries: &[(usize, usize, FieldElem)]) -> Self {
        let mut c = Self::trivial(n);
        for &(x, y, v) in entries {
            c.tab[x * n + y] = v;
        }
        c
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> FieldElem {
        self.tab[x * self.n + y]
    }

    pub fn rows(&self) -> Vec<Vec<FieldElem>> {
        self.tab.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.tab.iter().all(|&a| a == FieldElem::ONE)
    }
}

/// One failed identity in [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// `"shape"`, `"unit"`, `"action"`, `"cocycle"` or `"normalized"`.
    pub kind: &'static str,
    pub elements: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Whether the action condition was checked pointwise on every field
    /// element (fields up to the table limit) and whether that check agreed
    /// with the exponent-homomorphism test.
    pub action_checked_pointwise: bool,
    pub action_formulations_agree: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three compatibility conditions exhaustively.
///
/// The action condition `σ_x σ_y = c_{α(x,y)} σ_{xy}` has a trivial inner
/// automorphism on a commutative field, so it is checked both pointwise and
/// as `exps[x] + exps[y] ≡ exps[xy] (mod m)`; the report records whether
/// the two agree.
pub fn validate(field: &FiniteField, group: &FiniteGroup, sigma: &SigmaAction, alpha: &Cocycle) -> ValidationReport {
    let n = group.order();
    let m = field.degree();
    let mut report = ValidationReport { action_formulations_agree: true, ..Default::default() };
    if sigma.exps.len() != n || alpha.n != n {
        report.violations.push(violation("shape", vec![], format!("group has order {n}, sigma has {} entries, alpha is {}×{}", sigma.exps.len(), alpha.n, alpha.n)));
        return report;
    }
    for (g, &e) in sigma.exps.iter().enumerate() {
        if e >= m {
            report.violations.push(violation("shape", vec![g], format!("exponent {e} is not below the degree {m}")));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let a = alpha.get(x, y);
            if a.0 >= field.order() {
                report.violations.push(violation("shape", vec![x, y], format!("code {} outside the field", a.0)));
            } else if a.is_zero() {
                report.violations.push(violation("unit", vec![x, y], "alpha entry is zero".into()));
            }
        }
    }
    if !report.violations.is_empty() {
        return report;
    }
    for x in 0..n {
        if alpha.get(x, 0) != FieldElem::ONE || alpha.get(0, x) != FieldElem::ONE {
            report.violations.push(violation("normalized", vec![x], "alpha(x, e) and alpha(e, x) must be 1".into()));
        }
    }
    let pointwise = field.order() <= TABLE_LIMIT;
    let mut agree = true;
    for x in 0..n {
        for y in 0..n {
            let xy = group.mul(x, y);
            let algebraic = (sigma.exp(x) + sigma.exp(y)) % m == sigma.exp(xy);
            let holds = if pointwise {
                let a = alpha.get(x, y);
                let a_inv = field.div_unit(FieldElem::ONE, a);
                let literal = field.elements().all(|b| {
                    let lhs = field.frobenius(field.frobenius(b, sigma.exp(y)), sigma.exp(x));
                    let rhs = field.mul(field.mul(a, field.frobenius(b, sigma.exp(xy))), a_inv);
                    lhs == rhs
                });
                agree &= literal == algebraic;
                literal
            } else {
                algebraic
            };
            if !holds {
                report.violations.push(violation("action", vec![x, y], "sigma(x)∘sigma(y) differs from sigma(xy)".into()));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = group.mul(x, y);
            for z in 0..n {
                let lhs = field.mul(alpha.get(x, y), alpha.get(xy, z));
                let rhs = field.mul(field.frobenius(alpha.get(y, z), sigma.exp(x)), alpha.get(x, group.mul(y, z)));
                if lhs != rhs {
                    report.violations.push(violation("cocycle", vec![x, y, z], format!("{lhs} ≠ {rhs}")));
                }
            }
        }
    }
    report.action_checked_pointwise = pointwise;
    report.action_formulations_agree = agree;
    report
}

fn violation(kind: &'static str, elements: Vec<usize>, detail: String) -> Violation {
    Violation { kind, elements, detail }
}

/// `{"field": ..., "group": ..., "sigma": [...], "alpha": [[...]]}`.
///
/// `sigma` and `alpha` may be omitted (trivial). `alpha` may list either the
/// full `n × n` table or only the `(n-1) × (n-1)` block away from the
/// identity, whose row and column are then filled with 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub field: FieldSpec,
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<u32>>>,
}

impl SystemSpec {
    /// The parsed components, before the crossed-system identities are
    /// checked.
    pub fn parts(&self) -> Result<(FiniteField, FiniteGroup, SigmaAction, Cocycle)> {
        let spec = self;
        let field = FiniteField::from_spec(&spec.field)?;
        let group = FiniteGroup::from_spec(&spec.group)?;
        let n = group.order();
        let sigma = match &spec.sigma {
            Some(e) => SigmaAction::new(e.clone()),
            None => SigmaAction::trivial(n),
        };
        let alpha = match &spec.alpha {
            None => Cocycle::trivial(n),
            Some(rows) => {
                let full: Vec<Vec<FieldElem>> = if rows.len() == n {
                    rows.iter().map(|r| r.iter().map(|&c| FieldElem(c)).collect()).collect()
                } else if rows.len() + 1 == n && rows.iter().all(|r| r.len() + 1 == n) {
                    let mut full = vec![vec![FieldElem::ONE; n]; n];
                    for (i, r) in rows.iter().enumerate() {
                        for (j, &c) in r.iter().enumerate() {
                            full[i + 1][j + 1] = FieldElem(c);
                        }
                    }
                    full
                } else {
                    return Err(Error::InvalidSystem(format!(
                        "alpha must be {n}×{n} or {}×{}",
                        n - 1,
                        n - 1
                    )));
                };
                Cocycle::from_rows(&full)?
            }
        };
        Ok((field, group, sigma, alpha))
    }
}

/// A validated crossed system.
#[derive(Clone, Debug)]
pub struct CrossedSystem {
    field: FiniteField,
    group: FiniteGroup,
    sigma: SigmaAction,
    alpha: Cocycle,
    label: String,
}

impl CrossedSystem {
    pub fn new(field: FiniteField, group: FiniteGroup, sigma: SigmaAction, alpha: Cocycle) -> Result<Self> {
        let report = validate(&field, &group, &sigma, &alpha);
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidSystem(format!(
                "{} violated identities, first: {} at {:?} ({})",
                report.violations.len(),
                v.kind,
                v.elements,
                v.detail
            )));
        }
        let label = default_label(&field, &group, &sigma, &alpha);
        Ok(CrossedSystem { field, group, sigma, alpha, label })
    }

    /// The ordinary group algebra `K[G]`.
    pub fn untwisted(field: FiniteField, group: FiniteGroup) -> Self {
        let n = group.order();
        Self::new(field, group, SigmaAction::trivial(n), Cocycle::trivial(n)).expect("trivial system is valid")
    }

    pub fn from_spec(spec: &SystemSpec) -> Result<Self> {
        let (field, group, sigma, alpha) = spec.parts()?;
        Self::new(field, group, sigma, alpha)
    }

    pub fn spec(&self) -> SystemSpec {
        SystemSpec {
            field: self.field.spec(),
            group: self.group.spec(),
            sigma: Some(self.sigma.exps.clone()),
            alpha: Some(self.alpha.rows().iter().map(|r| r.iter().map(|a| a.0).collect()).collect()),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn sigma(&self) -> &SigmaAction {
        &self.sigma
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.alpha
    }

    /// Group order `|G|`.
    pub fn n(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn alpha(&self, x: usize, y: usize) -> FieldElem {
        self.alpha.get(x, y)
    }

    /// `σ(g)(a)`.
    #[inline]
    pub fn act(&self, g: usize, a: FieldElem) -> FieldElem {
        self.field.frobenius(a, self.sigma.exp(g))
    }

    /// `σ(g)⁻¹(a)`.
    pub fn act_inv(&self, g: usize, a: FieldElem) -> FieldElem {
        let m = self.field.degree();
        self.field.frobenius(a, (m - self.sigma.exp(g) % m) % m)
    }

    /// True for ordinary twisted group rings (`σ ≡ 0`).
    pub fn is_twisted_only(&self) -> bool {
        self.sigma.is_trivial()
    }

    pub fn is_untwisted(&self) -> bool {
        self.sigma.is_trivial() && self.alpha.is_trivial()
    }

    /// The same group and action with another cocycle.
    pub fn with_cocycle(&self, alpha: Cocycle) -> Result<Self> {
        Self::new(self.field.clone(), self.group.clone(), self.sigma.clone(), alpha)
    }
}

impl PartialEq for CrossedSystem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.group == other.group && self.sigma == other.sigma && self.alpha == other.alpha
    }
}

impl Eq for CrossedSystem {}

fn default_label(field: &FiniteField, group: &FiniteGroup, sigma: &SigmaAction, alpha: &Cocycle) -> String {
    let mut s = format!("F{}", field.order());
    if !alpha.is_trivial() {
        s.push_str("^a");
    }
    s.push('[');
    s.push_str(group.label());
    if !sigma.is_trivial() {
        s.push_str(";frob");
    }
    s.push(']');
    s
}

/// `δλ(g, h) = λ(g)·σ(g)(λ(h))·λ(gh)⁻¹`, the ordinary coboundary when σ is
/// trivial.
pub fn coboundary_from_lambda(
    field: &FiniteField,
    group: &FiniteGroup,
    sigma: &SigmaAction,
    lambda: &[FieldElem],
) -> Result<Cocycle> {
    let n = group.order();
    if lambda.len() != n {
        return Err(Error::Input(format!("lambda needs {n} entries, got {}", lambda.len())));
    }
    if let Some(g) = lambda.iter().position(|a| a.is_zero()) {
        return Err(Error::ZeroLambdaEntry(g));
    }
    if lambda[0] != FieldElem::ONE {
        return Err(Error::LambdaNotNormalized);
    }
    let mut tab = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let num = field.mul(lambda[g], field.frobenius(lambda[h], sigma.exp(g)));
            tab.push(field.div_unit(num, lambda[group.mul(g, h)]));
        }
    }
    Ok(Cocycle { n, tab })
}

/// Searches for `λ` with `λ(e) = 1` and `δλ = α`. Only defined for trivial
/// actions. The candidate count `(q-1)^(n-1)` must fit in `budget`.
pub fn is_coboundary(sys: &CrossedSystem, budget: u128) -> Result<Option<Vec<FieldElem>>> {
    if !sys.is_twisted_only() {
        return Err(Error::SkewActionUnsupported);
    }
    let n = sys.n();
    let units = (sys.field.order() - 1) as u128;
    let needed = units.checked_pow((n - 1) as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::budget("coboundary candidates", needed, budget));
    }
    let mut lambda = vec![FieldElem::ONE; n];
    Ok(coboundary_dfs(sys, &mut lambda, 1).then_some(lambda))
}

fn coboundary_dfs(sys: &CrossedSystem, lambda: &mut [FieldElem], k: usize) -> bool {
    let n = lambda.len();
    if k == n {
        return true;
    }
    let (f, g) = (&sys.field, &sys.group);
    for u in f.units() {
        lambda[k] = u;
        // Every identity whose largest index is k is now decidable.
        let ok = (0..=k).all(|a| {
            (0..=k).all(|b| {
                let ab = g.mul(a, b);
                if a.max(b).max(ab) != k {
                    return true;
                }
                f.mul(lambda[a], lambda[b]) == f.mul(sys.alpha(a, b), lambda[ab])
            })
        });
        if ok && coboundary_dfs(sys, lambda, k + 1) {
            return true;
        }
    }
    lambda[k] = FieldElem::ONE;
    false
}

/// All normalized 2-cocycles for the given group and action, found by
/// backtracking over the entries away from the identity in row-major order.
/// After each choice, every cocycle identity with a single unknown entry is
/// solved for it. `budget` caps the number of search nodes.
pub fn enumerate_cocycles(
    field: &FiniteField,
    group: &FiniteGroup,
    sigma: &SigmaAction,
    budget: u64,
) -> Result<Vec<Cocycle>> {
    let n = group.order();
    let mut start = vec![None; n * n];
    for x in 0..n {
        start[x] = Some(FieldElem::ONE);
        start[x * n] = Some(FieldElem::ONE);
    }
    let search = CocycleSearch { field, group, sigma, n, nodes: AtomicU64::new(0), budget };
    if !search.propagate(&mut start) {
        return Ok(Vec::new());
    }
    let Some(first) = start.iter().position(Option::is_none) else {
        return Ok(vec![Cocycle { n, tab: start.into_iter().map(Option::unwrap).collect() }]);
    };
    let branches: Vec<Result<Vec<Cocycle>>> = field
        .units()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|u| {
            let mut tab = start.clone();
            tab[first] = Some(u);
            let mut out = Vec::new();
            search.descend(tab, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for b in branches {
        all.extend(b?);
    }
    Ok(all)
}

struct CocycleSearch<'a> {
    field: &'a FiniteField,
    group: &'a FiniteGroup,
    sigma: &'a SigmaAction,
    n: usize,
    nodes: AtomicU64,
    budget: u64,
}

impl CocycleSearch<'_> {
    fn descend(&self, mut tab: Vec<Option<FieldElem>>, out: &mut Vec<Cocycle>) -> Result<()> {
        let visited = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if visited > self.budget {
            return Err(Error::budget("cocycle search nodes", visited as u128, self.budget as u128));
        }
        if !self.propagate(&mut tab) {
            return Ok(());
        }
        match tab.iter().position(Option::is_none) {
            None => out.push(Cocycle { n: self.n, tab: tab.into_iter().map(Option::unwrap).collect() }),
            Some(next) => {
                for u in self.field.units() {
                    let mut t = tab.clone();
                    t[next] = Some(u);
                    self.descend(t, out)?;
                }
            }
        }
        Ok(())
    }

    /// Applies `α(x,y)·α(xy,z) = σ(x)(α(y,z))·α(x,yz)` until nothing changes.
    /// Returns false on a contradiction.
    fn propagate(&self, tab: &mut [Option<FieldElem>]) -> bool {
        let (f, g, n) = (self.field, self.group, self.n);
        let m = f.degree();
        loop {
            let mut changed = false;
            for x in 1..n {
                let sx = self.sigma.exp(x);
                for y in 1..n {
                    let xy = g.mul(x, y);
                    for z in 1..n {
                        let yz = g.mul(y, z);
                        let pos = [x * n + y, xy * n + z, y * n + z, x * n + yz];
                        let vals = pos.map(|i| tab[i]);
                        let unknown: Vec<usize> = (0..4).filter(|&i| vals[i].is_none()).collect();
                        match unknown.len() {
                            0 => {
                                let [a, b, c, d] = vals.map(Option::unwrap);
                                if f.mul(a, b) != f.mul(f.frobenius(c, sx), d) {
                                    return false;
                                }
                            }
                            1 => {
                                let k = unknown[0];
                                let v = |i: usize| vals[i].unwrap();
                                let solved = match k {
                                    0 => f.div_unit(f.mul(f.frobenius(v(2), sx), v(3)), v(1)),
                                    1 => f.div_unit(f.mul(f.frobenius(v(2), sx), v(3)), v(0)),
                                    2 => f.frobenius(f.div_unit(f.mul(v(0), v(1)), v(3)), (m - sx % m) % m),
                                    _ => f.div_unit(f.mul(v(0), v(1)), f.frobenius(v(2), sx)),
                                };
                                tab[pos[k]] = Some(solved);
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32, m: u32) -> FiniteField {
        FiniteField::new(p, m, None).unwrap()
    }

    #[test]
    fn twisted_c2_over_f3_is_valid() {
        let c2 = FiniteGroup::cyclic(2);
        let alpha = Cocycle::from_entries(2, &[(1, 1, FieldElem(2))]);
        let report = validate(&f(3, 1), &c2, &SigmaAction::trivial(2), &alpha);
        assert!(report.is_valid());
    }

    #[test]
    fn frobenius_action_with_non_fixed_cocycle_fails() {
        let f4 = f(2, 2);
        let c2 = FiniteGroup::cyclic(2);
        let alpha = Cocycle::from_entries(2, &[(1, 1, FieldElem(2))]);
        let report = validate(&f4, &c2, &SigmaAction::new(vec![0, 1]), &alpha);
        assert!(report.violations.iter().any(|v| v.kind == "cocycle" && v.elements == vec![1, 1, 1]));
        assert!(CrossedSystem::new(f4, c2, SigmaAction::new(vec![0, 1]), alpha).is_err());
    }

    #[test]
    fn action_formulations_agree_on_all_exponent_tables() {
        // Every exponent assignment on C3 over F_8, homomorphic or not.
        let f8 = f(2, 3);
        let c3 = FiniteGroup::cyclic(3);
        for a in 0..3 {
            for b in 0..3 {
                let sigma = SigmaAction::new(vec![0, a, b]);
                let report = validate(&f8, &c3, &sigma, &Cocycle::trivial(3));
                assert!(report.action_checked_pointwise && report.action_formulations_agree);
                let hom = (a + a) % 3 == b && (a + b) % 3 == 0;
                assert_eq!(report.is_valid(), hom, "exps {:?}", sigma.exps());
            }
        }
    }

    #[test]
    fn coboundary_examples() {
        let f3 = f(3, 1);
        let c3 = FiniteGroup::cyclic(3);
        let triv = SigmaAction::trivial(3);
        let lam = [FieldElem(1), FieldElem(2), FieldElem(2)];
        let a = coboundary_from_lambda(&f3, &c3, &triv, &lam).unwrap();
        assert_eq!(a.get(1, 1), FieldElem(2));
        assert_eq!(a.get(1, 2), FieldElem(1));
        assert!(validate(&f3, &c3, &triv, &a).is_valid());

        let c2 = FiniteGroup::cyclic(2);
        let a = coboundary_from_lambda(&f3, &c2, &SigmaAction::trivial(2), &[FieldElem(1), FieldElem(2)]).unwrap();
        assert!(a.is_trivial());
        assert!(matches!(
            coboundary_from_lambda(&f3, &c2, &SigmaAction::trivial(2), &[FieldElem(1), FieldElem(0)]),
            Err(Error::ZeroLambdaEntry(1))
        ));
        assert!(matches!(
            coboundary_from_lambda(&f3, &c2, &SigmaAction::trivial(2), &[FieldElem(2), FieldElem(1)]),
            Err(Error::LambdaNotNormalized)
        ));
    }

    #[test]
    fn skew_coboundaries_validate() {
        let f4 = f(2, 2);
        let c2 = FiniteGroup::cyclic(2);
        let sigma = SigmaAction::new(vec![0, 1]);
        for u in f4.units() {
            let a = coboundary_from_lambda(&f4, &c2, &sigma, &[FieldElem::ONE, u]).unwrap();
            assert!(validate(&f4, &c2, &sigma, &a).is_valid());
        }
    }

    #[test]
    fn coboundary_detection() {
        let f3 = f(3, 1);
        let c2 = FiniteGroup::cyclic(2);
        let twisted = CrossedSystem::new(
            f3.clone(),
            c2.clone(),
            SigmaAction::trivial(2),
            Cocycle::from_entries(2, &[(1, 1, FieldElem(2))]),
        )
        .unwrap();
        assert_eq!(is_coboundary(&twisted, DEFAULT_COBOUNDARY_BUDGET).unwrap(), None);
        let plain = CrossedSystem::untwisted(f3, c2);
        assert_eq!(is_coboundary(&plain, DEFAULT_COBOUNDARY_BUDGET).unwrap(), Some(vec![FieldElem::ONE; 2]));
        let big = CrossedSystem::untwisted(f(5, 1), FiniteGroup::cyclic(16));
        assert!(matches!(is_coboundary(&big, DEFAULT_COBOUNDARY_BUDGET), Err(Error::BudgetExceeded { .. })));
        let skew = CrossedSystem::new(f(2, 2), FiniteGroup::cyclic(2), SigmaAction::new(vec![0, 1]), Cocycle::trivial(2)).unwrap();
        assert!(matches!(is_coboundary(&skew, 10), Err(Error::SkewActionUnsupported)));
    }

    #[test]
    fn cocycle_counts() {
        let cases = [(3, 1, 2, 2), (2, 2, 2, 3), (3, 1, 3, 4)];
        for (p, m, k, expected) in cases {
            let field = f(p, m);
            let g = FiniteGroup::cyclic(k);
            let all = enumerate_cocycles(&field, &g, &SigmaAction::trivial(k), DEFAULT_COCYCLE_BUDGET).unwrap();
            assert_eq!(all.len(), expected, "C{k} over F_{p}^{m}");
            for a in &all {
                assert!(validate(&field, &g, &SigmaAction::trivial(k), a).is_valid());
            }
        }
    }

    #[test]
    fn cocycle_enumeration_is_complete_on_c2xc2_over_f3() {
        // Brute force over all 2^9 tables as an independent count.
        let field = f(3, 1);
        let g = FiniteGroup::klein4();
        let sigma = SigmaAction::trivial(4);
        let mut brute = 0;
        for bits in 0u32..512 {
            let mut entries = Vec::new();
            for i in 0..9 {
                entries.push((1 + i / 3, 1 + i % 3, FieldElem(1 + (bits >> i & 1))));
            }
            if validate(&field, &g, &sigma, &Cocycle::from_entries(4, &entries)).is_valid() {
                brute += 1;
            }
        }
        let found = enumerate_cocycles(&field, &g, &sigma, DEFAULT_COCYCLE_BUDGET).unwrap();
        assert_eq!(found.len(), brute);
    }

    #[test]
    fn enumeration_budget_is_enforced() {
        let field = f(5, 1);
        let g = FiniteGroup::cyclic(6);
        let out = enumerate_cocycles(&field, &g, &SigmaAction::trivial(6), 3);
        assert!(matches!(out, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn system_spec_accepts_reduced_alpha() {
        let spec: SystemSpec = serde_json::from_str(
            r#"{"field": {"p": 3, "m": 1}, "group": {"builtin": "C2"}, "alpha": [[2]]}"#,
        )
        .unwrap();
        let sys = CrossedSystem::from_spec(&spec).unwrap();
        assert_eq!(sys.alpha(1, 1), FieldElem(2));
        let back = CrossedSystem::from_spec(&sys.spec()).unwrap();
        assert_eq!(back, sys);
    }
}
