//! Catalog-wide checks of the structure theorems, one per acceptance
//! criterion. Each check recomputes everything it reports.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::abelianize::{equivalence_search, EquivalenceMode, Reducer, DEFAULT_EQUIVALENCE_BUDGET};
use crate::catalog::{self, sign_action, CatalogEntry};
use crate::checkable::{code_checkable_scan, DEFAULT_CHECK_BUDGET};
use crate::codes::{
    code_bound, element_bound, extremal_construct, extremal_decompose, search_codes, LinearCode, SearchFilter,
    DEFAULT_DISTANCE_BUDGET,
};
use crate::crossed::{
    coboundary_from_lambda, enumerate_cocycles, is_coboundary, validate, CrossedSystem, SigmaAction,
    DEFAULT_COBOUNDARY_BUDGET, DEFAULT_COCYCLE_BUDGET,
};
use crate::error::{Error, Result};
use crate::gf::{FieldElem, FiniteField};
use crate::groups::FiniteGroup;
use crate::hatgroup::HatGroup;
use crate::ring::{IdealKind, Ring, Side, DEFAULT_IDEAL_BUDGET, FULL_ENUMERATION_DIM_LIMIT};

pub const DEFAULT_SEED: u64 = 0x7769_7374;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub gating: bool,
    pub passed: bool,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit_ms: Option<u128>,
    pub detail: String,
    /// Instances where the checked statement fails, each with a computed
    /// certificate that no implementation could make it hold.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certified_exceptions: Vec<String>,
    /// Every failing instance is listed in `certified_exceptions`.
    pub failures_certified: bool,
}

impl CriterionResult {
    /// `criterion 7 [PASS] bound exhaustion (812 ms / 30000 ms): ...`.
    pub fn line(&self) -> String {
        let status = match (self.passed, self.gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "MISS",
        };
        let time = match self.limit_ms {
            Some(l) => format!("{} ms / {l} ms", self.elapsed_ms),
            None => format!("{} ms", self.elapsed_ms),
        };
        format!("criterion {:>2} [{status}] {} ({time}): {}", self.id, self.title, self.detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub criteria: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn all_gating_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed || !c.gating)
    }

    /// Gating criteria that failed on an instance without a certificate.
    pub fn uncertified_failures(&self) -> Vec<u32> {
        self.criteria.iter().filter(|c| c.gating && !c.passed && !c.failures_certified).map(|c| c.id).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Run the non-gating `F_9` code search.
    pub stretch: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: DEFAULT_SEED, stretch: true }
    }
}

fn timed(
    id: u32,
    title: &'static str,
    gating: bool,
    limit_ms: Option<u128>,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionResult {
    let start = Instant::now();
    let outcome = body();
    let elapsed_ms = start.elapsed().as_millis();
    let (ok, detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let passed = ok && limit_ms.is_none_or(|l| elapsed_ms < l);
    CriterionResult {
        id,
        title,
        gating,
        passed,
        elapsed_ms,
        limit_ms,
        detail,
        certified_exceptions: Vec::new(),
        failures_certified: passed,
    }
}

pub fn run_suite(options: &SuiteOptions) -> Result<SuiteReport> {
    let entries = catalog::catalog()?;
    let mut criteria = vec![
        cocycle_validation(options.seed),
        hat_axioms(&entries),
        psi_epimorphism(&entries),
        transfer_lemmas(&entries),
        checkability(&entries),
        double_annihilator(),
        bound_exhaustion(&entries),
        extremal_characterization(&entries),
        abelianization(&entries),
        dim1_coboundary(),
    ];
    if options.stretch {
        criteria.push(stretch_search());
    }
    Ok(SuiteReport { criteria })
}

/// Criterion 1: random coboundaries satisfy every cocycle identity.
pub fn cocycle_validation(seed: u64) -> CriterionResult {
    timed(1, "cocycle validation of random coboundaries", true, Some(5_000), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let groups = [
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::cyclic(6),
            FiniteGroup::symmetric(3),
        ];
        let fields = [FiniteField::new(3, 1, None)?, FiniteField::new(2, 2, None)?];
        let combos: Vec<(&FiniteField, &FiniteGroup)> =
            fields.iter().flat_map(|f| groups.iter().map(move |g| (f, g))).collect();
        let (mut tried, mut failed, mut skew) = (0usize, 0usize, 0usize);
        for t in 0..500 {
            let (f, g) = combos[t % combos.len()];
            let n = g.order();
            let units: Vec<FieldElem> = f.units().collect();
            let mut lambda = vec![FieldElem::ONE; n];
            for l in lambda.iter_mut().skip(1) {
                *l = units[rng.gen_range(0..units.len())];
            }
            // Over F_4, every other draw uses a Frobenius action when the
            // group has an index-2 subgroup.
            let sigma = if f.degree() == 2 && t % 2 == 1 {
                g.normal_subgroups()
                    .into_iter()
                    .find(|h| 2 * h.order() == n)
                    .map(|h| sign_action(g, h.members()))
                    .transpose()?
                    .unwrap_or_else(|| SigmaAction::trivial(n))
            } else {
                SigmaAction::trivial(n)
            };
            skew += usize::from(!sigma.is_trivial());
            let alpha = coboundary_from_lambda(f, g, &sigma, &lambda)?;
            tried += 1;
            failed += usize::from(!validate(f, g, &sigma, &alpha).is_valid());
        }
        Ok((failed == 0, format!("{tried} coboundaries ({skew} with a Frobenius action), {failed} invalid")))
    })
}

/// Criterion 2: `Ĝ` is a group, with closed-form inverses and powers.
pub fn hat_axioms(entries: &[CatalogEntry]) -> CriterionResult {
    timed(2, "hat-group axioms and closed forms", true, None, || {
        let results: Vec<(String, usize, bool, usize, usize)> = entries
            .par_iter()
            .filter(|e| (e.system.field().order() as usize - 1) * e.system.n() <= 64)
            .map(|e| {
                let hat = HatGroup::build(e.system.clone())?;
                let axioms = hat.axiom_report();
                let powers = hat.power_report();
                Ok((
                    e.name.clone(),
                    hat.order(),
                    axioms.holds(),
                    powers.closed_form_failures,
                    powers.unshifted_formula_failures,
                ))
            })
            .collect::<Result<_>>()?;
        let bad: Vec<&str> = results.iter().filter(|r| !r.2 || r.3 > 0).map(|r| r.0.as_str()).collect();
        let unshifted: Vec<&str> = results.iter().filter(|r| r.4 > 0).map(|r| r.0.as_str()).collect();
        let f4s3 = results.iter().any(|r| r.0 == "F4[S3]" && r.1 == 18 && r.2);
        let c2 = HatGroup::build(entries.iter().find(|e| e.name == "F3^a[C2]").expect("catalog entry").system.clone())?;
        let c2_cyclic = c2.order() == 4 && c2.group().is_cyclic(c2.group().whole().members());
        Ok((
            bad.is_empty() && f4s3 && c2_cyclic,
            format!(
                "{} systems checked, failing: {bad:?}; F4[S3] order 18 ok: {f4s3}; F3^a[C2] hat group cyclic of order 4: {c2_cyclic}; \
                 unshifted power formula fails on {unshifted:?}",
                results.len()
            ),
        ))
    })
}

/// Criterion 3: ψ is multiplicative on basis pairs and onto.
pub fn psi_epimorphism(entries: &[CatalogEntry]) -> CriterionResult {
    timed(3, "psi epimorphism", true, None, || {
        let results: Vec<(String, usize, usize, bool)> = entries
            .par_iter()
            .map(|e| {
                let hat = HatGroup::build(e.system.clone())?;
                let r = hat.psi_report(&e.ring());
                Ok((e.name.clone(), r.pairs_checked, r.violations, r.surjective))
            })
            .collect::<Result<_>>()?;
        let pairs: usize = results.iter().map(|r| r.1).sum();
        let violations: usize = results.iter().map(|r| r.2).sum();
        let not_onto: Vec<&str> = results.iter().filter(|r| !r.3).map(|r| r.0.as_str()).collect();
        Ok((
            violations == 0 && not_onto.is_empty(),
            format!("{} systems, {pairs} pairs, {violations} violations, not onto: {not_onto:?}", results.len()),
        ))
    })
}

/// Criterion 4: the tabulated facts hold and `G`, `Ĝ` agree on both
/// predicates.
pub fn transfer_lemmas(entries: &[CatalogEntry]) -> CriterionResult {
    timed(4, "transfer lemmas", true, None, || {
        let mut table_mismatch = Vec::new();
        let mut disagreements = Vec::new();
        let mut checked = 0;
        for e in entries.iter().filter(|e| e.expected.is_some()) {
            let exp = e.expected.expect("filtered");
            let g = e.system.group();
            let p = e.system.field().characteristic() as usize;
            if g.is_p_nilpotent(p) != exp.p_nilpotent || g.has_cyclic_sylow(p) != exp.sylow_cyclic {
                table_mismatch.push(e.name.clone());
            }
            let t = HatGroup::build(e.system.clone())?.transfer_report();
            if !t.lemma1_agrees || !t.lemma2_agrees {
                disagreements.push(e.name.clone());
            }
            checked += 1;
        }
        let pairs: Vec<(&str, usize)> = catalog::STRUCTURE_TABLE.iter().map(|r| (r.0, r.1)).collect();
        let covered = pairs.iter().all(|&(g, p)| {
            entries.iter().any(|e| e.system.group().label() == g && e.system.field().characteristic() as usize == p)
        });
        Ok((
            table_mismatch.is_empty() && disagreements.is_empty() && covered && checked > 0,
            format!(
                "{checked} systems over the tabulated groups, table mismatches {table_mismatch:?}, disagreements {disagreements:?}, \
                 every table row covered: {covered}"
            ),
        ))
    })
}

/// Criterion 5: the checkability proposition and its negative control.
pub fn checkability(entries: &[CatalogEntry]) -> CriterionResult {
    timed(5, "checkability proposition", true, Some(60_000), || {
        let named = ["F2[C4]", "F2[C6]", "F4[C2;frob]", "F3^a[C2]"];
        let mut lines = Vec::new();
        let mut ok = true;
        let mut scanned = 0;
        let mut corollary_mismatch = Vec::new();
        for e in entries.iter().filter(|e| e.ring().dim_p() <= FULL_ENUMERATION_DIM_LIMIT) {
            let report = code_checkable_scan(&e.ring(), DEFAULT_CHECK_BUDGET)?;
            scanned += 1;
            ok &= report.frobenius_consistent && report.proposition_holds();
            if named.contains(&e.name.as_str()) {
                ok &= report.all_checkable;
                lines.push(format!("{} all_checkable={}", e.name, report.all_checkable));
            }
            if e.name == "F2[Klein4]" {
                ok &= !report.all_checkable;
                let bad = report.ideals.iter().filter(|i| !i.checkable).count();
                lines.push(format!("F2[Klein4] non-checkable ideals={bad}"));
            }
            if e.system.is_untwisted() && report.hypothesis_holds != report.all_checkable {
                corollary_mismatch.push(e.name.clone());
            }
        }
        Ok((
            ok,
            format!(
                "{}; {scanned} systems scanned; untwisted systems where hypothesis ≠ all_checkable: {corollary_mismatch:?}",
                lines.join(", ")
            ),
        ))
    })
}

/// Criterion 6: `Ann_ℓ(Ann_r(L)) = L` on two Frobenius algebras.
pub fn double_annihilator() -> CriterionResult {
    timed(6, "double annihilator", true, None, || {
        let rings = [
            Ring::new(CrossedSystem::untwisted(FiniteField::prime(2)?, FiniteGroup::cyclic(4))),
            Ring::new(catalog::f4_c2_frobenius()),
        ];
        let mut checked = 0;
        let mut failures = 0;
        for r in &rings {
            for l in r.enumerate_all_ideals(Side::Left, DEFAULT_IDEAL_BUDGET)? {
                checked += 1;
                failures += usize::from(!r.double_annihilator_check(&l));
            }
        }
        Ok((failures == 0 && checked > 0, format!("{checked} left ideals, {failures} failures")))
    })
}

fn code_systems(entries: &[CatalogEntry]) -> impl Iterator<Item = &CatalogEntry> {
    entries.iter().filter(|e| e.code_scale() && e.system.is_twisted_only())
}

/// Criterion 7: the support-rank bound on elements and `d·k ≥ |G|` on
/// codes.
pub fn bound_exhaustion(entries: &[CatalogEntry]) -> CriterionResult {
    timed(7, "bound exhaustion", true, Some(30_000), || {
        let mut element_checks = 0;
        let mut element_failures = 0;
        for p in [2, 3] {
            let r = Ring::new(CrossedSystem::untwisted(FiniteField::prime(p)?, FiniteGroup::symmetric(3)));
            let all = r.whole(IdealKind::Subspace);
            let results: Vec<bool> = r
                .elements_of(&all.basis)
                .par_iter()
                .filter(|f| !f.is_zero())
                .map(|f| element_bound(&r, f).holds == Some(true))
                .collect();
            element_checks += results.len();
            element_failures += results.iter().filter(|&&h| !h).count();
        }
        let mut codes = 0;
        let mut failures = Vec::new();
        for e in code_systems(entries) {
            let r = e.ring();
            let ideals = r.enumerate_principal_ideals(Side::Right, DEFAULT_IDEAL_BUDGET)?;
            let bounds: Vec<_> = ideals
                .par_iter()
                .filter(|i| !i.is_zero())
                .map(|i| code_bound(&LinearCode::from_ideal(&r, i), DEFAULT_DISTANCE_BUDGET))
                .collect::<Result<_>>()?;
            codes += bounds.len();
            for b in bounds.iter().filter(|b| !b.holds || !b.amgm_holds()) {
                failures.push(format!("{} [{}, {}, {}]", e.name, b.n, b.k, b.d));
            }
        }
        Ok((
            element_failures == 0 && failures.is_empty(),
            format!(
                "{element_checks} elements of F2[S3] and F3[S3] ({element_failures} failures); {codes} principal codes \
                 ({} failures {failures:?})",
                failures.len()
            ),
        ))
    })
}

/// Criterion 8: every extremal code decomposes, and construction
/// round-trips.
pub fn extremal_characterization(entries: &[CatalogEntry]) -> CriterionResult {
    timed(8, "extremal characterization", true, None, || {
        let mut extremal = 0;
        let mut failures = Vec::new();
        let mut seen = Vec::new();
        for e in code_systems(entries) {
            let r = e.ring();
            let ideals = r.enumerate_principal_ideals(Side::Right, DEFAULT_IDEAL_BUDGET)?;
            let outcomes: Vec<Option<std::result::Result<(usize, usize), String>>> = ideals
                .par_iter()
                .filter(|i| !i.is_zero())
                .map(|i| {
                    let code = LinearCode::from_ideal(&r, i);
                    let b = code_bound(&code, DEFAULT_DISTANCE_BUDGET).map_err(|x| x.to_string())?;
                    if !b.extremal {
                        return Ok(None);
                    }
                    let w = extremal_decompose(&code, DEFAULT_DISTANCE_BUDGET).map_err(|x| x.to_string())?;
                    let rebuilt = extremal_construct(&r, &w.h, &w.c, DEFAULT_DISTANCE_BUDGET).map_err(|x| x.to_string())?;
                    let again = extremal_decompose(&rebuilt, DEFAULT_DISTANCE_BUDGET).map_err(|x| x.to_string())?;
                    if again.h.order() != w.h.order() || rebuilt.basis() != code.basis() {
                        return Err(format!("round trip changed |H| from {} to {}", w.h.order(), again.h.order()));
                    }
                    Ok(Some((b.d, b.k)))
                })
                .map(|x: std::result::Result<Option<(usize, usize)>, String>| x.transpose())
                .collect();
            for o in outcomes.into_iter().flatten() {
                match o {
                    Ok((d, k)) => {
                        extremal += 1;
                        seen.push((e.name.clone(), r.n(), k, d));
                    }
                    Err(why) => failures.push(format!("{}: {why}", e.name)),
                }
            }
        }
        let has = |name: &str, n: usize, k: usize, d: usize| seen.iter().any(|s| s.0 == name && (s.1, s.2, s.3) == (n, k, d));
        let named = has("F2[C2]", 2, 1, 2) && has("F3[C6]", 6, 2, 3);
        let extremes = seen.iter().any(|s| s.2 == s.1 && s.3 == 1) && seen.iter().any(|s| s.2 == 1 && s.3 == s.1);
        Ok((
            failures.is_empty() && named && extremes,
            format!(
                "{extremal} extremal codes decomposed and rebuilt, failures {failures:?}; [2,1,2] and [6,2,3] present: {named}; \
                 whole-ring and repetition extremes present: {extremes}"
            ),
        ))
    })
}

/// Criterion 9: abelian reduction of every principal ideal of dimension at
/// most 3 over groups of order at most 8.
pub fn abelianization(entries: &[CatalogEntry]) -> CriterionResult {
    let mut certified = Vec::new();
    let mut uncertified = 0;
    let mut other_failures = true;
    let mut result = timed(9, "dimension ≤ 3 abelianization", true, None, || {
        let reducer = Reducer::default();
        let mut total = 0;
        let mut unverified = Vec::new();
        let mut stalled = Vec::new();
        let mut confirmed = 0;
        let mut confirmable = 0;
        let mut unconfirmed = Vec::new();
        let mut searched = 0;
        let mut recursed = 0;
        let mut alternative = 0;
        for e in entries.iter().filter(|e| e.system.is_twisted_only() && e.system.n() <= 8 && e.code_scale()) {
            let r = e.ring();
            for side in [Side::Left, Side::Right] {
                let ideals: Vec<_> = r
                    .enumerate_principal_ideals(side, DEFAULT_IDEAL_BUDGET)?
                    .into_iter()
                    .filter(|i| !i.is_zero() && i.dim_k.is_some_and(|k| k <= 3))
                    .collect();
                let outcomes: Vec<_> = ideals
                    .par_iter()
                    .map(|i| {
                        let red = reducer.reduce(&r, i);
                        let obstruction = match &red {
                            Err(Error::ReductionStalled(_)) => reducer.obstruction(&r, i)?,
                            _ => None,
                        };
                        let confirmation = match &red {
                            Ok(red) if r.n() <= 7 => {
                                let target = Ring::new(CrossedSystem::untwisted(
                                    r.field().clone(),
                                    FiniteGroup::from_spec(&red.final_group)?,
                                ));
                                let fin = target.from_record(&red.final_ideal)?;
                                let src = LinearCode::from_ideal(&r, i);
                                let dst = LinearCode::from_ideal(&target, &fin);
                                Some(
                                    equivalence_search(&src, &dst, EquivalenceMode::Monomial, DEFAULT_EQUIVALENCE_BUDGET)?
                                        .is_some(),
                                )
                            }
                            _ => None,
                        };
                        Ok((red, confirmation, obstruction))
                    })
                    .collect::<Result<_>>()?;
                for (red, confirmation, obstruction) in outcomes {
                    total += 1;
                    match red {
                        Ok(red) => {
                            if !red.verified {
                                unverified.push(e.name.clone());
                            }
                            searched += usize::from(red.steps.iter().any(|s| s.route == crate::abelianize::Route::Search));
                            recursed += usize::from(red.recursed);
                            alternative += usize::from(!red.alternative_discrepancies.is_empty());
                        }
                        Err(_) => {
                            stalled.push(format!("{} {side:?}", e.name));
                            match obstruction {
                                Some(o) => certified.push(format!(
                                    "{} {side:?}: weight distribution {:?} (d = {}) matches none of {} abelian group codes \
                                     over {:?} (best d = {:?})",
                                    e.name,
                                    o.weight_distribution,
                                    o.distance,
                                    o.abelian_codes_compared,
                                    o.abelian_groups,
                                    o.best_abelian_distance
                                )),
                                None => uncertified += 1,
                            }
                        }
                    }
                    if let Some(c) = confirmation {
                        confirmable += 1;
                        if c {
                            confirmed += 1;
                        } else {
                            unconfirmed.push(e.name.clone());
                        }
                    }
                }
            }
        }
        other_failures = !unverified.is_empty() || !unconfirmed.is_empty();
        Ok((
            stalled.is_empty() && unverified.is_empty() && unconfirmed.is_empty(),
            format!(
                "{total} ideals, {} stalled {stalled:?}, {} unverified; {confirmed}/{confirmable} confirmed by \
                 independent search; {searched} needed the search route, {recursed} recursed, {alternative} with \
                 alternative-formula discrepancies",
                stalled.len(),
                unverified.len()
            ),
        ))
    });
    // Only stalls can be certified; errors and unverified chains cannot.
    result.failures_certified = result.passed || (uncertified == 0 && !other_failures && !certified.is_empty());
    result.certified_exceptions = certified;
    result
}

/// Criterion 10: one-dimensional ideals exist exactly for coboundaries.
pub fn dim1_coboundary() -> CriterionResult {
    timed(10, "dimension-1 coboundary", true, None, || {
        let f3 = FiniteField::prime(3)?;
        let c3 = FiniteGroup::cyclic(3);
        let cocycles = enumerate_cocycles(&f3, &c3, &SigmaAction::trivial(3), DEFAULT_COCYCLE_BUDGET)?;
        let mut found = 0;
        for alpha in &cocycles {
            let sys = CrossedSystem::new(f3.clone(), c3.clone(), SigmaAction::trivial(3), alpha.clone())?;
            found += usize::from(is_coboundary(&sys, DEFAULT_COBOUNDARY_BUDGET)?.is_some());
        }
        let twisted = catalog::f3_c2_twisted();
        let not_coboundary = is_coboundary(&twisted, DEFAULT_COBOUNDARY_BUDGET)?.is_none();
        let r = Ring::new(twisted);
        let one_dim = r
            .enumerate_principal_ideals(Side::Left, DEFAULT_IDEAL_BUDGET)?
            .into_iter()
            .chain(r.enumerate_principal_ideals(Side::Right, DEFAULT_IDEAL_BUDGET)?)
            .filter(|i| i.dim_k == Some(1))
            .count();
        Ok((
            cocycles.len() == 4 && found == 4 && not_coboundary && one_dim == 0,
            format!(
                "{} cocycles on C3 over F3, {found} coboundaries; F3^a[C2] coboundary: {}, one-dimensional ideals: {one_dim}",
                cocycles.len(),
                !not_coboundary
            ),
        ))
    })
}

/// Criterion 11 (non-gating): best principal codes of the `F_9` systems.
pub fn stretch_search() -> CriterionResult {
    timed(11, "F9 order-6 code search (stretch)", false, None, || {
        let mut lines = Vec::new();
        let mut found = false;
        for e in catalog::stretch_systems()? {
            let filter = SearchFilter { min_d: 1, target: Some((6, 3, 4)), ..SearchFilter::default() };
            // Left ideals are the K-linear codes of a skew group ring.
            let report = search_codes(&e.ring(), Side::Left, &filter)?;
            found |= report.target_found == Some(true);
            let mut params: Vec<(usize, usize)> =
                report.entries.iter().filter_map(|c| c.k.map(|k| (k, c.d))).filter(|&(k, _)| (2..=4).contains(&k)).collect();
            params.sort_unstable_by_key(|&(k, d)| (k, std::cmp::Reverse(d)));
            params.dedup_by_key(|p| p.0);
            let shown: Vec<String> = params.iter().map(|(k, d)| format!("[6, {k}, {d}]")).collect();
            lines.push(format!("{} best for k = 2..4: {} over {} ideals", e.name, shown.join(" "), report.ideals_seen));
        }
        lines.push(format!("[6, 3, 4]_9 {}", if found { "found" } else { "not found" }));
        Ok((found, lines.join("; ")))
    })
}
