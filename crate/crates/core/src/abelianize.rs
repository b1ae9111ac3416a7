//! Equivalence of low-dimensional twisted group codes with abelian group
//! codes: scalar actions of normal subgroups, the monomial transport of an
//! ideal of `K^αG` into a group algebra `KH`, untwisting by a coboundary,
//! and a backtracking monomial-equivalence search used both as a validator
//! and as the last resort of [`abelian_reduce`].

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{LinearCode, DEFAULT_DISTANCE_BUDGET};
use crate::crossed::{Cocycle, CrossedSystem, SigmaAction};
use crate::error::{Error, Result};
use crate::gf::{FieldElem, FiniteField};
use crate::groups::{abelian_groups_of_order, FiniteGroup, GroupSpec, Subgroup};
use crate::linalg::Subspace;
use crate::ring::{
    IdealHandle, IdealKind, IdealRecord, Ring, RingElem, Side, DEFAULT_IDEAL_BUDGET, FULL_ENUMERATION_DIM_LIMIT,
};

pub const DEFAULT_EQUIVALENCE_BUDGET: u64 = 1_000_000;

/// The coordinate map `x ↦ y` with `y[perm[j]] = diag[j]·x[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialWitness {
    pub perm: Vec<usize>,
    pub diag: Vec<FieldElem>,
}

impl MonomialWitness {
    pub fn identity(n: usize) -> Self {
        MonomialWitness { perm: (0..n).collect(), diag: vec![FieldElem::ONE; n] }
    }

    pub fn permutation(perm: Vec<usize>) -> Self {
        let n = perm.len();
        MonomialWitness { perm, diag: vec![FieldElem::ONE; n] }
    }

    pub fn is_permutation(&self) -> bool {
        self.diag.iter().all(|&d| d == FieldElem::ONE)
    }

    pub fn apply(&self, field: &FiniteField, x: &RingElem) -> RingElem {
        let mut out = vec![FieldElem::ZERO; self.perm.len()];
        for (j, &a) in x.coeffs().iter().enumerate() {
            out[self.perm[j]] = field.mul(self.diag[j], a);
        }
        RingElem::from_coeffs(out)
    }

    /// The map "`self`, then `next`".
    pub fn then(&self, field: &FiniteField, next: &MonomialWitness) -> MonomialWitness {
        let perm = self.perm.iter().map(|&p| next.perm[p]).collect();
        let diag = self.perm.iter().zip(&self.diag).map(|(&p, &d)| field.mul(next.diag[p], d)).collect();
        MonomialWitness { perm, diag }
    }

    /// Whether the map sends the code of `src` exactly onto that of `dst`.
    pub fn maps_onto(&self, src: &Ring, src_basis: &Subspace, dst: &Ring, dst_basis: &Subspace) -> bool {
        if src_basis.dim() != dst_basis.dim() {
            return false;
        }
        src_basis.rows().iter().all(|r| {
            let y = self.apply(src.field(), &src.contract(r));
            dst_basis.contains(dst.fp(), &dst.expand(&y))
        })
    }
}

/// `ū·x = λ(u)·x` for every `u` in the subgroup and `x` in the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarAction {
    pub subgroup: Subgroup,
    /// `λ` on the members of the subgroup, in the same order.
    pub lambda: Vec<FieldElem>,
}

impl ScalarAction {
    pub fn lambda_of(&self, u: usize) -> FieldElem {
        let i = self.subgroup.members().binary_search(&u).expect("member of the acting subgroup");
        self.lambda[i]
    }

    /// `λ(uv)·α(u, v) = λ(u)·λ(v)` on all pairs.
    pub fn is_compatible(&self, sys: &CrossedSystem) -> bool {
        let f = sys.field();
        let g = sys.group();
        let members = self.subgroup.members();
        members.iter().all(|&u| {
            members.iter().all(|&v| {
                f.mul(self.lambda_of(g.mul(u, v)), sys.alpha(u, v)) == f.mul(self.lambda_of(u), self.lambda_of(v))
            })
        })
    }
}

/// Solves `ū·x_j = λ_u·x_j` over the basis of the ideal for each `u`.
pub fn detect_scalar_action(ring: &Ring, ideal: &IdealHandle, subgroup: &Subgroup) -> Option<ScalarAction> {
    let f = ring.field();
    let rows: Vec<RingElem> = ideal.basis.rows().iter().map(|r| ring.contract(r)).collect();
    let lead = rows.first()?.support()[0];
    let mut lambda = Vec::with_capacity(subgroup.order());
    for &u in subgroup.members() {
        let ubar = ring.term(FieldElem::ONE, u);
        let image = ring.mul(&ubar, &rows[0]);
        let l = f.div_unit(image.coeff(lead), rows[0].coeff(lead));
        if l.is_zero() {
            return None;
        }
        for x in &rows {
            if ring.mul(&ubar, x) != ring.scale(l, x) {
                return None;
            }
        }
        lambda.push(l);
    }
    Some(ScalarAction { subgroup: subgroup.clone(), lambda })
}

/// A K-basis of a K-linear subspace, extending `start` (assumed
/// independent).
fn k_basis(ring: &Ring, basis: &Subspace, start: &[RingElem]) -> Vec<RingElem> {
    let f = ring.field();
    let w = f.generator();
    let mut span = Subspace::zero(ring.dim_p());
    let mut out = Vec::new();
    let add = |x: RingElem, span: &mut Subspace, out: &mut Vec<RingElem>| {
        let mut rows = Vec::new();
        let mut cur = x.clone();
        for _ in 0..ring.m() {
            rows.push(ring.expand(&cur));
            cur = ring.scale(w, &cur);
        }
        *span = span.sum(ring.fp(), &Subspace::from_rows(ring.fp(), ring.dim_p(), rows));
        out.push(x);
    };
    for x in start {
        add(x.clone(), &mut span, &mut out);
    }
    for r in basis.rows() {
        if !span.contains(ring.fp(), r) {
            add(ring.contract(r), &mut span, &mut out);
        }
    }
    out
}

/// Coordinates of `target` in the K-basis `cols`, if it lies in their span.
fn k_coordinates(field: &FiniteField, cols: &[RingElem], target: &RingElem) -> Option<Vec<FieldElem>> {
    let n = target.coeffs().len();
    let k = cols.len();
    // Augmented rows [c_1[g] .. c_k[g] | t[g]].
    let mut rows: Vec<Vec<FieldElem>> = (0..n)
        .map(|g| cols.iter().map(|c| c.coeff(g)).chain(std::iter::once(target.coeff(g))).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(found) = (r..n).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, found);
        let inv = field.div_unit(FieldElem::ONE, rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(*x, field.mul(c, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut out = vec![FieldElem::ZERO; k];
    for (i, &col) in pivots.iter().enumerate() {
        out[col] = rows[i][k];
    }
    Some(out)
}

/// The change of basis `ḡ ↦ λ(g)·ĝ` from `K^αG` onto `KG`, for `α = δλ`.
#[derive(Clone, Debug, Serialize)]
pub struct Untwist {
    pub lambda: Vec<FieldElem>,
    pub witness: MonomialWitness,
}

fn untwist_from_lambda(ring: &Ring, lambda: Vec<FieldElem>, origin: &str) -> Result<Untwist> {
    let sys = ring.system();
    let f = ring.field();
    let g = ring.group();
    for x in 0..ring.n() {
        for y in 0..ring.n() {
            if f.mul(lambda[x], lambda[y]) != f.mul(sys.alpha(x, y), lambda[g.mul(x, y)]) {
                return Err(Error::ScalarExtractionFailed(format!(
                    "{origin}: λ({x})λ({y}) ≠ α({x},{y})λ({x}{y})"
                )));
            }
        }
    }
    let witness = MonomialWitness { perm: (0..ring.n()).collect(), diag: lambda.clone() };
    Ok(Untwist { lambda, witness })
}

/// For a one-dimensional left ideal `Kv` of a twisted group algebra, reads
/// `λ` off `ḡ·v = λ(g)·v`, checks `α = δλ`, and returns the untwisting map.
pub fn dim1_untwist(ring: &Ring, ideal: &IdealHandle) -> Result<Untwist> {
    if !ring.system().is_twisted_only() {
        return Err(Error::SkewActionUnsupported);
    }
    if ideal.dim_k != Some(1) {
        return Err(Error::NotOneDimensional);
    }
    let action = detect_scalar_action(ring, ideal, &ring.group().whole())
        .ok_or_else(|| Error::ScalarExtractionFailed("the group does not act by scalars".into()))?;
    untwist_from_lambda(ring, action.lambda, "one-dimensional ideal")
}

/// Matched coset data for transporting an ideal from `K^αG` to `KH`.
#[derive(Clone, Debug, Serialize)]
pub struct TransportPlan {
    /// `N ⊴ G`.
    pub normal: Subgroup,
    #[serde(skip)]
    pub target: FiniteGroup,
    /// `F ⊴ H`.
    pub target_normal: Subgroup,
    /// `g_i`, with `g_0 = e`.
    pub g_reps: Vec<usize>,
    /// `h_i`, with the isomorphism `G/N → H/F` sending `g_i N ↦ h_i F`.
    pub h_reps: Vec<usize>,
    /// `τ: N → F`, listed along the sorted members of `N`.
    pub tau: Vec<usize>,
    /// `g_i g_j ∈ g_{k(i,j)} N`.
    pub k_table: Vec<Vec<usize>>,
    /// Coset index of every element of `G`.
    pub coset: Vec<usize>,
}

/// How to choose the bijection `τ: N → A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauChoice {
    /// `A` is `N` itself, relabelled along its sorted members.
    Identity,
    /// `A` is cyclic; send `u0^k ↦ k` for a generator `u0` when `N` is
    /// cyclic, else use the sorted-member order.
    Cyclic,
}

impl TransportPlan {
    /// `H = A × G/N` and `F = A × {e}`, where `A` is `N` itself or the cyclic
    /// group of order `|N|`.
    pub fn product_with_quotient(group: &FiniteGroup, normal: &Subgroup, tau_choice: TauChoice) -> Result<Self> {
        let q = group.quotient(normal)?;
        let members = normal.members();
        let a = match tau_choice {
            TauChoice::Identity => group.subgroup_as_group(normal).0.with_label(format!("N{}", normal.order())),
            TauChoice::Cyclic => FiniteGroup::cyclic(normal.order()),
        };
        let s = q.group.order();
        let target = FiniteGroup::direct_product(&a, &q.group);
        let tau_a: Vec<usize> = match tau_choice {
            TauChoice::Cyclic => match members.iter().find(|&&u| group.generate(&[u]).members() == members) {
                Some(&u0) => members
                    .iter()
                    .map(|&u| (0..members.len()).find(|&k| group.pow(u0, k) == u).expect("power of the generator"))
                    .collect(),
                None => (0..members.len()).collect(),
            },
            TauChoice::Identity => (0..members.len()).collect(),
        };
        let tau = tau_a.iter().map(|&t| t * s).collect();
        let target_normal = target
            .subgroup(&(0..a.order()).map(|t| t * s).collect::<Vec<_>>())
            .expect("A × {e} is a subgroup");
        let k_table = (0..s).map(|i| (0..s).map(|j| q.group.mul(i, j)).collect()).collect();
        Ok(TransportPlan {
            normal: normal.clone(),
            target,
            target_normal,
            g_reps: q.reps,
            h_reps: (0..s).collect(),
            tau,
            k_table,
            coset: q.projection,
        })
    }

    pub fn check(&self, group: &FiniteGroup) -> Result<()> {
        let bad = |why: String| Err(Error::PlanInconsistent(why));
        if self.normal.order() != self.target_normal.order() || group.order() != self.target.order() {
            return bad("orders of N and F, or of G and H, differ".into());
        }
        let mut image = self.tau.clone();
        image.sort_unstable();
        if image != self.target_normal.members() || self.tau[0] != 0 {
            return bad("τ is not a bijection N → F fixing the identity".into());
        }
        let s = self.g_reps.len();
        for i in 0..s {
            for j in 0..s {
                let k = self.k_table[i][j];
                let u = group.mul(group.inv(self.g_reps[k]), group.mul(self.g_reps[i], self.g_reps[j]));
                let v = self.target.mul(self.target.inv(self.h_reps[k]), self.target.mul(self.h_reps[i], self.h_reps[j]));
                if !self.normal.contains(u) || !self.target_normal.contains(v) {
                    return bad(format!("coset products disagree at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }

    fn tau_of(&self, u: usize) -> usize {
        self.tau[self.normal.members().binary_search(&u).expect("member of N")]
    }
}

/// Agreement of the alternative coefficient relation
/// `a_{ug} = λ(u)·α(u, g)/α(u⁻¹, u)·a_g` and its position scalars
/// `α(u, u⁻¹)/(α(u, g_i)·λ(u))` with the ideal at hand.
#[derive(Clone, Debug, Default, Serialize)]
pub struct AlternativeTransport {
    pub relation_failures: usize,
    pub image_dim_p: usize,
    pub image_is_ideal: bool,
}

#[derive(Clone, Debug)]
pub struct Transport {
    pub target: Ring,
    pub image: IdealHandle,
    pub witness: MonomialWitness,
    pub image_is_ideal: bool,
    pub alternative: AlternativeTransport,
}

/// Maps a left ideal on which `N` acts by scalars to `KH` by
/// `x = u·g_i ↦ (λ(u)/α(u, g_i))·(h_i τ(u))‾`, after checking the
/// coefficient relation `a_{ug} = α(u, g)/λ(u)·a_g` that makes every coset
/// block of an element a multiple of one fixed pattern.
pub fn scalar_transport(ring: &Ring, ideal: &IdealHandle, action: &ScalarAction, plan: &TransportPlan) -> Result<Transport> {
    if !ring.system().is_twisted_only() {
        return Err(Error::SkewActionUnsupported);
    }
    if action.subgroup != plan.normal {
        return Err(Error::PlanInconsistent("the scalar action and the plan use different subgroups".into()));
    }
    let group = ring.group();
    plan.check(group)?;
    let f = ring.field();
    let sys = ring.system();
    let rows: Vec<RingElem> = ideal.basis.rows().iter().map(|r| ring.contract(r)).collect();
    let mut alternative = AlternativeTransport::default();
    for x in &rows {
        for &u in action.subgroup.members() {
            let l = action.lambda_of(u);
            for g in 0..ring.n() {
                let ug = group.mul(u, g);
                let expected = f.mul(f.div_unit(sys.alpha(u, g), l), x.coeff(g));
                if x.coeff(ug) != expected {
                    return Err(Error::NotScalarInvariant(format!(
                        "a_(u·g) ≠ α(u,g)/λ(u)·a_g at u = {u}, g = {g}"
                    )));
                }
                let alt = f.mul(f.div_unit(f.mul(l, sys.alpha(u, g)), sys.alpha(group.inv(u), u)), x.coeff(g));
                if x.coeff(ug) != alt {
                    alternative.relation_failures += 1;
                }
            }
        }
    }
    let n = ring.n();
    let mut perm = vec![0; n];
    let mut diag = vec![FieldElem::ONE; n];
    let mut alt_diag = vec![FieldElem::ONE; n];
    for x in 0..n {
        let i = plan.coset[x];
        let gi = plan.g_reps[i];
        let u = group.mul(x, group.inv(gi));
        let l = action.lambda_of(u);
        perm[x] = plan.target.mul(plan.h_reps[i], plan.tau_of(u));
        diag[x] = f.div_unit(l, sys.alpha(u, gi));
        alt_diag[x] = f.div_unit(sys.alpha(u, group.mul(gi, group.inv(x))), f.mul(sys.alpha(u, gi), l));
    }
    let target = Ring::new(CrossedSystem::untwisted(f.clone(), plan.target.clone()));
    let witness = MonomialWitness { perm: perm.clone(), diag };
    let kind = ideal.kind;
    let image = target.span(&rows.iter().map(|x| witness.apply(f, x)).collect::<Vec<_>>(), kind);
    let image_is_ideal = image.dim_p() == ideal.dim_p() && target.is_ideal(&image.basis, kind);
    let alt_witness = MonomialWitness { perm, diag: alt_diag };
    let alt_image = target.span(&rows.iter().map(|x| alt_witness.apply(f, x)).collect::<Vec<_>>(), kind);
    alternative.image_dim_p = alt_image.dim_p();
    alternative.image_is_ideal = target.is_ideal(&alt_image.basis, kind);
    Ok(Transport { target, image, witness, image_is_ideal, alternative })
}

/// Whether [`equivalence_search`] may rescale coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EquivalenceMode {
    Permutation,
    Monomial,
}

/// Searches for a monomial (or permutation) map sending the code of `src`
/// onto the code of `dst`. Codes with different weight distributions are
/// rejected before any search. Partial assignments are pruned by comparing
/// the projections of both codes onto the coordinates assigned so far.
pub fn equivalence_search(
    src: &LinearCode,
    dst: &LinearCode,
    mode: EquivalenceMode,
    budget: u64,
) -> Result<Option<MonomialWitness>> {
    let (rs, rd) = (src.ring(), dst.ring());
    if rs.field() != rd.field() || rs.n() != rd.n() || src.basis().dim() != dst.basis().dim() {
        return Ok(None);
    }
    if src.weight_distribution(DEFAULT_DISTANCE_BUDGET)? != dst.weight_distribution(DEFAULT_DISTANCE_BUDGET)? {
        return Ok(None);
    }
    let n = rs.n();
    let field = rs.field().clone();
    let scalars: Vec<FieldElem> = match mode {
        EquivalenceMode::Permutation => vec![FieldElem::ONE],
        EquivalenceMode::Monomial => field.units().collect(),
    };
    let search = EquivalenceSearch {
        ring: rs.clone(),
        src: src.basis_words(),
        dst: dst.basis_words(),
        scalars,
        k_linear: src.is_k_linear() && dst.is_k_linear(),
        nodes: AtomicU64::new(0),
        budget,
    };
    let found = (0..n)
        .into_par_iter()
        .map(|t| {
            let mut perm = vec![t];
            let mut diag = vec![FieldElem::ONE];
            let mut used = vec![false; n];
            used[t] = true;
            if !search.consistent(&perm, &diag) {
                return Ok(None);
            }
            search.descend(&mut perm, &mut diag, &mut used)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    // The first coordinate's scale can be normalized away only for K-linear
    // codes; otherwise retry with every scale.
    let found = match found {
        Some(w) => Some(w),
        None if !search.k_linear && mode == EquivalenceMode::Monomial => {
            let mut hit = None;
            'outer: for t in 0..n {
                for &s in &search.scalars[1..] {
                    let mut perm = vec![t];
                    let mut diag = vec![s];
                    let mut used = vec![false; n];
                    used[t] = true;
                    if search.consistent(&perm, &diag) {
                        if let Some(w) = search.descend(&mut perm, &mut diag, &mut used)? {
                            hit = Some(w);
                            break 'outer;
                        }
                    }
                }
            }
            hit
        }
        None => None,
    };
    Ok(found.filter(|w| w.maps_onto(rs, src.basis(), rd, dst.basis())))
}

struct EquivalenceSearch {
    ring: Ring,
    src: Vec<RingElem>,
    dst: Vec<RingElem>,
    scalars: Vec<FieldElem>,
    k_linear: bool,
    nodes: AtomicU64,
    budget: u64,
}

impl EquivalenceSearch {
    fn descend(&self, perm: &mut Vec<usize>, diag: &mut Vec<FieldElem>, used: &mut [bool]) -> Result<Option<MonomialWitness>> {
        let visited = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if visited > self.budget {
            return Err(Error::budget("equivalence search nodes", visited as u128, self.budget as u128));
        }
        let n = used.len();
        if perm.len() == n {
            return Ok(Some(MonomialWitness { perm: perm.clone(), diag: diag.clone() }));
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            for &s in &self.scalars {
                perm.push(t);
                diag.push(s);
                if self.consistent(perm, diag) {
                    used[t] = true;
                    if let Some(w) = self.descend(perm, diag, used)? {
                        return Ok(Some(w));
                    }
                    used[t] = false;
                }
                perm.pop();
                diag.pop();
            }
        }
        Ok(None)
    }

    /// Compares the projection of the mapped source code onto the assigned
    /// target coordinates with the projection of the target code.
    fn consistent(&self, perm: &[usize], diag: &[FieldElem]) -> bool {
        let f = self.ring.field();
        let fp = self.ring.fp();
        let width = perm.len() * self.ring.m();
        let expand = |vals: Vec<FieldElem>| -> Vec<u32> { vals.into_iter().flat_map(|a| f.digits(a)).collect() };
        let span = |words: &[RingElem], pick: &dyn Fn(&RingElem) -> Vec<FieldElem>| {
            let rows = words.iter().map(|w| expand(pick(w))).collect();
            Subspace::from_rows(fp, width, rows)
        };
        let mapped = span(&self.src, &|w| (0..perm.len()).map(|j| f.mul(diag[j], w.coeff(j))).collect());
        let target = span(&self.dst, &|w| perm.iter().map(|&t| w.coeff(t)).collect());
        mapped == target
    }
}

/// Which construction produced a reduction step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Right ideals of `K^αG` become left ideals of `K^β[G]` with
    /// `β(a, b) = α(b⁻¹, a⁻¹)` under `ḡ ↦ (g⁻¹)‾`.
    Opposite,
    /// Diagonal change of basis by a coboundary.
    Untwist,
    /// Monomial transport along a scalar action of a normal subgroup.
    Transport,
    /// Equivalence found by search against the ideals of an abelian group
    /// algebra.
    Search,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionStep {
    pub route: Route,
    #[serde(flatten)]
    pub witness: MonomialWitness,
    pub target_group: GroupSpec,
    pub target_label: String,
    pub note: String,
}

/// The β₃ data of a three-dimensional ideal with a two-dimensional
/// subideal `M`, where `ḡ·v₃ ≡ β₃(g)·v₃ (mod M)`.
#[derive(Clone, Debug, Serialize)]
pub struct Dichotomy {
    pub beta3: Vec<FieldElem>,
    pub all_nonzero: bool,
    pub all_zero: bool,
    /// `β₃(g)·β₃(h) = α(g, h)·β₃(gh)` on all pairs.
    pub multiplicative: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub dim_k: usize,
    pub source_side: IdealKind,
    pub steps: Vec<ReductionStep>,
    pub final_group: GroupSpec,
    pub final_label: String,
    pub final_ideal: IdealRecord,
    /// Composition of every step.
    pub composed: MonomialWitness,
    /// The composed map sends the source code onto the final code.
    pub verified: bool,
    /// Routes that were tried and did not yield an ideal.
    pub stalls: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dichotomy: Option<Dichotomy>,
    /// Transports where the alternative relation or scalars disagreed.
    pub alternative_discrepancies: Vec<AlternativeTransport>,
    /// Whether a transport to `G' × G/G'` had to be followed by another
    /// step because `G'` is not abelian.
    pub recursed: bool,
}

#[derive(Clone, Debug)]
pub struct ReduceOptions {
    pub ideal_budget: u128,
    pub equivalence_budget: u64,
    /// Cap on reduction steps; defaults to `⌈log₂|G|⌉ + 3`.
    pub max_steps: Option<usize>,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { ideal_budget: DEFAULT_IDEAL_BUDGET, equivalence_budget: DEFAULT_EQUIVALENCE_BUDGET, max_steps: None }
    }
}

/// An ideal of a target algebra with its weight distribution.
type WeighedIdeal = (IdealHandle, Vec<u64>);

/// `(p, m, modulus, n)` of the abelian algebras of order `n` over `F_{p^m}`.
type TargetKey = (u32, u32, Vec<u32>, usize);

struct Targets {
    rings: Vec<(Ring, Vec<WeighedIdeal>)>,
    /// All ideals were enumerated, not only the principal ones.
    complete: bool,
}

/// See [`Reducer::obstruction`].
#[derive(Clone, Debug, Serialize)]
pub struct Obstruction {
    pub weight_distribution: Vec<u64>,
    pub distance: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best_abelian_distance: Option<usize>,
    pub abelian_groups: Vec<String>,
    pub abelian_codes_compared: usize,
}

/// Runs [`Reducer::reduce`] on many ideals, caching the abelian group
/// algebras used by the search fallback.
#[derive(Default)]
pub struct Reducer {
    pub options: ReduceOptions,
    targets: Mutex<HashMap<TargetKey, Arc<Targets>>>,
}

/// Reduces one ideal with default options.
pub fn abelian_reduce(ring: &Ring, ideal: &IdealHandle) -> Result<Reduction> {
    Reducer::default().reduce(ring, ideal)
}

struct State {
    ring: Ring,
    ideal: IdealHandle,
}

impl Reducer {
    pub fn new(options: ReduceOptions) -> Self {
        Reducer { options, targets: Mutex::new(HashMap::new()) }
    }

    /// Finds a chain of monomial maps taking the code of an ideal of
    /// dimension 1 to 3 over `K` to an ideal of a commutative group algebra.
    pub fn reduce(&self, ring: &Ring, ideal: &IdealHandle) -> Result<Reduction> {
        if !ring.system().is_twisted_only() {
            return Err(Error::SkewActionUnsupported);
        }
        let dim_k = ideal.dim_k.ok_or(Error::NotKLinear)?;
        if !(1..=3).contains(&dim_k) {
            return Err(Error::Input(format!("abelian reduction needs dimension 1 to 3 over K, got {dim_k}")));
        }
        let field = ring.field().clone();
        let n = ring.n();
        let mut steps = Vec::new();
        let mut stalls = Vec::new();
        let mut dichotomy = None;
        let mut alternative_discrepancies = Vec::new();
        let mut recursed = false;

        let mut state = match ideal.kind {
            IdealKind::Left | IdealKind::TwoSided => State { ring: ring.clone(), ideal: ideal.clone() },
            IdealKind::Right if ring.is_ideal(&ideal.basis, IdealKind::Left) => {
                State { ring: ring.clone(), ideal: ring.handle(ideal.basis.clone(), IdealKind::Left) }
            }
            IdealKind::Right => {
                let (op, witness) = opposite(ring)?;
                let image = map_ideal(ring, &op, &ideal.basis, &witness, IdealKind::Left);
                steps.push(step(Route::Opposite, witness, &op, "right ideal read as a left ideal of the opposite ring"));
                State { ring: op, ideal: image }
            }
            IdealKind::Subspace => return Err(Error::Input("abelian reduction needs an ideal".into())),
        };

        let max_steps = self.options.max_steps.unwrap_or((usize::BITS - n.leading_zeros()) as usize + 3);
        let mut done = false;
        for _ in 0..max_steps {
            let sys = state.ring.system();
            if state.ring.group().is_abelian() && sys.cocycle().is_trivial() {
                done = true;
                break;
            }
            if !sys.cocycle().is_trivial() {
                if let Some((lambda, origin, dich)) = self.find_coboundary(&state.ring, &state.ideal, dim_k)? {
                    dichotomy = dich.or(dichotomy);
                    let u = untwist_from_lambda(&state.ring, lambda, origin)?;
                    let target = Ring::new(CrossedSystem::untwisted(field.clone(), state.ring.group().clone()));
                    let image = map_ideal(&state.ring, &target, &state.ideal.basis, &u.witness, IdealKind::Left);
                    if !target.is_ideal(&image.basis, IdealKind::Left) {
                        return Err(Error::ScalarExtractionFailed("the untwisted image is not an ideal".into()));
                    }
                    steps.push(step(Route::Untwist, u.witness, &target, origin));
                    state = State { ring: target, ideal: image };
                    continue;
                }
            }
            match self.try_transport(&state, dim_k, &mut stalls, &mut alternative_discrepancies)? {
                Some((next, st)) => {
                    if !next.ring.group().is_abelian() {
                        recursed = true;
                    }
                    steps.push(st);
                    state = next;
                }
                None => break,
            }
        }
        if !done {
            stalls.push(format!("no constructive route from {}", state.ring.system().label()));
            match self.search_abelian(&state)? {
                Some((next, st)) => {
                    steps.push(st);
                    state = next;
                }
                None => {
                    return Err(Error::ReductionStalled(format!(
                        "{}: no abelian group code of order {n} is equivalent; tried: {}",
                        ring.system().label(),
                        stalls.join("; ")
                    )))
                }
            }
        }
        let composed = steps.iter().fold(MonomialWitness::identity(n), |acc, s| acc.then(&field, &s.witness));
        let verified = composed.maps_onto(ring, &ideal.basis, &state.ring, &state.ideal.basis)
            && state.ring.group().is_abelian()
            && state.ring.system().is_untwisted()
            && state.ring.is_ideal(&state.ideal.basis, IdealKind::TwoSided);
        Ok(Reduction {
            dim_k,
            source_side: ideal.kind,
            steps,
            final_group: state.ring.group().spec(),
            final_label: state.ring.group().label().to_string(),
            final_ideal: state.ring.record(&state.ideal),
            composed,
            verified,
            stalls,
            dichotomy,
            alternative_discrepancies,
            recursed,
        })
    }

    /// A `λ` with `α = δλ` read off a one-dimensional subideal, or off the
    /// one-dimensional quotient by a two-dimensional subideal. `None` when
    /// the ideal is simple.
    #[allow(clippy::type_complexity)]
    fn find_coboundary(
        &self,
        ring: &Ring,
        ideal: &IdealHandle,
        dim_k: usize,
    ) -> Result<Option<(Vec<FieldElem>, &'static str, Option<Dichotomy>)>> {
        if dim_k == 1 {
            return Ok(Some((dim1_untwist(ring, ideal)?.lambda, "one-dimensional ideal", None)));
        }
        let mut subideals: Vec<(IdealHandle, RingElem)> = Vec::new();
        ideal.basis.for_each_vector(ring.fp(), |v| {
            let x = ring.contract(v);
            let sub = ring.principal_ideal(&x, Side::Left);
            if !sub.is_zero() && sub.dim_p() < ideal.dim_p() && !subideals.iter().any(|(s, _)| s.basis == sub.basis) {
                subideals.push((sub, x));
            }
            true
        });
        if let Some((one, _)) = subideals.iter().find(|(s, _)| s.dim_k == Some(1)) {
            return Ok(Some((dim1_untwist(ring, one)?.lambda, "one-dimensional subideal", None)));
        }
        if dim_k == 3 {
            if let Some((m, _)) = subideals.iter().find(|(s, _)| s.dim_k == Some(2)) {
                let d = beta3(ring, ideal, m)?;
                if d.all_nonzero && d.multiplicative {
                    return Ok(Some((d.beta3.clone(), "quotient by a two-dimensional subideal", Some(d))));
                }
                return Err(Error::ScalarExtractionFailed(format!(
                    "β₃ dichotomy fails: all_nonzero = {}, all_zero = {}, multiplicative = {}",
                    d.all_nonzero, d.all_zero, d.multiplicative
                )));
            }
        }
        Ok(None)
    }

    #[allow(clippy::type_complexity)]
    fn try_transport(
        &self,
        state: &State,
        dim_k: usize,
        stalls: &mut Vec<String>,
        discrepancies: &mut Vec<AlternativeTransport>,
    ) -> Result<Option<(State, ReductionStep)>> {
        let ring = &state.ring;
        let group = ring.group();
        let derived = group.commutator_subgroup();
        let mut candidates: Vec<(Subgroup, TauChoice, &'static str)> = Vec::new();
        if dim_k == 1 && ring.system().is_untwisted() {
            if let Some(action) = detect_scalar_action(ring, &state.ideal, &group.whole()) {
                let kernel: Vec<usize> = group
                    .whole()
                    .members()
                    .iter()
                    .copied()
                    .filter(|&g| action.lambda_of(g) == FieldElem::ONE)
                    .collect();
                if let Some(k) = group.subgroup(&kernel) {
                    candidates.push((k, TauChoice::Cyclic, "kernel of the one-dimensional character"));
                }
            }
        }
        candidates.push((derived.clone(), TauChoice::Identity, "commutator subgroup"));
        let mut others: Vec<Subgroup> = group
            .normal_subgroups()
            .into_iter()
            .filter(|h| h != &derived && derived.members().iter().all(|&u| h.contains(u)))
            .collect();
        others.sort_by_key(|h| std::cmp::Reverse(h.order()));
        candidates.extend(others.into_iter().map(|h| (h, TauChoice::Cyclic, "normal subgroup containing the commutator subgroup")));

        for (normal, tau, why) in candidates {
            let Some(action) = detect_scalar_action(ring, &state.ideal, &normal) else {
                stalls.push(format!("{why} {:?} does not act by scalars", normal.members()));
                continue;
            };
            let plan = TransportPlan::product_with_quotient(group, &normal, tau)?;
            let t = scalar_transport(ring, &state.ideal, &action, &plan)?;
            if t.alternative.relation_failures > 0 || !t.alternative.image_is_ideal {
                discrepancies.push(t.alternative.clone());
            }
            if !t.image_is_ideal {
                stalls.push(format!("transport along the {why} {:?} does not give an ideal", normal.members()));
                continue;
            }
            let st = step(
                Route::Transport,
                t.witness,
                &t.target,
                &format!("{why} of order {} acting by scalars", normal.order()),
            );
            let ideal = t.target.handle(t.image.basis, IdealKind::Left);
            return Ok(Some((State { ring: t.target, ideal }, st)));
        }
        Ok(None)
    }

    /// Every ideal of dimension at most 3 of every commutative group algebra
    /// of order `n` over `field`, or only the principal ones when the
    /// algebras are too large for the sum closure.
    fn targets(&self, field: &FiniteField, n: usize) -> Result<Arc<Targets>> {
        let key = (field.characteristic(), field.degree(), field.modulus().to_vec(), n);
        if let Some(t) = self.targets.lock().expect("cache lock").get(&key) {
            return Ok(t.clone());
        }
        let complete = n * field.degree() as usize <= FULL_ENUMERATION_DIM_LIMIT;
        let mut rings = Vec::new();
        for a in abelian_groups_of_order(n) {
            let ring = Ring::new(CrossedSystem::untwisted(field.clone(), a));
            let all = if complete {
                ring.enumerate_all_ideals(Side::Left, self.options.ideal_budget)?
            } else {
                ring.enumerate_principal_ideals(Side::Left, self.options.ideal_budget)?
            };
            let ideals = all
                .into_iter()
                .filter(|i| !i.is_zero() && i.dim_k.is_some_and(|k| k <= 3))
                .map(|i| {
                    let wd = LinearCode::from_ideal(&ring, &i).weight_distribution(DEFAULT_DISTANCE_BUDGET)?;
                    Ok((i, wd))
                })
                .collect::<Result<Vec<_>>>()?;
            rings.push((ring, ideals));
        }
        let out = Arc::new(Targets { rings, complete });
        self.targets.lock().expect("cache lock").insert(key, out.clone());
        Ok(out)
    }

    /// A proof that the code of `ideal` is not monomially equivalent to any
    /// abelian group code: no ideal of any commutative group algebra of the
    /// same order and dimension has its weight distribution. `None` when a
    /// candidate matches or the candidate list is not exhaustive.
    pub fn obstruction(&self, ring: &Ring, ideal: &IdealHandle) -> Result<Option<Obstruction>> {
        let code = LinearCode::from_ideal(ring, ideal);
        let wd = code.weight_distribution(DEFAULT_DISTANCE_BUDGET)?;
        let targets = self.targets(ring.field(), ring.n())?;
        if !targets.complete {
            return Ok(None);
        }
        let same_dim: Vec<&Vec<u64>> = targets
            .rings
            .iter()
            .flat_map(|(_, ideals)| ideals.iter())
            .filter(|(i, _)| i.dim_p() == ideal.dim_p())
            .map(|(_, w)| w)
            .collect();
        if same_dim.iter().any(|w| **w == wd) {
            return Ok(None);
        }
        let min_weight = |w: &Vec<u64>| w.iter().skip(1).position(|&c| c > 0).map(|i| i + 1);
        Ok(Some(Obstruction {
            distance: min_weight(&wd).unwrap_or(0),
            best_abelian_distance: same_dim.iter().filter_map(|w| min_weight(w)).max(),
            abelian_groups: targets.rings.iter().map(|(r, _)| r.group().label().to_string()).collect(),
            abelian_codes_compared: same_dim.len(),
            weight_distribution: wd,
        }))
    }

    fn search_abelian(&self, state: &State) -> Result<Option<(State, ReductionStep)>> {
        let src = LinearCode::from_ideal(&state.ring, &state.ideal);
        let wd = src.weight_distribution(DEFAULT_DISTANCE_BUDGET)?;
        let targets = self.targets(state.ring.field(), state.ring.n())?;
        for mode in [EquivalenceMode::Permutation, EquivalenceMode::Monomial] {
            for (ring, ideals) in targets.rings.iter() {
                for (ideal, twd) in ideals {
                    if ideal.dim_p() != state.ideal.dim_p() || *twd != wd {
                        continue;
                    }
                    let dst = LinearCode::from_ideal(ring, ideal);
                    if let Some(w) = equivalence_search(&src, &dst, mode, self.options.equivalence_budget)? {
                        let note = format!("{mode:?} equivalence found by search");
                        let st = step(Route::Search, w, ring, &note);
                        return Ok(Some((State { ring: ring.clone(), ideal: ideal.clone() }, st)));
                    }
                }
            }
        }
        Ok(None)
    }
}

fn step(route: Route, witness: MonomialWitness, target: &Ring, note: &str) -> ReductionStep {
    ReductionStep {
        route,
        witness,
        target_group: target.group().spec(),
        target_label: target.system().label().to_string(),
        note: note.to_string(),
    }
}

fn map_ideal(src: &Ring, dst: &Ring, basis: &Subspace, w: &MonomialWitness, kind: IdealKind) -> IdealHandle {
    let images: Vec<RingElem> = basis.rows().iter().map(|r| w.apply(src.field(), &src.contract(r))).collect();
    dst.span(&images, kind)
}

/// `K^β[G]` with `β(a, b) = α(b⁻¹, a⁻¹)`, anti-isomorphic to `K^αG` via
/// `ḡ ↦ (g⁻¹)‾`.
pub fn opposite(ring: &Ring) -> Result<(Ring, MonomialWitness)> {
    let sys = ring.system();
    if !sys.is_twisted_only() {
        return Err(Error::SkewActionUnsupported);
    }
    let g = ring.group();
    let n = ring.n();
    let rows: Vec<Vec<FieldElem>> = (0..n).map(|a| (0..n).map(|b| sys.alpha(g.inv(b), g.inv(a))).collect()).collect();
    let op = CrossedSystem::new(sys.field().clone(), g.clone(), SigmaAction::trivial(n), Cocycle::from_rows(&rows)?)?;
    let witness = MonomialWitness::permutation((0..n).map(|x| g.inv(x)).collect());
    Ok((Ring::new(op), witness))
}

/// Computes `β₃` for a K-basis `v₁, v₂` of `M` extended by `v₃` to the ideal.
pub fn beta3(ring: &Ring, ideal: &IdealHandle, sub: &IdealHandle) -> Result<Dichotomy> {
    let f = ring.field();
    let sys = ring.system();
    let m_basis = k_basis(ring, &sub.basis, &[]);
    let full = k_basis(ring, &ideal.basis, &m_basis);
    if m_basis.len() != 2 || full.len() != 3 {
        return Err(Error::Input("expected a 3-dimensional ideal with a 2-dimensional subideal".into()));
    }
    let v3 = &full[2];
    let mut beta = Vec::with_capacity(ring.n());
    for g in 0..ring.n() {
        let gv = ring.mul(&ring.term(FieldElem::ONE, g), v3);
        let coords = k_coordinates(f, &full, &gv)
            .ok_or_else(|| Error::ScalarExtractionFailed(format!("ḡ·v₃ left the ideal at g = {g}")))?;
        beta.push(coords[2]);
    }
    let grp = ring.group();
    let multiplicative = (0..ring.n()).all(|x| {
        (0..ring.n()).all(|y| f.mul(beta[x], beta[y]) == f.mul(sys.alpha(x, y), beta[grp.mul(x, y)]))
    });
    Ok(Dichotomy {
        all_nonzero: beta.iter().all(|b| !b.is_zero()),
        all_zero: beta.iter().all(|b| b.is_zero()),
        beta3: beta,
        multiplicative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::coboundary_from_lambda;

    fn plain(p: u32, m: u32, g: FiniteGroup) -> Ring {
        Ring::new(CrossedSystem::untwisted(FiniteField::new(p, m, None).unwrap(), g))
    }

    fn all_ones(r: &Ring) -> RingElem {
        r.indicator(&(0..r.n()).collect::<Vec<_>>())
    }

    #[test]
    fn witness_composition() {
        let f = FiniteField::prime(3).unwrap();
        let a = MonomialWitness { perm: vec![1, 2, 0], diag: vec![FieldElem(2), FieldElem(1), FieldElem(1)] };
        let b = MonomialWitness { perm: vec![2, 0, 1], diag: vec![FieldElem(1), FieldElem(2), FieldElem(2)] };
        let x = RingElem::from_coeffs(vec![FieldElem(1), FieldElem(2), FieldElem(0)]);
        assert_eq!(a.then(&f, &b).apply(&f, &x), b.apply(&f, &a.apply(&f, &x)));
    }

    #[test]
    fn scalar_action_examples() {
        let r = plain(2, 1, FiniteGroup::symmetric(3));
        let i = r.principal_ideal(&all_ones(&r), Side::Right);
        let a = detect_scalar_action(&r, &i, &r.group().whole()).unwrap();
        assert!(a.lambda.iter().all(|&l| l == FieldElem::ONE));
        assert!(detect_scalar_action(&r, &i, &Subgroup::trivial()).is_some());
        // The two-dimensional minimal left ideals: A3 moves them non-scalarly.
        let two = r
            .enumerate_principal_ideals(Side::Left, DEFAULT_IDEAL_BUDGET)
            .unwrap()
            .into_iter()
            .find(|i| i.dim_p() == 2 && r.is_ideal(&i.basis, IdealKind::Left) && detect_scalar_action(&r, i, &r.group().commutator_subgroup()).is_none());
        assert!(two.is_some());
    }

    #[test]
    fn untwisting_a_coboundary() {
        let f3 = FiniteField::prime(3).unwrap();
        let c3 = FiniteGroup::cyclic(3);
        let mu = [FieldElem(1), FieldElem(2), FieldElem(2)];
        let alpha = coboundary_from_lambda(&f3, &c3, &SigmaAction::trivial(3), &mu).unwrap();
        let r = Ring::new(CrossedSystem::new(f3.clone(), c3, SigmaAction::trivial(3), alpha).unwrap());
        let v = RingElem::from_coeffs(mu.iter().map(|&m| f3.div_unit(FieldElem::ONE, m)).collect());
        let i = r.principal_ideal(&v, Side::Left);
        assert_eq!(i.dim_k, Some(1));
        let u = dim1_untwist(&r, &i).unwrap();
        let delta = coboundary_from_lambda(&f3, r.group(), &SigmaAction::trivial(3), &u.lambda).unwrap();
        assert_eq!(&delta, r.system().cocycle());
    }

    #[test]
    fn transport_of_the_all_ones_ideal_of_s3() {
        let r = plain(2, 1, FiniteGroup::symmetric(3));
        let i = r.principal_ideal(&all_ones(&r), Side::Right);
        let i = r.handle(i.basis, IdealKind::Left);
        let a3 = r.group().commutator_subgroup();
        let action = detect_scalar_action(&r, &i, &a3).unwrap();
        let plan = TransportPlan::product_with_quotient(r.group(), &a3, TauChoice::Identity).unwrap();
        let t = scalar_transport(&r, &i, &action, &plan).unwrap();
        assert!(t.image_is_ideal && t.target.group().is_abelian());
        assert_eq!(t.image.basis.rows(), &[vec![1; 6]]);
        let src = LinearCode::from_ideal(&r, &i);
        let dst = LinearCode::from_ideal(&t.target, &t.image);
        assert_eq!(
            src.weight_distribution(1000).unwrap(),
            dst.weight_distribution(1000).unwrap()
        );
    }

    #[test]
    fn trivial_transport_is_the_identity() {
        let r = plain(2, 1, FiniteGroup::cyclic(4));
        let i = r.principal_ideal(&r.elem(&[1, 1, 0, 0]).unwrap(), Side::Left);
        let e = Subgroup::trivial();
        let action = detect_scalar_action(&r, &i, &e).unwrap();
        let plan = TransportPlan::product_with_quotient(r.group(), &e, TauChoice::Identity).unwrap();
        let t = scalar_transport(&r, &i, &action, &plan).unwrap();
        assert_eq!(t.witness, MonomialWitness::identity(4));
        assert!(t.image_is_ideal);
    }

    #[test]
    fn equivalence_examples() {
        let s3 = plain(2, 1, FiniteGroup::symmetric(3));
        let c6 = plain(2, 1, FiniteGroup::cyclic(6));
        let a = LinearCode::from_ideal(&s3, &s3.principal_ideal(&all_ones(&s3), Side::Right));
        let b = LinearCode::from_ideal(&c6, &c6.principal_ideal(&all_ones(&c6), Side::Right));
        let w = equivalence_search(&a, &b, EquivalenceMode::Permutation, DEFAULT_EQUIVALENCE_BUDGET).unwrap();
        assert!(w.is_some());
        let same = equivalence_search(&a, &a, EquivalenceMode::Permutation, DEFAULT_EQUIVALENCE_BUDGET).unwrap();
        assert!(same.is_some());
        let whole = LinearCode::from_ideal(&c6, &c6.whole(IdealKind::Right));
        assert_eq!(equivalence_search(&a, &whole, EquivalenceMode::Monomial, 10).unwrap(), None);
    }

    #[test]
    fn reduction_of_the_all_ones_ideal() {
        let r = plain(2, 1, FiniteGroup::symmetric(3));
        let i = r.principal_ideal(&all_ones(&r), Side::Right);
        let red = abelian_reduce(&r, &i).unwrap();
        assert!(red.verified);
        assert_eq!(red.steps.len(), 1);
        assert_eq!(red.steps[0].route, Route::Transport);
    }

    #[test]
    fn abelian_input_needs_no_steps() {
        let r = plain(3, 1, FiniteGroup::cyclic(3));
        let i = r.principal_ideal(&all_ones(&r), Side::Right);
        let red = abelian_reduce(&r, &i).unwrap();
        assert!(red.steps.is_empty() && red.verified);
    }

    #[test]
    fn every_small_ideal_of_s3_reduces() {
        for r in [plain(2, 1, FiniteGroup::symmetric(3)), plain(3, 1, FiniteGroup::symmetric(3))] {
            let reducer = Reducer::default();
            for side in [Side::Left, Side::Right] {
                for i in r.enumerate_principal_ideals(side, DEFAULT_IDEAL_BUDGET).unwrap() {
                    if i.is_zero() || i.dim_k.unwrap() > 3 {
                        continue;
                    }
                    let red = reducer.reduce(&r, &i).unwrap();
                    assert!(red.verified, "{:?}", red.steps);
                }
            }
        }
    }

    #[test]
    fn quaternion_twist_has_no_abelian_equivalent() {
        let r = Ring::new(crate::catalog::f3_klein4_quaternion());
        let reducer = Reducer::default();
        let minimal: Vec<_> = r
            .enumerate_principal_ideals(Side::Left, DEFAULT_IDEAL_BUDGET)
            .unwrap()
            .into_iter()
            .filter(|i| i.dim_k == Some(2))
            .collect();
        assert_eq!(minimal.len(), 4);
        for i in &minimal {
            assert!(matches!(reducer.reduce(&r, i), Err(Error::ReductionStalled(_))));
            let o = reducer.obstruction(&r, i).unwrap().unwrap();
            assert_eq!((o.distance, o.best_abelian_distance), (3, Some(2)));
            assert_eq!(o.weight_distribution, vec![1, 0, 0, 8, 0]);
        }
    }
}
