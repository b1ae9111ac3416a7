//! The ring `R = K^α[G; σ]` with product
//! `(a x̄)(b ȳ) = a·σ(x)(b)·α(x, y)·(xy)‾`, and its one-sided ideals.
//!
//! Ideals are F_p-subspaces of the prime-field expansion of `R`: the
//! coordinate `g*m + i` holds digit `i` of the coefficient of `ḡ`. Left
//! multiplication by scalars of `K` is coefficient-wise, so left ideals are
//! always K-subspaces; right ideals are when σ is trivial.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crossed::CrossedSystem;
use crate::error::{Error, Result};
use crate::gf::{FieldElem, FiniteField};
use crate::groups::FiniteGroup;
use crate::linalg::{left_kernel, Fp, Subspace};

pub const DEFAULT_IDEAL_BUDGET: u128 = 1_000_000;
/// Sum closure is attempted only up to this prime-field dimension of `R`.
pub const FULL_ENUMERATION_DIM_LIMIT: usize = 8;

/// Which side a ring element multiplies from.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// What kind of closure an [`IdealHandle`] is known to have.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
    Subspace,
}

impl From<Side> for IdealKind {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => IdealKind::Left,
            Side::Right => IdealKind::Right,
        }
    }
}

/// An element `Σ a_g ḡ`, stored as the coefficient list indexed by `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElem {
    coeffs: Vec<FieldElem>,
}

impl RingElem {
    pub fn from_coeffs(coeffs: Vec<FieldElem>) -> Self {
        RingElem { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> FieldElem {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&g| !self.coeffs[g].is_zero()).collect()
    }

    /// Hamming weight: the size of the support.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0).collect()
    }
}

/// A one-sided ideal (or plain subspace) of `R`, kept as a canonical
/// F_p-basis of prime-field expansions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealHandle {
    pub kind: IdealKind,
    pub basis: Subspace,
    /// Closed under left multiplication by scalars of `K`.
    pub k_linear: bool,
    /// Dimension over `K` when `k_linear`.
    pub dim_k: Option<usize>,
}

impl IdealHandle {
    pub fn dim_p(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_zero()
    }
}

/// Serializable view of an ideal: basis rows as coefficient codes per group
/// position.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealRecord {
    pub side: IdealKind,
    pub dim_p: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_k: Option<usize>,
    pub k_linear: bool,
    pub basis: Vec<RingElem>,
}

/// `K^α[G; σ]` for a validated crossed system.
#[derive(Clone, Debug)]
pub struct Ring {
    sys: Arc<CrossedSystem>,
    fp: Fp,
    n: usize,
    m: usize,
}

impl Ring {
    pub fn new(sys: CrossedSystem) -> Self {
        Self::from_arc(Arc::new(sys))
    }

    pub fn from_arc(sys: Arc<CrossedSystem>) -> Self {
        let fp = Fp::new(sys.field().characteristic());
        let n = sys.n();
        let m = sys.field().degree() as usize;
        Ring { sys, fp, n, m }
    }

    pub fn system(&self) -> &CrossedSystem {
        &self.sys
    }

    pub fn system_arc(&self) -> &Arc<CrossedSystem> {
        &self.sys
    }

    pub fn field(&self) -> &FiniteField {
        self.sys.field()
    }

    pub fn group(&self) -> &FiniteGroup {
        self.sys.group()
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    /// `|G|`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree of `K` over F_p.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Dimension of `R` over F_p.
    pub fn dim_p(&self) -> usize {
        self.n * self.m
    }

    // ---- elements -------------------------------------------------------

    pub fn zero(&self) -> RingElem {
        RingElem { coeffs: vec![FieldElem::ZERO; self.n] }
    }

    pub fn one(&self) -> RingElem {
        self.term(FieldElem::ONE, 0)
    }

    /// `a·ḡ`.
    pub fn term(&self, a: FieldElem, g: usize) -> RingElem {
        let mut x = self.zero();
        x.coeffs[g] = a;
        x
    }

    /// Parses a list of `|G|` coefficient codes.
    pub fn elem(&self, codes: &[u32]) -> Result<RingElem> {
        if codes.len() != self.n {
            return Err(Error::SystemMismatch);
        }
        let coeffs = codes.iter().map(|&c| self.field().elem(c)).collect::<Result<_>>()?;
        Ok(RingElem { coeffs })
    }

    /// `Σ_{g ∈ S} ḡ`.
    pub fn indicator(&self, set: &[usize]) -> RingElem {
        let mut x = self.zero();
        for &g in set {
            x.coeffs[g] = FieldElem::ONE;
        }
        x
    }

    /// The `j`-th F_p-basis element `x^i ḡ` with `j = g*m + i`.
    pub fn prime_basis(&self, j: usize) -> RingElem {
        let code = self.fp.p().pow((j % self.m) as u32);
        self.term(FieldElem(code), j / self.m)
    }

    pub fn add(&self, x: &RingElem, y: &RingElem) -> RingElem {
        let f = self.field();
        RingElem { coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(&a, &b)| f.add(a, b)).collect() }
    }

    pub fn sub(&self, x: &RingElem, y: &RingElem) -> RingElem {
        let f = self.field();
        RingElem { coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(&a, &b)| f.sub(a, b)).collect() }
    }

    /// `a·x`, i.e. `(a ē)·x`, which scales every coefficient.
    pub fn scale(&self, a: FieldElem, x: &RingElem) -> RingElem {
        let f = self.field();
        RingElem { coeffs: x.coeffs.iter().map(|&c| f.mul(a, c)).collect() }
    }

    /// `x·y`.
    pub fn mul(&self, x: &RingElem, y: &RingElem) -> RingElem {
        let f = self.field();
        let g = self.group();
        let mut out = vec![FieldElem::ZERO; self.n];
        for (a_idx, &a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b_idx, &b) in y.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = f.mul(f.mul(a, self.sys.act(a_idx, b)), self.sys.alpha(a_idx, b_idx));
                let k = g.mul(a_idx, b_idx);
                out[k] = f.add(out[k], t);
            }
        }
        RingElem { coeffs: out }
    }

    /// As [`mul`](Self::mul), rejecting elements of the wrong length.
    pub fn checked_mul(&self, x: &RingElem, y: &RingElem) -> Result<RingElem> {
        if x.coeffs.len() != self.n || y.coeffs.len() != self.n {
            return Err(Error::SystemMismatch);
        }
        Ok(self.mul(x, y))
    }

    pub fn expand(&self, x: &RingElem) -> Vec<u32> {
        let f = self.field();
        let mut out = Vec::with_capacity(self.dim_p());
        for &c in &x.coeffs {
            out.extend(f.digits(c));
        }
        out
    }

    pub fn contract(&self, v: &[u32]) -> RingElem {
        let f = self.field();
        RingElem { coeffs: v.chunks(self.m).map(|d| f.from_digits(d)).collect() }
    }

    /// Matrix over F_p of `v ↦ f·v` (`Side::Left`) or `v ↦ v·f`
    /// (`Side::Right`); row `j` is the image of the `j`-th prime basis
    /// element.
    pub fn mul_matrix(&self, f: &RingElem, side: Side) -> Vec<Vec<u32>> {
        (0..self.dim_p())
            .map(|j| {
                let e = self.prime_basis(j);
                let img = match side {
                    Side::Left => self.mul(f, &e),
                    Side::Right => self.mul(&e, f),
                };
                self.expand(&img)
            })
            .collect()
    }

    // ---- ideals ---------------------------------------------------------

    /// Wraps a subspace, computing its K-linearity.
    pub fn handle(&self, basis: Subspace, kind: IdealKind) -> IdealHandle {
        let k_linear = self.is_k_linear(&basis);
        let dim_k = k_linear.then(|| basis.dim() / self.m);
        IdealHandle { kind, basis, k_linear, dim_k }
    }

    pub fn span(&self, elems: &[RingElem], kind: IdealKind) -> IdealHandle {
        let rows = elems.iter().map(|x| self.expand(x)).collect();
        self.handle(Subspace::from_rows(self.fp, self.dim_p(), rows), kind)
    }

    pub fn zero_ideal(&self, kind: IdealKind) -> IdealHandle {
        self.handle(Subspace::zero(self.dim_p()), kind)
    }

    pub fn whole(&self, kind: IdealKind) -> IdealHandle {
        self.handle(Subspace::full(self.dim_p()), kind)
    }

    /// Closed under left multiplication by a generator of `K` over F_p,
    /// hence by all of `K`.
    pub fn is_k_linear(&self, basis: &Subspace) -> bool {
        if self.m == 1 {
            return true;
        }
        let w = self.field().generator();
        basis.rows().iter().all(|r| {
            let x = self.scale(w, &self.contract(r));
            basis.contains(self.fp, &self.expand(&x))
        })
    }

    /// `v·R` (`Side::Right`) or `R·v` (`Side::Left`).
    pub fn principal_ideal(&self, v: &RingElem, side: Side) -> IdealHandle {
        let rows = self.mul_matrix(v, side.opposite());
        self.handle(Subspace::from_rows(self.fp, self.dim_p(), rows), side.into())
    }

    /// `Ann_r(v) = {a : v·a = 0}` or `Ann_ℓ(v) = {a : a·v = 0}`.
    pub fn annihilator(&self, v: &RingElem, side: Side) -> IdealHandle {
        let rows = self.mul_matrix(v, side.opposite());
        self.handle(left_kernel(self.fp, &rows, self.dim_p()), side.into())
    }

    /// The annihilator of a whole subspace, on the given side.
    pub fn annihilator_of(&self, ideal: &IdealHandle, side: Side) -> IdealHandle {
        let dim = self.dim_p();
        if ideal.is_zero() {
            return self.whole(side.into());
        }
        // Concatenate the multiplication matrices of all basis rows.
        let mats: Vec<Vec<Vec<u32>>> = ideal
            .basis
            .rows()
            .iter()
            .map(|r| self.mul_matrix(&self.contract(r), side.opposite()))
            .collect();
        let rows: Vec<Vec<u32>> = (0..dim).map(|j| mats.iter().flat_map(|m| m[j].iter().copied()).collect()).collect();
        self.handle(left_kernel(self.fp, &rows, dim * mats.len()), side.into())
    }

    /// Whether `basis` is closed under multiplication by `R` on the sides
    /// `kind` requires.
    pub fn is_ideal(&self, basis: &Subspace, kind: IdealKind) -> bool {
        let check = |side: Side| {
            basis.rows().iter().all(|r| {
                let x = self.contract(r);
                (0..self.dim_p()).all(|j| {
                    let e = self.prime_basis(j);
                    let y = match side {
                        Side::Right => self.mul(&x, &e),
                        Side::Left => self.mul(&e, &x),
                    };
                    basis.contains(self.fp, &self.expand(&y))
                })
            })
        };
        match kind {
            IdealKind::Subspace => true,
            IdealKind::Left => check(Side::Left),
            IdealKind::Right => check(Side::Right),
            IdealKind::TwoSided => check(Side::Left) && check(Side::Right),
        }
    }

    /// The elements of a subspace as ring elements, in Gray order.
    pub fn elements_of(&self, basis: &Subspace) -> Vec<RingElem> {
        let mut out = Vec::new();
        basis.for_each_vector(self.fp, |v| {
            out.push(self.contract(v));
            true
        });
        out
    }

    /// Every distinct principal ideal on one side, deduplicated by
    /// canonical basis and sorted by dimension.
    pub fn enumerate_principal_ideals(&self, side: Side, budget: u128) -> Result<Vec<IdealHandle>> {
        Ok(self.principal_ideals_with_generators(side, budget)?.into_iter().map(|(i, _)| i).collect())
    }

    /// As [`enumerate_principal_ideals`](Self::enumerate_principal_ideals),
    /// pairing each ideal with its generator of smallest code. Generators
    /// are taken up to F_p-scalars (first nonzero prime coordinate equal to
    /// 1), which does not change the ideal.
    pub fn principal_ideals_with_generators(&self, side: Side, budget: u128) -> Result<Vec<(IdealHandle, RingElem)>> {
        let dim = self.dim_p();
        let p = self.fp.p() as u64;
        let total = (p as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
        if total > budget {
            return Err(Error::budget("principal ideal generators", total, budget));
        }
        let decode = |code: u64| -> Vec<u32> {
            let mut v = vec![0u32; dim];
            let mut rest = code;
            for x in v.iter_mut() {
                *x = (rest % p) as u32;
                rest /= p;
            }
            v
        };
        let found: BTreeMap<Subspace, u64> = (0..total as u64)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc, code| {
                let v = decode(code);
                if v.iter().find(|&&x| x != 0).is_some_and(|&x| x != 1) {
                    return acc;
                }
                let rows = self.mul_matrix(&self.contract(&v), side.opposite());
                acc.entry(Subspace::from_rows(self.fp, dim, rows)).or_insert(code);
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    let slot = a.entry(k).or_insert(v);
                    *slot = (*slot).min(v);
                }
                a
            });
        let mut out: Vec<(IdealHandle, RingElem)> = found
            .into_iter()
            .map(|(b, code)| (self.handle(b, side.into()), self.contract(&decode(code))))
            .collect();
        out.sort_by(|a, b| (a.0.dim_p(), &a.0.basis).cmp(&(b.0.dim_p(), &b.0.basis)));
        Ok(out)
    }

    /// Every one-sided ideal, as the closure of the principal ideals under
    /// pairwise sums. Refused above [`FULL_ENUMERATION_DIM_LIMIT`] unless
    /// `budget` (an ideal-count cap) is raised accordingly.
    pub fn enumerate_all_ideals(&self, side: Side, budget: u128) -> Result<Vec<IdealHandle>> {
        if self.dim_p() > FULL_ENUMERATION_DIM_LIMIT {
            return Err(Error::budget(
                "full ideal enumeration (prime-field dimension)",
                self.dim_p() as u128,
                FULL_ENUMERATION_DIM_LIMIT as u128,
            ));
        }
        let principal = self.enumerate_principal_ideals(side, budget)?;
        let gens: Vec<Subspace> = principal.iter().map(|h| h.basis.clone()).collect();
        let mut all: BTreeSet<Subspace> = gens.iter().cloned().collect();
        let mut frontier: Vec<Subspace> = gens.clone();
        while let Some(cur) = frontier.pop() {
            for g in &gens {
                if g.is_subspace_of(self.fp, &cur) {
                    continue;
                }
                let s = cur.sum(self.fp, g);
                if all.insert(s.clone()) {
                    if all.len() as u128 > budget {
                        return Err(Error::budget("ideal lattice size", all.len() as u128, budget));
                    }
                    frontier.push(s);
                }
            }
        }
        let mut out: Vec<IdealHandle> = all.into_iter().map(|b| self.handle(b, side.into())).collect();
        out.sort_by(|a, b| (a.dim_p(), &a.basis).cmp(&(b.dim_p(), &b.basis)));
        Ok(out)
    }

    /// For a left ideal `L`: whether `Ann_ℓ(Ann_r(L)) = L`.
    pub fn double_annihilator_check(&self, left: &IdealHandle) -> bool {
        let i = self.annihilator_of(left, Side::Right);
        self.annihilator_of(&i, Side::Left).basis == left.basis
    }

    pub fn record(&self, ideal: &IdealHandle) -> IdealRecord {
        IdealRecord {
            side: ideal.kind,
            dim_p: ideal.dim_p(),
            dim_k: ideal.dim_k,
            k_linear: ideal.k_linear,
            basis: ideal.basis.rows().iter().map(|r| self.contract(r)).collect(),
        }
    }

    /// Rebuilds an ideal from its record, re-deriving the canonical basis.
    pub fn from_record(&self, rec: &IdealRecord) -> Result<IdealHandle> {
        let elems: Vec<RingElem> = rec.basis.iter().map(|x| self.elem(&x.codes())).collect::<Result<_>>()?;
        Ok(self.span(&elems, rec.side))
    }
}
