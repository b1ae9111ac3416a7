//! Linear codes of length `|G|` over `K` carried by ideals of `K^α[G; σ]`:
//! minimum distance, the support/rank bound `|supp f|·rank_K(T_f) ≥ |G|`,
//! its corollary `d·dim_K ≥ |G|`, and the codes attaining equality.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Subgroup};
use crate::linalg::{for_each_in_coset, rank, Fp, Subspace};
use crate::ring::{IdealHandle, IdealKind, Ring, RingElem, Side, DEFAULT_IDEAL_BUDGET};

pub const DEFAULT_DISTANCE_BUDGET: u128 = 10_000_000;
/// Codes with at least this many prime-field dimensions are scanned in
/// parallel.
const PARALLEL_DIM: usize = 10;

/// `[n, k, d]` with the prime-field dimension alongside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CodeParams {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub k_p: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let k = self.k.map_or_else(|| format!("{}/p", self.k_p), |k| k.to_string());
        let d = self.d.map_or_else(|| "?".to_string(), |d| d.to_string());
        write!(f, "[{}, {}, {}]", self.n, k, d)
    }
}

/// The code of an ideal: its elements read as words indexed by `G`.
#[derive(Clone, Debug)]
pub struct LinearCode {
    ring: Ring,
    kind: IdealKind,
    basis: Subspace,
    k_linear: bool,
    dim_k: Option<usize>,
    d: Option<usize>,
}

impl LinearCode {
    pub fn from_ideal(ring: &Ring, ideal: &IdealHandle) -> Self {
        LinearCode {
            ring: ring.clone(),
            kind: ideal.kind,
            basis: ideal.basis.clone(),
            k_linear: ideal.k_linear,
            dim_k: ideal.dim_k,
            d: None,
        }
    }

    /// The code of an ideal with its minimum distance filled in (left
    /// unset for the zero code).
    pub fn with_distance(ring: &Ring, ideal: &IdealHandle, budget: u128) -> Result<Self> {
        let mut code = Self::from_ideal(ring, ideal);
        if !code.is_zero() {
            code.d = Some(code.min_distance(budget)?);
        }
        Ok(code)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub fn ideal(&self) -> IdealHandle {
        IdealHandle { kind: self.kind, basis: self.basis.clone(), k_linear: self.k_linear, dim_k: self.dim_k }
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_zero()
    }

    pub fn is_k_linear(&self) -> bool {
        self.k_linear
    }

    pub fn length(&self) -> usize {
        self.ring.n()
    }

    pub fn params(&self) -> CodeParams {
        CodeParams { n: self.ring.n(), k: self.dim_k, k_p: self.basis.dim(), d: self.d }
    }

    /// Words of the code as length-|G| vectors over K.
    pub fn basis_words(&self) -> Vec<RingElem> {
        self.basis.rows().iter().map(|r| self.ring.contract(r)).collect()
    }

    fn check_budget(&self, budget: u128) -> Result<()> {
        let size = self.basis.size(self.ring.fp());
        if size > budget {
            return Err(Error::budget("codewords", size, budget));
        }
        Ok(())
    }

    /// Exact minimum Hamming weight over the nonzero codewords.
    pub fn min_distance(&self, budget: u128) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        if let Some(d) = self.d {
            return Ok(d);
        }
        self.check_budget(budget)?;
        let m = self.ring.m();
        let best = AtomicUsize::new(usize::MAX);
        self.scan(|v| {
            let w = weight(v, m);
            if w > 0 {
                best.fetch_min(w, Ordering::Relaxed);
            }
            best.load(Ordering::Relaxed) > 1
        });
        Ok(best.into_inner())
    }

    /// The first codeword of minimum weight in Gray order.
    pub fn min_weight_word(&self, budget: u128) -> Result<RingElem> {
        let d = self.min_distance(budget)?;
        let m = self.ring.m();
        let mut found = None;
        self.basis.for_each_vector(self.ring.fp(), |v| {
            if weight(v, m) == d {
                found = Some(v.to_vec());
                return false;
            }
            true
        });
        Ok(self.ring.contract(&found.expect("a word of minimum weight exists")))
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self, budget: u128) -> Result<Vec<u64>> {
        self.check_budget(budget)?;
        let n = self.ring.n();
        let m = self.ring.m();
        let fp = self.ring.fp();
        let rows = self.basis.rows();
        let split = split_point(rows.len(), fp);
        let (prefix, rest) = rows.split_at(split);
        let starts = coset_starts(fp, prefix, self.basis.ncols());
        let dist = starts
            .par_iter()
            .map(|start| {
                let mut local = vec![0u64; n + 1];
                for_each_in_coset(fp, start, rest, |v| {
                    local[weight(v, m)] += 1;
                    true
                });
                local
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        Ok(dist)
    }

    /// Runs `f` on every codeword (as a prime-field expansion), in parallel
    /// for large codes. `f` returning false stops its own chunk.
    fn scan(&self, f: impl Fn(&[u32]) -> bool + Sync) {
        let fp = self.ring.fp();
        let rows = self.basis.rows();
        if rows.len() < PARALLEL_DIM {
            for_each_in_coset(fp, &vec![0; self.basis.ncols()], rows, f);
            return;
        }
        let split = split_point(rows.len(), fp);
        let (prefix, rest) = rows.split_at(split);
        coset_starts(fp, prefix, self.basis.ncols()).par_iter().for_each(|start| for_each_in_coset(fp, start, rest, &f));
    }
}

fn weight(v: &[u32], m: usize) -> usize {
    v.chunks(m).filter(|c| c.iter().any(|&x| x != 0)).count()
}

fn split_point(dim: usize, fp: Fp) -> usize {
    let mut t = 0;
    let mut chunks = 1u32;
    while t < dim && chunks < 64 {
        t += 1;
        chunks *= fp.p();
    }
    t.min(dim.saturating_sub(4))
}

fn coset_starts(fp: Fp, prefix: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut starts = Vec::new();
    for_each_in_coset(fp, &vec![0; ncols], prefix, |v| {
        starts.push(v.to_vec());
        true
    });
    starts
}

/// Greedy right `S`-rank: scanning `G` in index order, keep `g` whenever
/// `S·g` is not covered by the translates kept so far.
pub fn s_rank(group: &FiniteGroup, set: &[usize]) -> (usize, Vec<usize>) {
    let mut covered = vec![false; group.order()];
    let mut seq = Vec::new();
    for g in 0..group.order() {
        if set.iter().any(|&s| !covered[group.mul(s, g)]) {
            for &s in set {
                covered[group.mul(s, g)] = true;
            }
            seq.push(g);
        }
    }
    (seq.len(), seq)
}

/// `|supp f|·rank_K(T_f)` against `|G|`, for `T_f: v ↦ f·v`.
#[derive(Clone, Debug, Serialize)]
pub struct ElementBound {
    pub support: usize,
    pub rank_p: usize,
    /// `rank_p / m` when the image `fR` is a K-subspace.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    /// Greedy S-rank of the support, a lower bound for `rank_k`.
    pub s_rank: usize,
}

pub fn element_bound(ring: &Ring, f: &RingElem) -> ElementBound {
    let rows = ring.mul_matrix(f, Side::Left);
    let rank_p = rank(ring.fp(), &rows);
    let image = ring.principal_ideal(f, Side::Right);
    let rank_k = image.k_linear.then(|| rank_p / ring.m());
    let support = f.weight();
    let product = rank_k.map(|r| r * support);
    let (s_rank, _) = if f.is_zero() { (0, vec![]) } else { s_rank(ring.group(), &f.support()) };
    ElementBound { support, rank_p, rank_k, product, holds: product.map(|p| p >= ring.n()), s_rank }
}

/// `d·dim_K` against `|G|`, with `(d+k)² ≥ 4|G|` and the Singleton-type
/// ceiling `d + k ≤ |G| + 1`.
#[derive(Clone, Debug, Serialize)]
pub struct CodeBound {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub product: usize,
    pub holds: bool,
    pub extremal: bool,
    pub amgm_lower: bool,
    pub sum_upper: bool,
}

impl CodeBound {
    pub fn amgm_holds(&self) -> bool {
        self.amgm_lower && self.sum_upper
    }
}

pub fn code_bound(code: &LinearCode, budget: u128) -> Result<CodeBound> {
    if !code.is_k_linear() {
        return Err(Error::NotKLinear);
    }
    let d = code.min_distance(budget)?;
    let k = code.dim_k.expect("K-linear codes have a K-dimension");
    let n = code.length();
    Ok(CodeBound {
        n,
        d,
        k,
        product: d * k,
        holds: d * k >= n,
        extremal: d * k == n,
        amgm_lower: (d + k) * (d + k) >= 4 * n,
        sum_upper: d + k <= n + 1,
    })
}

/// A codeword `c` with `e ∈ supp(c) = H ≤ G`, `|H| = d` and `c·K^αH`
/// one-dimensional, generating the code.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalWitness {
    pub c: RingElem,
    #[serde(rename = "H")]
    pub h: Subgroup,
}

/// Decomposes a code with `d·dim_K = |G|` as `c·K^αG`.
pub fn extremal_decompose(code: &LinearCode, budget: u128) -> Result<ExtremalWitness> {
    let side = match code.kind {
        IdealKind::Right => Side::Right,
        IdealKind::Left => Side::Left,
        other => return Err(Error::Input(format!("extremal decomposition needs a one-sided ideal, got {other:?}"))),
    };
    let bound = code_bound(code, budget)?;
    if !bound.extremal {
        return Err(Error::Input(format!("code has d·k = {} ≠ |G| = {}", bound.product, bound.n)));
    }
    let ring = &code.ring;
    let grp = ring.group();
    let word = code.min_weight_word(budget)?;
    // Translate so the identity lies in the support.
    let h0 = word.support()[0];
    let shift = ring.term(crate::gf::FieldElem::ONE, grp.inv(h0));
    let c = match side {
        Side::Right => ring.mul(&word, &shift),
        Side::Left => ring.mul(&shift, &word),
    };
    let support = c.support();
    let fail = |why: String| Error::DecompositionFailed(why);
    let h = grp.subgroup(&support).ok_or_else(|| fail(format!("support {support:?} is not a subgroup")))?;
    if h.order() != bound.d {
        return Err(fail(format!("|H| = {} but d = {}", h.order(), bound.d)));
    }
    let local = local_span(ring, &c, &h, side);
    if local.dim() != ring.m() {
        return Err(fail(format!("c·K^αH has prime-field dimension {}", local.dim())));
    }
    if ring.principal_ideal(&c, side).basis != code.basis {
        return Err(fail("c does not generate the code".into()));
    }
    Ok(ExtremalWitness { c, h })
}

/// `c·K^αH` (or `K^αH·c`) as an F_p-subspace.
fn local_span(ring: &Ring, c: &RingElem, h: &Subgroup, side: Side) -> Subspace {
    let m = ring.m();
    let rows = h
        .members()
        .iter()
        .flat_map(|&g| (0..m).map(move |i| g * m + i))
        .map(|j| {
            let e = ring.prime_basis(j);
            let img = match side {
                Side::Right => ring.mul(c, &e),
                Side::Left => ring.mul(&e, c),
            };
            ring.expand(&img)
        })
        .collect();
    Subspace::from_rows(ring.fp(), ring.dim_p(), rows)
}

/// Builds `C = c·K^αG` from `c` with `c·K^αH` one-dimensional and checks it
/// is a `[|G|, [G:H], |H|]` code.
pub fn extremal_construct(ring: &Ring, h: &Subgroup, c: &RingElem, budget: u128) -> Result<LinearCode> {
    if !ring.system().is_twisted_only() {
        return Err(Error::SkewActionUnsupported);
    }
    if local_span(ring, c, h, Side::Right).dim() != ring.m() {
        return Err(Error::NotOneDimensional);
    }
    let ideal = ring.principal_ideal(c, Side::Right);
    let code = LinearCode::with_distance(ring, &ideal, budget)?;
    let p = code.params();
    let n = ring.n();
    if p.k != Some(n / h.order()) || p.d != Some(h.order()) {
        return Err(Error::DecompositionFailed(format!("construction from |H| = {} gave {p}", h.order())));
    }
    Ok(code)
}

fn rank_key(e: &CodeEntry) -> (bool, usize, usize, usize) {
    (e.k.is_some(), e.k.unwrap_or(0) + e.d, e.d, e.k_p)
}

/// Search filter for [`search_codes`].
#[derive(Clone, Debug, Default)]
pub struct SearchFilter {
    pub min_d: usize,
    /// `(n, k, d)` to report as found or not.
    pub target: Option<(usize, usize, usize)>,
    pub ideal_budget: Option<u128>,
    pub distance_budget: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeEntry {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub k_p: usize,
    pub d: usize,
    pub generator: RingElem,
    pub side: Side,
    pub extremal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ExtremalWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub system: String,
    pub ideals_seen: usize,
    pub entries: Vec<CodeEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_found: Option<bool>,
}

impl SearchReport {
    pub fn best(&self) -> Option<&CodeEntry> {
        self.entries.first()
    }
}

/// Enumerates the principal ideals on `side`, computes their parameters and
/// ranks them: K-linear codes first, then by `k + d`, then by `d`, all
/// descending.
pub fn search_codes(ring: &Ring, side: Side, filter: &SearchFilter) -> Result<SearchReport> {
    let ideal_budget = filter.ideal_budget.unwrap_or(DEFAULT_IDEAL_BUDGET);
    let distance_budget = filter.distance_budget.unwrap_or(DEFAULT_DISTANCE_BUDGET);
    let ideals = ring.principal_ideals_with_generators(side, ideal_budget)?;
    let seen = ideals.len();
    let mut entries = Vec::new();
    for (ideal, generator) in ideals {
        if ideal.is_zero() {
            continue;
        }
        let code = LinearCode::with_distance(ring, &ideal, distance_budget)?;
        let p = code.params();
        let d = p.d.expect("nonzero code");
        if d < filter.min_d {
            continue;
        }
        let extremal = p.k.is_some_and(|k| k * d == ring.n());
        let witness = if extremal { Some(extremal_decompose(&code, distance_budget)?) } else { None };
        entries.push(CodeEntry { n: p.n, k: p.k, k_p: p.k_p, d, generator, side, extremal, witness });
    }
    entries.sort_by_key(|e| std::cmp::Reverse(rank_key(e)));
    let target_found = filter
        .target
        .map(|(n, k, d)| entries.iter().any(|e| e.n == n && e.k == Some(k) && e.d == d));
    Ok(SearchReport { system: ring.system().label().to_string(), ideals_seen: seen, entries, target_found })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::{CrossedSystem, Cocycle, SigmaAction};
    use crate::gf::{FieldElem, FiniteField};

    fn plain(p: u32, g: FiniteGroup) -> Ring {
        Ring::new(CrossedSystem::untwisted(FiniteField::prime(p).unwrap(), g))
    }

    /// Minimum weight by listing every codeword as an integer and decoding.
    fn brute_distance(code: &LinearCode) -> usize {
        let ring = code.ring();
        let fp = ring.fp();
        let k = code.basis().dim();
        let p = fp.p() as u64;
        (1..p.pow(k as u32))
            .map(|mut c| {
                let coeffs: Vec<u32> = (0..k)
                    .map(|_| {
                        let d = (c % p) as u32;
                        c /= p;
                        d
                    })
                    .collect();
                ring.contract(&code.basis().combination(fp, &coeffs)).weight()
            })
            .min()
            .unwrap()
    }

    #[test]
    fn distances_of_small_codes() {
        let r = plain(2, FiniteGroup::cyclic(2));
        let i = r.principal_ideal(&r.elem(&[1, 1]).unwrap(), Side::Right);
        let c = LinearCode::with_distance(&r, &i, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(c.params(), CodeParams { n: 2, k: Some(1), k_p: 1, d: Some(2) });

        let s3 = plain(2, FiniteGroup::symmetric(3));
        let all = s3.indicator(&(0..6).collect::<Vec<_>>());
        let c = LinearCode::from_ideal(&s3, &s3.principal_ideal(&all, Side::Right));
        assert_eq!(c.min_distance(DEFAULT_DISTANCE_BUDGET).unwrap(), 6);
        let whole = LinearCode::from_ideal(&s3, &s3.whole(IdealKind::Right));
        assert_eq!(whole.min_distance(DEFAULT_DISTANCE_BUDGET).unwrap(), 1);
        let zero = LinearCode::from_ideal(&s3, &s3.zero_ideal(IdealKind::Right));
        assert!(matches!(zero.min_distance(DEFAULT_DISTANCE_BUDGET), Err(Error::ZeroCode)));
    }

    #[test]
    fn distance_matches_brute_force_on_every_principal_ideal() {
        for r in [plain(2, FiniteGroup::dihedral(4)), plain(3, FiniteGroup::cyclic(6))] {
            for i in r.enumerate_principal_ideals(Side::Right, DEFAULT_IDEAL_BUDGET).unwrap() {
                if i.is_zero() {
                    continue;
                }
                let code = LinearCode::from_ideal(&r, &i);
                assert_eq!(code.min_distance(DEFAULT_DISTANCE_BUDGET).unwrap(), brute_distance(&code));
                let dist = code.weight_distribution(DEFAULT_DISTANCE_BUDGET).unwrap();
                assert_eq!(dist.iter().sum::<u64>(), code.basis().size(r.fp()) as u64);
            }
        }
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        let r = plain(2, FiniteGroup::builtin("C2xC2xC2xC2").unwrap());
        let v = r.elem(&[1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        let code = LinearCode::from_ideal(&r, &r.principal_ideal(&v, Side::Right));
        assert!(code.basis().dim() >= PARALLEL_DIM);
        assert_eq!(code.min_distance(DEFAULT_DISTANCE_BUDGET).unwrap(), brute_distance(&code));
    }

    #[test]
    fn s_rank_examples() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s_rank(&s3, &(0..6).collect::<Vec<_>>()).0, 1);
        assert_eq!(s_rank(&s3, &[0]).0, 6);
        let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let (k, seq) = s_rank(&s3, &[0, t]);
        assert_eq!(k, 3);
        let mut covered: Vec<usize> = seq.iter().flat_map(|&g| [s3.mul(0, g), s3.mul(t, g)]).collect();
        covered.sort();
        covered.dedup();
        assert_eq!(covered.len(), 6);
    }

    #[test]
    fn bound_examples() {
        let s3 = plain(2, FiniteGroup::symmetric(3));
        let all = s3.indicator(&(0..6).collect::<Vec<_>>());
        let b = element_bound(&s3, &all);
        assert_eq!((b.support, b.rank_k, b.product, b.holds), (6, Some(1), Some(6), Some(true)));

        let r = plain(2, FiniteGroup::cyclic(2));
        let i = r.principal_ideal(&r.elem(&[1, 1]).unwrap(), Side::Right);
        let b = code_bound(&LinearCode::from_ideal(&r, &i), DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!((b.d, b.k, b.product, b.holds), (2, 1, 2, true));
        let whole = LinearCode::from_ideal(&s3, &s3.whole(IdealKind::Right));
        let b = code_bound(&whole, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!((b.d, b.k, b.product, b.extremal), (1, 6, 6, true));
    }

    #[test]
    fn skew_right_codes_are_refused() {
        let f4 = FiniteField::new(2, 2, None).unwrap();
        let sys = CrossedSystem::new(f4, FiniteGroup::cyclic(2), SigmaAction::new(vec![0, 1]), Cocycle::trivial(2)).unwrap();
        let r = Ring::new(sys);
        let bad = r
            .enumerate_all_ideals(Side::Right, DEFAULT_IDEAL_BUDGET)
            .unwrap()
            .into_iter()
            .find(|i| !i.k_linear)
            .unwrap();
        assert!(matches!(code_bound(&LinearCode::from_ideal(&r, &bad), 100), Err(Error::NotKLinear)));
    }

    #[test]
    fn extremal_examples() {
        let r = plain(2, FiniteGroup::cyclic(2));
        let i = r.principal_ideal(&r.elem(&[1, 1]).unwrap(), Side::Right);
        let w = extremal_decompose(&LinearCode::from_ideal(&r, &i), DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(w.c, r.elem(&[1, 1]).unwrap());
        assert_eq!(w.h.order(), 2);

        let s3 = plain(2, FiniteGroup::symmetric(3));
        let whole = LinearCode::from_ideal(&s3, &s3.whole(IdealKind::Right));
        let w = extremal_decompose(&whole, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!((w.c.clone(), w.h.order()), (s3.one(), 1));

        let c6 = plain(3, FiniteGroup::cyclic(6));
        let h = c6.group().generate(&[2]);
        let c = c6.indicator(h.members());
        let code = extremal_construct(&c6, &h, &c, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(code.params(), CodeParams { n: 6, k: Some(2), k_p: 2, d: Some(3) });
        let back = extremal_decompose(&code, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(back.h.order(), 3);

        let not_local = c6.elem(&[1, 1, 0, 0, 0, 0]).unwrap();
        assert!(matches!(
            extremal_construct(&c6, &h, &not_local, DEFAULT_DISTANCE_BUDGET),
            Err(Error::NotOneDimensional)
        ));
        let e = Subgroup::trivial();
        let code = extremal_construct(&c6, &e, &c6.one(), DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(code.params().d, Some(1));
        assert_eq!(c6.term(FieldElem::ONE, 0), c6.one());
    }

    #[test]
    fn search_ranking() {
        let r = plain(2, FiniteGroup::cyclic(2));
        let report = search_codes(&r, Side::Right, &SearchFilter { min_d: 2, ..Default::default() }).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!((report.entries[0].k, report.entries[0].d), (Some(1), 2));

        let c6 = plain(3, FiniteGroup::cyclic(6));
        let report = search_codes(
            &c6,
            Side::Right,
            &SearchFilter { min_d: 3, target: Some((6, 2, 3)), ..Default::default() },
        )
        .unwrap();
        assert_eq!(report.target_found, Some(true));
        assert!(report.entries.windows(2).all(|w| rank_key(&w[0]) >= rank_key(&w[1])));
        let best = report.best().unwrap();
        assert_eq!(best.k.unwrap() + best.d, 7);
    }
}
