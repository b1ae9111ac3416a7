//! Dense linear algebra over a prime field F_p.
//!
//! Subspaces are kept in reduced row echelon form so two subspaces are equal
//! exactly when their row lists are equal.

use serde::Serialize;

/// Arithmetic modulo a prime.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Self {
        Fp { p }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod {}", self.p);
        let mut acc = 1u64;
        let mut base = a as u64 % self.p as u64;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// `row += c * other`
    #[inline]
    pub fn axpy(self, row: &mut [u32], c: u32, other: &[u32]) {
        if c == 0 {
            return;
        }
        for (x, &y) in row.iter_mut().zip(other) {
            if y != 0 {
                *x = self.add(*x, self.mul(c, y));
            }
        }
    }
}

/// Gauss-Jordan elimination in place, choosing pivots only among the first
/// `pivot_cols` columns. Returns the pivot columns; rows past the pivots are
/// zero on those columns but are kept.
pub fn reduce_prefix(fp: Fp, rows: &mut [Vec<u32>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = fp.inv(rows[r][col]);
        if inv != 1 {
            for x in rows[r].iter_mut() {
                *x = fp.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = fp.p() - row[col];
                fp.axpy(row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(fp: Fp, rows: &[Vec<u32>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut work = rows.to_vec();
    let ncols = work[0].len();
    reduce_prefix(fp, &mut work, ncols).len()
}

/// `{v : v · A = 0}` for the matrix `A` whose rows are `rows` (each of
/// length `ncols`).
pub fn left_kernel(fp: Fp, rows: &[Vec<u32>], ncols: usize) -> Subspace {
    let r = rows.len();
    let mut aug: Vec<Vec<u32>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = Vec::with_capacity(ncols + r);
            v.extend_from_slice(row);
            v.extend((0..r).map(|j| u32::from(i == j)));
            v
        })
        .collect();
    let pivots = reduce_prefix(fp, &mut aug, ncols);
    let kernel = aug[pivots.len()..].iter().map(|row| row[ncols..].to_vec()).collect();
    Subspace::from_rows(fp, r, kernel)
}

/// Calls `f` on `start + Σ c_j rows[j]` for every coefficient vector `c`,
/// in Gray-code order (one row added per step), stopping early when `f`
/// returns `false`.
pub fn for_each_in_coset(fp: Fp, start: &[u32], rows: &[Vec<u32>], mut f: impl FnMut(&[u32]) -> bool) {
    let mut cur = start.to_vec();
    if !f(&cur) {
        return;
    }
    let p = fp.p() as u128;
    let total = p.checked_pow(rows.len() as u32).unwrap_or(u128::MAX);
    for i in 1..total {
        // The digit that changes is the p-adic valuation of i.
        let mut j = 0;
        let mut t = i;
        while t % p == 0 {
            t /= p;
            j += 1;
        }
        fp.axpy(&mut cur, 1, &rows[j]);
        if !f(&cur) {
            return;
        }
    }
}

/// A subspace of F_p^ncols in canonical reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subspace {
    ncols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ncols: usize) -> Self {
        Subspace { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ncols: usize) -> Self {
        let rows = (0..ncols).map(|i| (0..ncols).map(|j| u32::from(i == j)).collect()).collect();
        Subspace { ncols, rows, pivots: (0..ncols).collect() }
    }

    pub fn from_rows(fp: Fp, ncols: usize, mut rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        let pivots = reduce_prefix(fp, &mut rows, ncols);
        rows.truncate(pivots.len());
        Subspace { ncols, rows, pivots }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the
    /// subspace.
    pub fn reduce(&self, fp: Fp, v: &[u32]) -> Vec<u32> {
        let mut out = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if out[col] != 0 {
                let c = fp.p() - out[col];
                fp.axpy(&mut out, c, row);
            }
        }
        out
    }

    pub fn contains(&self, fp: Fp, v: &[u32]) -> bool {
        self.reduce(fp, v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, fp: Fp, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(fp, r))
    }

    pub fn sum(&self, fp: Fp, other: &Subspace) -> Subspace {
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Subspace::from_rows(fp, self.ncols, rows)
    }

    /// Number of vectors, `p^dim`, saturating.
    pub fn size(&self, fp: Fp) -> u128 {
        (fp.p() as u128).checked_pow(self.dim() as u32).unwrap_or(u128::MAX)
    }

    /// Calls `f` on every vector of the subspace in a Gray-code order: each
    /// vector after the first (zero) differs from its predecessor by one
    /// basis row. Stops early when `f` returns `false`.
    pub fn for_each_vector(&self, fp: Fp, f: impl FnMut(&[u32]) -> bool) {
        for_each_in_coset(fp, &vec![0; self.ncols], &self.rows, f);
    }

    /// The vector with coordinates `coeffs` in the stored basis.
    pub fn combination(&self, fp: Fp, coeffs: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.ncols];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            fp.axpy(&mut out, c, row);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn kernel_of_all_ones_block() {
        let fp = Fp::new(2);
        // v ↦ v · [[1,1],[1,1]] kills (1,1).
        let k = left_kernel(fp, &[vec![1, 1], vec![1, 1]], 2);
        assert_eq!(k.rows(), &[vec![1, 1]]);
        let full = left_kernel(fp, &[vec![0, 0], vec![0, 0]], 2);
        assert_eq!(full, Subspace::full(2));
    }

    #[test]
    fn gray_enumeration_visits_every_vector_once() {
        let fp = Fp::new(3);
        let s = Subspace::from_rows(fp, 4, vec![vec![1, 2, 0, 1], vec![0, 1, 1, 1], vec![1, 0, 0, 2]]);
        let mut seen = HashSet::new();
        s.for_each_vector(fp, |v| {
            assert!(s.contains(fp, v));
            assert!(seen.insert(v.to_vec()));
            true
        });
        assert_eq!(seen.len(), 27);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(0u32..5, 20)) {
            let fp = Fp::new(5);
            let rows: Vec<Vec<u32>> = entries.chunks(5).map(|c| c.to_vec()).collect();
            let r = rank(fp, &rows);
            let k = left_kernel(fp, &rows, 5);
            prop_assert_eq!(r + k.dim(), rows.len());
            for v in k.rows() {
                for col in 0..5 {
                    let s = (0..rows.len()).fold(0, |acc, i| fp.add(acc, fp.mul(v[i], rows[i][col])));
                    prop_assert_eq!(s, 0);
                }
            }
        }

        #[test]
        fn canonical_form_ignores_row_order(entries in proptest::collection::vec(0u32..3, 12)) {
            let fp = Fp::new(3);
            let rows: Vec<Vec<u32>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let mut reversed = rows.clone();
            reversed.reverse();
            prop_assert_eq!(Subspace::from_rows(fp, 4, rows), Subspace::from_rows(fp, 4, reversed));
        }
    }
}
