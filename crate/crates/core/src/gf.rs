//! Arithmetic in the finite field F_{p^m}.
//!
//! Elements are encoded as the base-p integer of their coefficient vector
//! over the polynomial basis 1, x, ..., x^{m-1}: digit `i` of the code is the
//! coefficient of x^i. In F_4 = F_2[x]/(x^2+x+1) the codes 0, 1, 2, 3 stand
//! for 0, 1, x, x+1. Every table and file in the crate uses this encoding.
//!
//! Fields with at most [`TABLE_LIMIT`] elements precompute exponent/log
//! tables over a fixed primitive element and a Frobenius table; larger
//! fields fall back to schoolbook polynomial arithmetic.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fields up to this order use precomputed log/exp tables.
pub const TABLE_LIMIT: u32 = 4096;
const ADD_TABLE_LIMIT: u32 = 256;
const MAX_ORDER: u64 = 1 << 24;

/// An element of some [`FiniteField`], stored by its integer code.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `{"p": int, "m": int, "modulus": [c0, ..., cm]}` as found in system files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
    frob: Vec<Vec<u32>>,
}

/// The field F_p[x]/(modulus) with `p^m` elements.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Arc<Tables>>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.p, self.m, self.modulus)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over F_p, coefficients lowest degree first.
fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `b`.
fn poly_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            let sub = (lead * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = k;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if poly_rem(p, modulus, &divisor).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds F_{p^m}. Without an explicit modulus the lexicographically
    /// smallest monic irreducible of degree `m` is used, ordering candidates
    /// by the base-p integer of their lower coefficients (c0 least
    /// significant).
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let q = q.ok_or(Error::FieldTooLarge { p, m })? as u32;
        let modulus = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 || c[m as usize] != 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected a monic coefficient list of length {}, got {c:?}",
                        m + 1
                    )));
                }
                if c.iter().any(|&x| x >= p) {
                    return Err(Error::InvalidModulus(format!("coefficients must be below {p}")));
                }
                if !is_irreducible(p, c) {
                    return Err(Error::ReducibleModulus(c.to_vec()));
                }
                c.to_vec()
            }
            None => Self::default_modulus(p, m),
        };
        let mut field = FiniteField { p, m, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(Arc::new(field.build_tables()));
        }
        Ok(field)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        Self::new(spec.p, spec.m, spec.modulus.as_deref())
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.p, m: self.m, modulus: Some(self.modulus.clone()) }
    }

    /// The prime field F_p.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    fn default_modulus(p: u32, m: u32) -> Vec<u32> {
        let count = (p as u64).pow(m);
        for k in 0..count {
            let mut c = Vec::with_capacity(m as usize + 1);
            let mut rest = k;
            for _ in 0..m {
                c.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            c.push(1);
            if is_irreducible(p, &c) {
                return c;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn build_tables(&self) -> Tables {
        let q = self.q;
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&c| {
                factors.iter().all(|&r| self.poly_pow(c, order / r) != 1)
            })
            .expect("the unit group is cyclic");
        let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for (i, e) in exp.iter_mut().take((q - 1) as usize).enumerate() {
            *e = cur;
            log[cur as usize] = i as u32;
            cur = self.poly_mul(cur, generator);
        }
        for i in (q - 1) as usize..exp.len() {
            exp[i] = exp[i - (q - 1) as usize];
        }
        let neg = (0..q).map(|a| self.digit_neg(a)).collect();
        let add = (q <= ADD_TABLE_LIMIT && self.p != 2).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = self.digit_add(a, b);
                }
            }
            t
        });
        let mut frob = Vec::with_capacity(self.m as usize);
        for k in 0..self.m {
            let e = (self.p as u64).pow(k);
            frob.push((0..q).map(|a| self.poly_pow(a, e)).collect());
        }
        Tables { exp, log, add, neg, frob }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Validates that `code` names an element of this field.
    pub fn elem(&self, code: u32) -> Result<FieldElem> {
        if code < self.q {
            Ok(FieldElem(code))
        } else {
            Err(Error::FieldMismatch { code, order: self.q })
        }
    }

    /// The image of the integer `k` in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElem {
        FieldElem(k.rem_euclid(self.p as i64) as u32)
    }

    /// An element generating the field as an F_p-algebra: the class of x,
    /// or 1 for a prime field.
    pub fn generator(&self) -> FieldElem {
        if self.m == 1 {
            FieldElem::ONE
        } else {
            FieldElem(self.p)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    pub fn units(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.q).map(FieldElem)
    }

    /// Base-p digits of an element, lowest degree first.
    pub fn digits(&self, a: FieldElem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut rest = a.0;
        for _ in 0..self.m {
            out.push(rest % self.p);
            rest /= self.p;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u32]) -> FieldElem {
        let mut code = 0u32;
        for &d in digits.iter().rev() {
            code = code * self.p + d % self.p;
        }
        FieldElem(code)
    }

    fn digit_add(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    fn digit_neg(&self, a: u32) -> u32 {
        let p = self.p;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            out += ((p - a % p) % p) * place;
            a /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    fn poly_mul(&self, a: u32, b: u32) -> u32 {
        let m = self.m as usize;
        let p = self.p as u64;
        let da = self.digits(FieldElem(a));
        let db = self.digits(FieldElem(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (m..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            let shift = d - m;
            for (i, &mc) in self.modulus.iter().enumerate() {
                prod[shift + i] = (prod[shift + i] + p - c * mc as u64 % p) % p;
            }
        }
        let low: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.from_digits(&low).0
    }

    fn poly_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(acc, base);
            }
            base = self.poly_mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        if self.m == 1 {
            return FieldElem((a.0 + b.0) % self.p);
        }
        match self.tables.as_ref().and_then(|t| t.add.as_ref()) {
            Some(add) => FieldElem(add[(a.0 * self.q + b.0) as usize]),
            None => FieldElem(self.digit_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        match &self.tables {
            Some(t) => FieldElem(t.neg[a.0 as usize]),
            None => FieldElem(self.digit_neg(a.0)),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        match &self.tables {
            Some(t) => FieldElem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => FieldElem(self.poly_mul(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => {
                let l = t.log[a.0 as usize];
                FieldElem(t.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
            }
            None => FieldElem(self.poly_pow(a.0, self.q as u64 - 2)),
        })
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a / b` for a divisor already known to be a unit.
    #[inline]
    pub(crate) fn div_unit(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.mul(a, self.inv(b).expect("divisor is a unit"))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.is_zero() {
            return FieldElem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let l = t.log[a.0 as usize] as u128 * e as u128 % (self.q as u128 - 1);
                FieldElem(t.exp[l as usize])
            }
            None => FieldElem(self.poly_pow(a.0, e)),
        }
    }

    /// The Frobenius power `a ↦ a^(p^k)`; `k` is taken modulo `m`.
    #[inline]
    pub fn frobenius(&self, a: FieldElem, k: u32) -> FieldElem {
        let k = k % self.m;
        if k == 0 {
            return a;
        }
        match &self.tables {
            Some(t) => FieldElem(t.frob[k as usize][a.0 as usize]),
            None => FieldElem(self.poly_pow(a.0, (self.p as u64).pow(k))),
        }
    }

    /// Multiplicative order of a unit.
    pub fn unit_order(&self, a: FieldElem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut k = 1u64;
        let mut cur = a;
        while cur != FieldElem::ONE {
            cur = self.mul(cur, a);
            k += 1;
        }
        Some(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f4() -> FiniteField {
        FiniteField::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn creates_f4_and_rejects_reducible_modulus() {
        let f = f4();
        assert_eq!(f.order(), 4);
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x^2 + 1 = (x + 1)^2 over F_2: x = 1 is a root.
        assert!(matches!(
            FiniteField::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(matches!(FiniteField::new(4, 1, None), Err(Error::NonPrimeCharacteristic(4))));
    }

    #[test]
    fn default_moduli_are_smallest_irreducibles() {
        assert_eq!(FiniteField::new(3, 1, None).unwrap().modulus(), &[0, 1]);
        assert_eq!(FiniteField::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        // x^2 + 1 is irreducible over F_3 (-1 is not a square mod 3).
        assert_eq!(FiniteField::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn f4_products_match_hand_reduction() {
        let f = f4();
        // x * x = x^2 = x + 1
        assert_eq!(f.mul(FieldElem(2), FieldElem(2)), FieldElem(3));
        for a in f.elements() {
            assert_eq!(f.mul(a, FieldElem::ONE), a);
        }
        // (x + 1) * x = x^2 + x = 1
        assert_eq!(f.div(FieldElem(1), FieldElem(3)).unwrap(), FieldElem(2));
        assert!(matches!(f.div(FieldElem(1), FieldElem(0)), Err(Error::DivisionByZero)));
        assert!(matches!(f.elem(4), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn frobenius_on_f4() {
        let f = f4();
        assert_eq!(f.frobenius(FieldElem(2), 1), FieldElem(3));
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 0), a);
        }
        for k in 0..4 {
            assert_eq!(f.frobenius(FieldElem::ONE, k), FieldElem::ONE);
        }
    }

    fn small_fields() -> Vec<FiniteField> {
        [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (5, 2), (2, 4), (7, 1), (2, 9)]
            .iter()
            .map(|&(p, m)| FiniteField::new(p, m, None).unwrap())
            .collect()
    }

    #[test]
    fn frobenius_is_an_automorphism_of_period_m() {
        for f in small_fields() {
            for k in 0..f.degree() {
                for a in f.elements() {
                    for b in f.elements().step_by(1 + f.order() as usize / 40) {
                        assert_eq!(
                            f.frobenius(f.mul(a, b), k),
                            f.mul(f.frobenius(a, k), f.frobenius(b, k))
                        );
                        assert_eq!(
                            f.frobenius(f.add(a, b), k),
                            f.add(f.frobenius(a, k), f.frobenius(b, k))
                        );
                    }
                }
            }
            for a in f.elements() {
                assert_eq!(f.frobenius(a, f.degree()), a);
                let mut b = a;
                for _ in 0..f.degree() {
                    b = f.frobenius(b, 1);
                }
                assert_eq!(b, a);
            }
        }
    }

    #[test]
    fn lagrange_on_unit_groups() {
        for f in small_fields() {
            for a in f.units() {
                assert_eq!(f.pow(a, f.order() as u64 - 1), FieldElem::ONE);
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
            }
        }
    }

    #[test]
    fn table_and_polynomial_paths_agree() {
        // F_{2^13} has no tables; compare against F_{2^13} arithmetic identities.
        let big = FiniteField::new(2, 13, None).unwrap();
        assert!(big.tables.is_none());
        for a in (1..big.order()).step_by(977).map(FieldElem) {
            assert_eq!(big.mul(a, big.inv(a).unwrap()), FieldElem::ONE);
            assert_eq!(big.frobenius(a, 13), a);
        }
        let f = FiniteField::new(3, 3, None).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b).0, f.poly_mul(a.0, b.0));
                assert_eq!(f.add(a, b).0, f.digit_add(a.0, b.0));
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms_in_f9(a in 0u32..9, b in 0u32..9, c in 0u32..9) {
            let f = FiniteField::new(3, 2, None).unwrap();
            let (a, b, c) = (FieldElem(a), FieldElem(b), FieldElem(c));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.sub(a, b), b), a);
        }
    }
}
