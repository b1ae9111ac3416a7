//! Finite groups given by Cayley tables, with the structural queries needed
//! downstream: generated subgroups, normality, quotients, commutator
//! subgroups, Sylow subgroups and p-nilpotency.
//!
//! The identity is always element 0.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tables up to this order are checked for associativity exhaustively.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;
const SAMPLED_TRIPLES: usize = 50_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    orders: Vec<usize>,
    label: String,
}

/// A subgroup, as the sorted list of its members in the parent's indexing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}

/// `G/N` with its projection and a coset-representative list whose first
/// entry is the identity.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
    pub reps: Vec<usize>,
}

/// Outcome of the p-nilpotency test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PNilpotency {
    /// The p'-elements form this (normal) subgroup.
    Complement(Subgroup),
    /// Two p'-elements whose product is not a p'-element.
    Violation(usize, usize),
}

impl PNilpotency {
    pub fn holds(&self) -> bool {
        matches!(self, PNilpotency::Complement(_))
    }
}

/// `{"builtin": "S3"}` or `{"table": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Builtin { builtin: String },
    Table { table: Vec<Vec<usize>> },
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Groups compare by their Cayley tables; labels are ignored.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a Cayley table and relabels so that the identity is 0.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_seeded(rows, DEFAULT_SEED)
    }

    /// As [`from_table`](Self::from_table); `seed` drives the sampled
    /// associativity check used above [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`].
    pub fn from_table_seeded(rows: Vec<Vec<usize>>, seed: u64) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table must be square with entries below its order".into()));
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                row_seen[rows[i][j]] = true;
                col_seen[rows[j][i]] = true;
            }
            if row_seen.iter().chain(&col_seen).any(|s| !s) {
                return Err(Error::NotAGroup(format!("row or column {i} is not a permutation")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|j| rows[e][j] == j && rows[j][e] == j))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        // Swap labels 0 and e.
        let relabel = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(rows[i][j]);
            }
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let assoc = |a: usize, b: usize, c: usize| mul(mul(a, b), c) == mul(a, mul(b, c));
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                }
            }
        }
        let inverse: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| mul(a, b) == 0).expect("latin square has inverses"))
            .collect();
        let orders = (0..n)
            .map(|a| {
                let mut k = 1;
                let mut cur = a;
                while cur != 0 {
                    cur = mul(cur, a);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(FiniteGroup { n, table, inverse, orders, label: format!("group of order {n}") })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn spec(&self) -> GroupSpec {
        GroupSpec::Table { table: self.table_rows() }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    // ---- builders -------------------------------------------------------

    pub fn cyclic(k: usize) -> Self {
        let rows = (0..k).map(|i| (0..k).map(|j| (i + j) % k).collect()).collect();
        Self::from_table(rows).expect("cyclic table").with_label(format!("C{k}"))
    }

    /// The dihedral group of order `2k`; element `j*k + i` is `r^i s^j`.
    pub fn dihedral(k: usize) -> Self {
        let idx = |i: usize, j: usize| j * k + i;
        let mut rows = vec![vec![0; 2 * k]; 2 * k];
        for a in 0..k {
            for b in 0..2 {
                for c in 0..k {
                    for d in 0..2 {
                        // r^a s^b r^c s^d = r^(a ± c) s^(b+d)
                        let rot = if b == 0 { (a + c) % k } else { (a + k - c) % k };
                        rows[idx(a, b)][idx(c, d)] = idx(rot, (b + d) % 2);
                    }
                }
            }
        }
        Self::from_table(rows).expect("dihedral table").with_label(format!("D{k}"))
    }

    /// The group generated by permutations of `{0..degree}`; elements are
    /// ordered by breadth-first discovery from the identity.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Self {
        let degree = gens.first().map_or(0, |g| g.len());
        let id: Vec<usize> = (0..degree).collect();
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let mut elems = vec![id.clone()];
        let mut seen: HashSet<Vec<usize>> = HashSet::from([id]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let next = compose(&elems[i], g);
                if seen.insert(next.clone()) {
                    elems.push(next);
                    queue.push_back(elems.len() - 1);
                }
            }
        }
        let index = |p: &Vec<usize>| elems.iter().position(|q| q == p).unwrap();
        let rows = elems
            .iter()
            .map(|a| elems.iter().map(|b| index(&compose(a, b))).collect())
            .collect();
        Self::from_table(rows).expect("permutation group table")
    }

    pub fn symmetric(n: usize) -> Self {
        assert!((2..=5).contains(&n), "symmetric groups of degree 2..=5 only");
        let transposition: Vec<usize> = (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::from_permutations(&[transposition, cycle]).with_label(format!("S{n}"))
    }

    pub fn alternating(n: usize) -> Self {
        assert!((3..=5).contains(&n), "alternating groups of degree 3..=5 only");
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| (0..n).map(|i| if i == 0 { 1 } else if i == 1 { k } else if i == k { 0 } else { i }).collect())
            .collect();
        Self::from_permutations(&gens).with_label(format!("A{n}"))
    }

    /// Q8 with element `4*s + u` standing for `(-1)^s · [1, i, j, k][u]`.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let rows = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (s, u) = UNIT[a % 4][b % 4];
                        4 * ((s + a / 4 + b / 4) % 2) + u
                    })
                    .collect()
            })
            .collect();
        Self::from_table(rows).expect("quaternion table").with_label("Q8")
    }

    pub fn klein4() -> Self {
        let rows = (0..4).map(|i: usize| (0..4).map(|j: usize| i ^ j).collect()).collect();
        Self::from_table(rows).expect("klein table").with_label("Klein4")
    }

    /// `A × B` with `(a, b)` at index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let rows = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        Self::from_table(rows).expect("product table").with_label(format!("{}x{}", a.label, b.label))
    }

    /// Parses names such as `C6`, `cyclic(6)`, `D4`, `S3`, `A4`, `Q8`,
    /// `Klein4`, and products joined by `x` (`C2xC3`).
    pub fn builtin(name: &str) -> Result<Self> {
        let name = name.trim();
        let unknown = || Error::UnknownGroup(name.to_string());
        let lower = name.to_ascii_lowercase();
        if lower == "klein4" || lower == "v4" {
            return Ok(Self::klein4());
        }
        if lower == "q8" || lower == "quaternion(8)" || lower == "quaternion" {
            return Ok(Self::quaternion());
        }
        if lower.contains('x') && !lower.starts_with("klein") {
            let mut parts = lower.split('x');
            let first = Self::builtin(parts.next().ok_or_else(unknown)?)?;
            return parts.try_fold(first, |acc, part| Ok(Self::direct_product(&acc, &Self::builtin(part)?)));
        }
        let (kind, arg) = if let Some(inner) = lower.strip_suffix(')') {
            let (k, a) = inner.split_once('(').ok_or_else(unknown)?;
            (k.to_string(), a.to_string())
        } else {
            let split = lower.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
            (lower[..split].to_string(), lower[split..].to_string())
        };
        let k: usize = arg.parse().map_err(|_| unknown())?;
        match kind.as_str() {
            "c" | "cyclic" if k >= 1 => Ok(Self::cyclic(k)),
            "d" | "dihedral" if k >= 2 => Ok(Self::dihedral(k)),
            "s" | "symmetric" if (2..=5).contains(&k) => Ok(Self::symmetric(k)),
            "a" | "alternating" if (3..=5).contains(&k) => Ok(Self::alternating(k)),
            _ => Err(unknown()),
        }
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        match spec {
            GroupSpec::Builtin { builtin } => Self::builtin(builtin),
            GroupSpec::Table { table } => Self::from_table(table.clone()),
        }
    }

    // ---- subgroups ------------------------------------------------------

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: (0..self.n).collect() }
    }

    /// Closure of `gens` under multiplication (inverses come for free in a
    /// finite group).
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut members = vec![0];
        let mut frontier: Vec<usize> = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let s: BTreeSet<usize> = set.iter().copied().collect();
        s.contains(&0)
            && s.iter().all(|&a| s.contains(&self.inv(a)) && s.iter().all(|&b| s.contains(&self.mul(a, b))))
    }

    /// Builds a [`Subgroup`] from a set after checking closure.
    pub fn subgroup(&self, set: &[usize]) -> Option<Subgroup> {
        if !self.is_subgroup(set) {
            return None;
        }
        let mut members = set.to_vec();
        members.sort_unstable();
        members.dedup();
        Some(Subgroup { members })
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.n).all(|g| h.members.iter().all(|&x| h.contains(self.mul(self.mul(g, x), self.inv(g)))))
    }

    /// True iff some member generates the whole set.
    pub fn is_cyclic(&self, set: &[usize]) -> bool {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.iter().any(|&g| self.generate(&[g]).members == sorted)
    }

    /// The subgroup as a group in its own right, together with the map from
    /// new indices to parent indices.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let pos = |x: usize| h.members.binary_search(&x).expect("closed subgroup");
        let rows = h
            .members
            .iter()
            .map(|&a| h.members.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let group = Self::from_table(rows).expect("subgroup table");
        (group, h.members.clone())
    }

    pub fn quotient(&self, normal: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let mut projection = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if projection[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &u in &normal.members {
                projection[self.mul(g, u)] = c;
            }
        }
        let s = reps.len();
        let rows = (0..s)
            .map(|i| (0..s).map(|j| projection[self.mul(reps[i], reps[j])]).collect())
            .collect();
        let group = Self::from_table(rows)?.with_label(format!("{}/N{}", self.label, normal.order()));
        Ok(Quotient { group, projection, reps })
    }

    /// Every normal subgroup generated by at most two elements, plus `G`,
    /// sorted by order. For the small groups handled here (order below 16)
    /// this is every normal subgroup.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut found = BTreeSet::new();
        found.insert(self.whole());
        for a in 0..self.n {
            for b in a..self.n {
                let h = self.generate(&[a, b]);
                if self.is_normal(&h) {
                    found.insert(h);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by_key(|h| (h.order(), h.members.clone()));
        out
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let mut comms = BTreeSet::new();
        for g in 0..self.n {
            for h in 0..self.n {
                let c = self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)));
                comms.insert(c);
            }
        }
        self.generate(&comms.into_iter().collect::<Vec<_>>())
    }

    /// A Sylow p-subgroup, found by growing p-subgroups one p-element at a
    /// time with backtracking. Returns `{e}` when `p ∤ |G|`.
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        let target = p_part(self.n, p);
        if target == 1 {
            return Subgroup::trivial();
        }
        let p_elems: Vec<usize> = (1..self.n).filter(|&g| is_power_of(self.orders[g], p)).collect();
        let mut visited = HashSet::new();
        self.grow_p_subgroup(Subgroup::trivial(), target, p, &p_elems, &mut visited)
            .expect("Sylow subgroups exist")
    }

    fn grow_p_subgroup(
        &self,
        current: Subgroup,
        target: usize,
        p: usize,
        p_elems: &[usize],
        visited: &mut HashSet<Vec<usize>>,
    ) -> Option<Subgroup> {
        if current.order() == target {
            return Some(current);
        }
        for &x in p_elems {
            if current.contains(x) {
                continue;
            }
            let mut gens = current.members.clone();
            gens.push(x);
            let next = self.generate(&gens);
            if is_power_of(next.order(), p) && visited.insert(next.members.clone()) {
                if let Some(found) = self.grow_p_subgroup(next, target, p, p_elems, visited) {
                    return Some(found);
                }
            }
        }
        None
    }

    pub fn has_cyclic_sylow(&self, p: usize) -> bool {
        let s = self.sylow_subgroup(p);
        self.is_cyclic(s.members())
    }

    /// Decides p-nilpotency by checking whether the elements of order
    /// coprime to `p` are closed under multiplication.
    pub fn p_nilpotency(&self, p: usize) -> PNilpotency {
        let coprime: Vec<usize> = (0..self.n).filter(|&g| gcd(self.orders[g], p) == 1).collect();
        let mut inside = vec![false; self.n];
        for &g in &coprime {
            inside[g] = true;
        }
        for &a in &coprime {
            for &b in &coprime {
                if !inside[self.mul(a, b)] {
                    return PNilpotency::Violation(a, b);
                }
            }
        }
        PNilpotency::Complement(Subgroup { members: coprime })
    }

    pub fn is_p_nilpotent(&self, p: usize) -> bool {
        self.p_nilpotency(p).holds()
    }
}

/// All abelian groups of order `n` up to isomorphism, as direct products of
/// cyclic groups of prime-power order.
pub fn abelian_groups_of_order(n: usize) -> Vec<FiniteGroup> {
    fn partitions(k: usize, max: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=k.min(max)).rev() {
            for mut rest in partitions(k - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut primes = Vec::new();
    let mut rest = n;
    let mut d = 2;
    while rest > 1 {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += 1;
    }
    let mut choices: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in primes {
        let mut next = Vec::new();
        for c in &choices {
            for part in partitions(e, e) {
                let mut c2 = c.clone();
                c2.extend(part.iter().map(|&k| p.pow(k as u32)));
                next.push(c2);
            }
        }
        choices = next;
    }
    choices
        .into_iter()
        .map(|factors| {
            let mut g = FiniteGroup::cyclic(1);
            for f in factors {
                g = if g.order() == 1 { FiniteGroup::cyclic(f) } else { FiniteGroup::direct_product(&g, &FiniteGroup::cyclic(f)) };
            }
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive list of subgroups by closure of every subset of size ≤ 2
    /// generators, which covers all subgroups of the small test groups.
    fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
        let mut out = BTreeSet::new();
        for a in 0..g.order() {
            for b in 0..g.order() {
                out.insert(g.generate(&[a, b]));
            }
        }
        out.into_iter().collect()
    }

    fn s3_parts(g: &FiniteGroup) -> (Vec<usize>, Vec<usize>) {
        let ts = (0..6).filter(|&x| g.element_order(x) == 2).collect();
        let cs = (0..6).filter(|&x| g.element_order(x) == 3).collect();
        (ts, cs)
    }

    #[test]
    fn cyclic_is_modular_addition() {
        let c6 = FiniteGroup::cyclic(6);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(c6.mul(i, j), (i + j) % 6);
            }
        }
    }

    #[test]
    fn s3_from_permutations() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let (ts, cs) = s3_parts(&s3);
        assert_eq!((ts.len(), cs.len()), (3, 2));
    }

    #[test]
    fn rejects_non_associative_table() {
        // A Latin square with identity 0 that is not associative (order 5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(rows), Err(Error::NotAGroup(_))));
        assert!(matches!(FiniteGroup::from_table(vec![vec![0, 1], vec![0, 1]]), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // C2 written with identity at index 1.
        let g = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn subgroup_queries_on_s3() {
        let s3 = FiniteGroup::symmetric(3);
        let (ts, cs) = s3_parts(&s3);
        let a3 = s3.generate(&[cs[0]]);
        let mut expect = [0, cs[0], cs[1]];
        expect.sort();
        assert_eq!(a3.members(), &expect[..]);
        assert!(!s3.is_subgroup(&[0, ts[0], ts[1], ts[2]]));
        assert!(s3.is_cyclic(&[0]));
        assert!(s3.is_normal(&a3));
        let q = s3.quotient(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.reps[0], 0);
        let t1 = s3.subgroup(&[0, ts[0]]).unwrap();
        assert!(matches!(s3.quotient(&t1), Err(Error::NotNormal)));
        let triv = s3.quotient(&Subgroup::trivial()).unwrap();
        assert_eq!(triv.group.order(), 6);
    }

    #[test]
    fn commutator_subgroups() {
        let s3 = FiniteGroup::symmetric(3);
        let (_, cs) = s3_parts(&s3);
        assert_eq!(s3.commutator_subgroup(), s3.generate(&[cs[0]]));
        assert_eq!(FiniteGroup::cyclic(5).commutator_subgroup(), Subgroup::trivial());
        let q8 = FiniteGroup::quaternion();
        assert_eq!(q8.commutator_subgroup().members(), &[0, 4]);
        assert_eq!(FiniteGroup::alternating(4).commutator_subgroup().order(), 4);
    }

    #[test]
    fn sylow_subgroups_match_exhaustive_scan() {
        for (g, p) in [
            (FiniteGroup::symmetric(3), 3),
            (FiniteGroup::symmetric(3), 2),
            (FiniteGroup::alternating(4), 2),
            (FiniteGroup::alternating(4), 3),
            (FiniteGroup::quaternion(), 2),
            (FiniteGroup::dihedral(6), 2),
            (FiniteGroup::symmetric(4), 2),
        ] {
            let s = g.sylow_subgroup(p);
            let target = p_part(g.order(), p);
            assert_eq!(s.order(), target);
            assert!(g.is_subgroup(s.members()));
            let scan: Vec<_> = all_subgroups(&g).into_iter().filter(|h| h.order() == target).collect();
            assert!(scan.contains(&s) || g.order() == 24);
        }
        assert_eq!(FiniteGroup::cyclic(6).sylow_subgroup(5), Subgroup::trivial());
    }

    #[test]
    fn p_nilpotency_examples() {
        let s3 = FiniteGroup::symmetric(3);
        let (ts, cs) = s3_parts(&s3);
        match s3.p_nilpotency(2) {
            PNilpotency::Complement(h) => assert_eq!(h, s3.generate(&[cs[0]])),
            other => panic!("{other:?}"),
        }
        match s3.p_nilpotency(3) {
            PNilpotency::Violation(a, b) => {
                assert!(ts.contains(&a) && ts.contains(&b));
                assert_eq!(s3.element_order(s3.mul(a, b)), 3);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(FiniteGroup::quaternion().p_nilpotency(2), PNilpotency::Complement(Subgroup::trivial()));
    }

    #[test]
    fn structural_invariants_on_builtins() {
        for name in ["C1", "C6", "D4", "S3", "A4", "Q8", "Klein4", "C2xC3", "S4", "D6"] {
            let g = FiniteGroup::builtin(name).unwrap();
            for a in 0..g.order() {
                assert_eq!(g.order() % g.element_order(a), 0);
                assert_eq!(g.mul(a, g.inv(a)), 0);
            }
            let n = g.commutator_subgroup();
            assert!(g.is_normal(&n));
            let q = g.quotient(&n).unwrap();
            assert!(q.group.is_abelian());
            for x in 0..g.order() {
                for y in 0..g.order() {
                    assert_eq!(q.projection[g.mul(x, y)], q.group.mul(q.projection[x], q.projection[y]));
                }
            }
            for p in [2, 3, 5] {
                if let PNilpotency::Complement(h) = g.p_nilpotency(p) {
                    assert!(g.is_normal(&h));
                    assert_eq!(g.order() / h.order(), p_part(g.order(), p));
                }
            }
        }
    }

    #[test]
    fn normal_subgroup_lists() {
        assert_eq!(FiniteGroup::symmetric(3).normal_subgroups().len(), 3);
        assert_eq!(FiniteGroup::quaternion().normal_subgroups().len(), 6);
        assert_eq!(FiniteGroup::dihedral(4).normal_subgroups().len(), 6);
        assert_eq!(FiniteGroup::cyclic(6).normal_subgroups().len(), 4);
    }

    #[test]
    fn normal_subgroups_match_subset_scan() {
        for g in [
            FiniteGroup::symmetric(3),
            FiniteGroup::quaternion(),
            FiniteGroup::dihedral(4),
            FiniteGroup::klein4(),
            FiniteGroup::cyclic(6),
            FiniteGroup::alternating(4),
        ] {
            let n = g.order();
            let mut brute: Vec<Subgroup> = (1u32..1 << n)
                .filter(|mask| mask & 1 == 1)
                .filter_map(|mask| g.subgroup(&(0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
                .filter(|h| g.is_normal(h))
                .collect();
            brute.sort_by_key(|h| (h.order(), h.members().to_vec()));
            let mut fast = g.normal_subgroups();
            fast.sort_by_key(|h| (h.order(), h.members().to_vec()));
            assert_eq!(fast, brute, "{}", g.label());
        }
    }

    #[test]
    fn abelian_group_catalogue() {
        assert_eq!(abelian_groups_of_order(8).len(), 3);
        assert_eq!(abelian_groups_of_order(6).len(), 1);
        assert_eq!(abelian_groups_of_order(4).len(), 2);
        assert_eq!(abelian_groups_of_order(1).len(), 1);
        assert!(abelian_groups_of_order(12).iter().all(|g| g.is_abelian() && g.order() == 12));
    }
}
