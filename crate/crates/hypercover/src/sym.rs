//! Weight-set calculus for symmetric subsets of the hypercube: the canonical
//! windows W_{n,i}, the measures mu and Lambda, inner/outer peripheral
//! intervals, inn/out, index complexity, and separation sets.
//!
//! A symmetric set is closed under coordinate permutations, hence determined
//! by its set of Hamming weights. All operations here work on weight lists;
//! point sets are expanded only where an operation is genuinely pointwise.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Symmetric subset of {0,1}^n, stored as its sorted, duplicate-free weight
/// set (a subset of [0, n]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetricSet {
    n: usize,
    weights: Vec<usize>,
}

impl SymmetricSet {
    pub fn new(n: usize, weights: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = weights.into_iter().collect();
        if let Some(&w) = set.iter().next_back() {
            if w > n {
                return Err(Error::domain(format!("weight {w} exceeds dimension {n}")));
            }
        }
        Ok(SymmetricSet { n, weights: set.into_iter().collect() })
    }

    pub fn empty(n: usize) -> Self {
        SymmetricSet { n, weights: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        SymmetricSet { n, weights: (0..=n).collect() }
    }

    pub fn layer(n: usize, w: usize) -> Result<Self> {
        SymmetricSet::new(n, [w])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn weight_count(&self) -> usize {
        self.weights.len()
    }

    pub fn contains_weight(&self, w: usize) -> bool {
        self.weights.binary_search(&w).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.weights.len() == self.n + 1
    }

    pub fn is_subset_of(&self, other: &SymmetricSet) -> bool {
        self.weights.iter().all(|w| other.contains_weight(*w))
    }

    /// Complement within {0,1}^n.
    pub fn complement(&self) -> SymmetricSet {
        let weights = (0..=self.n).filter(|w| !self.contains_weight(*w)).collect();
        SymmetricSet { n: self.n, weights }
    }

    /// Number of points represented.
    pub fn point_count(&self) -> u128 {
        self.weights.iter().map(|&w| binomial(self.n, w)).sum()
    }

    /// Expands to the explicit point set (sorted).
    pub fn points(&self) -> PointSet {
        let mut points = Vec::new();
        for x in cube_points(self.n) {
            let w = x.iter().filter(|&&b| b != 0).count();
            if self.contains_weight(w) {
                points.push(x);
            }
        }
        PointSet { n: self.n, points }
    }

    pub fn contains_point(&self, x: &[u8]) -> bool {
        self.contains_weight(x.iter().filter(|&&b| b != 0).count())
    }

    /// Is this set a peripheral interval J_{n,a,b}? Returns the interval if so.
    pub fn as_peripheral(&self) -> Option<PeripheralInterval> {
        for a in -1..=(self.n as i64 - 1) {
            for b in (a + 1).max(1)..=(self.n as i64 + 1) {
                let j = PeripheralInterval::new(self.n, a, b).ok()?;
                if j.weight_set() == *self {
                    return Some(j);
                }
            }
        }
        None
    }
}

/// All points of {0,1}^n in lexicographic order (coordinate 1 most
/// significant).
pub fn cube_points(n: usize) -> Vec<Vec<u8>> {
    assert!(n < 64, "cube enumeration limited to n < 64");
    (0..(1u64 << n))
        .map(|m| (0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u8).collect())
        .collect()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Peripheral interval J_{n,a,b}: the symmetric set with weight set
/// [0,a] u [b,n], where a in [-1, n-1], b in [1, n+1], a < b, with the
/// convention [0,-1] = [n+1,n] = empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeripheralInterval {
    pub n: usize,
    pub a: i64,
    pub b: i64,
}

impl PeripheralInterval {
    pub fn new(n: usize, a: i64, b: i64) -> Result<Self> {
        if a < -1 || a > n as i64 - 1 {
            return Err(Error::domain(format!("peripheral a={a} out of [-1,{}]", n as i64 - 1)));
        }
        if b < 1 || b > n as i64 + 1 {
            return Err(Error::domain(format!("peripheral b={b} out of [1,{}]", n + 1)));
        }
        if a >= b {
            return Err(Error::domain(format!("peripheral requires a < b, got a={a} b={b}")));
        }
        Ok(PeripheralInterval { n, a, b })
    }

    pub fn weight_set(&self) -> SymmetricSet {
        let mut weights = Vec::new();
        for w in 0..=self.n as i64 {
            if w <= self.a || w >= self.b {
                weights.push(w as usize);
            }
        }
        SymmetricSet { n: self.n, weights }
    }

    /// |I_{n,a,b}| = (a+1) + (n-b+1).
    pub fn weight_size(&self) -> i64 {
        (self.a + 1) + (self.n as i64 - self.b + 1)
    }

    /// Tie-break functional |a + b - n|.
    pub fn lambda_skew(&self) -> i64 {
        (self.a + self.b - self.n as i64).abs()
    }

    /// Mirror image J_{n, n-b, n-a}.
    pub fn mirror(&self) -> PeripheralInterval {
        PeripheralInterval { n: self.n, a: self.n as i64 - self.b, b: self.n as i64 - self.a }
    }

    pub fn contains(&self, s: &SymmetricSet) -> bool {
        s.weights.iter().all(|&w| (w as i64) <= self.a || (w as i64) >= self.b)
    }
}

/// Duplicate-free list of points of {0,1}^n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    n: usize,
    points: Vec<Vec<u8>>,
}

impl PointSet {
    pub fn new(n: usize, points: impl IntoIterator<Item = Vec<u8>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.len() != n {
                return Err(Error::domain(format!(
                    "point of length {} in a {n}-dimensional set",
                    p.len()
                )));
            }
            if p.iter().any(|&b| b > 1) {
                return Err(Error::domain("point coordinates must be 0 or 1"));
            }
            set.insert(p);
        }
        Ok(PointSet { n, points: set.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<u8>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[u8]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    pub fn complement(&self) -> PointSet {
        let points = cube_points(self.n).into_iter().filter(|p| !self.contains(p)).collect();
        PointSet { n: self.n, points }
    }
}

/// W_{n,i} = [0, i-1] u [n-i+1, n] as a symmetric set (the set T_{n,i}).
pub fn canonical_weight_window(n: usize, i: usize) -> Result<SymmetricSet> {
    if i > n {
        return Err(Error::domain(format!("window index {i} exceeds dimension {n}")));
    }
    let mut weights = BTreeSet::new();
    for w in 0..i {
        weights.insert(w);
    }
    for w in (n + 1 - i)..=n {
        weights.insert(w);
    }
    Ok(SymmetricSet { n, weights: weights.into_iter().collect() })
}

/// mu_n(S) = max{ i in [0, ceil(n/2)] : W_{n,i} subset of W_n(S) }.
pub fn mu(s: &SymmetricSet) -> usize {
    let n = s.n;
    let half = n.div_ceil(2);
    let mut best = 0;
    for i in 0..=half {
        let window = canonical_weight_window(n, i).expect("i <= n");
        if window.is_subset_of(s) {
            best = i;
        }
    }
    best
}

/// Lambda_n(S) = |W_n(S)| - mu_n(S).
pub fn lambda_measure(s: &SymmetricSet) -> usize {
    s.weight_count() - mu(s)
}

/// Barred measure applied to the complement: mu_n({0,1}^n \ S).
pub fn mu_bar(s: &SymmetricSet) -> usize {
    mu(&s.complement())
}

/// Lambda_n of the complement.
pub fn lambda_bar(s: &SymmetricSet) -> usize {
    lambda_measure(&s.complement())
}

/// The inner interval of S: the unique maximal peripheral interval contained
/// in S. For the full cube the convention is J_{n, floor(n/2), floor(n/2)+1};
/// for the empty set it is J_{n,-1,n+1}.
pub fn inner_interval(s: &SymmetricSet) -> PeripheralInterval {
    let n = s.n;
    if s.is_full() {
        return PeripheralInterval { n, a: (n / 2) as i64, b: (n / 2) as i64 + 1 };
    }
    let mut a: i64 = -1;
    while a + 1 <= n as i64 - 1 && s.contains_weight((a + 1) as usize) {
        a += 1;
    }
    let mut b: i64 = n as i64 + 1;
    while b - 1 >= 1 && s.contains_weight((b - 1) as usize) {
        b -= 1;
    }
    // S proper means some weight is missing, so a < b holds.
    PeripheralInterval { n, a, b }
}

/// The outer interval of S: among peripheral intervals containing S of
/// minimum weight-set size, the minimizer of |a+b-n|, tie-broken toward
/// a > n-b. Conventions: outint(empty) = J_{n,-1,n+1} and
/// outint(full) = J_{n, floor(n/2), floor(n/2)+1}.
pub fn outer_interval(s: &SymmetricSet) -> PeripheralInterval {
    let n = s.n;
    if s.is_empty() {
        return PeripheralInterval { n, a: -1, b: n as i64 + 1 };
    }
    if s.is_full() {
        return PeripheralInterval { n, a: (n / 2) as i64, b: (n / 2) as i64 + 1 };
    }
    // Containing intervals of minimal size stretch (a, b) tightly across a
    // gap of the extended weight sequence -1, w_1, ..., w_m, n+1.
    let mut ext: Vec<i64> = Vec::with_capacity(s.weights.len() + 2);
    ext.push(-1);
    ext.extend(s.weights.iter().map(|&w| w as i64));
    ext.push(n as i64 + 1);
    let mut candidates: Vec<PeripheralInterval> = Vec::new();
    for pair in ext.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if a > n as i64 - 1 || b < 1 || a >= b {
            continue;
        }
        candidates.push(PeripheralInterval { n, a, b });
    }
    let max_gap = candidates.iter().map(|j| j.b - j.a).max().expect("proper set has a gap");
    let mut best: Vec<PeripheralInterval> =
        candidates.into_iter().filter(|j| j.b - j.a == max_gap).collect();
    let min_skew = best.iter().map(|j| j.lambda_skew()).min().expect("nonempty");
    best.retain(|j| j.lambda_skew() == min_skew);
    if best.len() == 1 {
        return best[0];
    }
    // Exactly a mirror pair remains; take the representative with a > n-b.
    *best
        .iter()
        .find(|j| j.a > j.n as i64 - j.b)
        .expect("mirror pair has a representative with a > n-b")
}

/// inn_n(S) = (min{a, n-b} + 1) + |W_n(S) \ W_{n, min{a,n-b}+1}| with
/// (a, b) the inner interval.
pub fn inn_measure(s: &SymmetricSet) -> usize {
    let j = inner_interval(s);
    let m = j.a.min(s.n as i64 - j.b) + 1;
    debug_assert!(m >= 0);
    let window = canonical_weight_window(s.n, m as usize).expect("m <= ceil(n/2)");
    let extra = s.weights.iter().filter(|&&w| !window.contains_weight(w)).count();
    m as usize + extra
}

/// out_n(S) = a + n - b + 1 with (a, b) the outer interval.
pub fn out_measure(s: &SymmetricSet) -> usize {
    let j = outer_interval(s);
    let v = j.a + s.n as i64 - j.b + 1;
    debug_assert!(v >= 0);
    v as usize
}

/// Witness returned with the index complexity of a symmetric set: a point p
/// and coordinate set I (1-based) separating p from the rest of S.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexWitness {
    pub point: Vec<u8>,
    pub coords: Vec<usize>,
}

/// Index complexity of a nonempty symmetric set: r_n(S) = out_n(S), together
/// with the explicit witness (1^a 0^{n-a}, [1, a+n-b+1]) when a >= n-b, and
/// (1^b 0^{n-b}, [b-a, n]) otherwise.
pub fn index_complexity_symmetric(s: &SymmetricSet) -> Result<(usize, IndexWitness)> {
    if s.is_empty() {
        return Err(Error::domain("index complexity of the empty set is undefined"));
    }
    let j = outer_interval(s);
    let n = s.n as i64;
    let r = (j.a + n - j.b + 1) as usize;
    let (p_ones, coords) = if j.a >= n - j.b {
        (j.a, (1..=(j.a + n - j.b + 1)).map(|i| i as usize).collect::<Vec<_>>())
    } else {
        (j.b, ((j.b - j.a)..=n).map(|i| i as usize).collect::<Vec<_>>())
    };
    let point: Vec<u8> = (1..=n).map(|i| u8::from(i <= p_ones)).collect();
    Ok((r, IndexWitness { point, coords }))
}

/// Exact index complexity of an arbitrary nonempty point set by exhaustive
/// search, minimal first: subset sizes ascend, ties broken by
/// lexicographically smallest coordinate set, then smallest point.
pub fn index_complexity_bruteforce(s: &PointSet) -> Result<(usize, IndexWitness)> {
    if s.is_empty() {
        return Err(Error::domain("index complexity of the empty set is undefined"));
    }
    let n = s.n;
    for size in 0..=n {
        for coords in subsets_of_size(n, size) {
            for u in &s.points {
                let separated = s
                    .points
                    .iter()
                    .filter(|v| *v != u)
                    .all(|v| coords.iter().any(|&i| v[i - 1] != u[i - 1]));
                if separated {
                    return Ok((size, IndexWitness { point: u.clone(), coords }));
                }
            }
        }
    }
    unreachable!("the full coordinate set always separates a point of a duplicate-free set")
}

/// All size-k subsets of [1, n] in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}

/// sep(p, I0, I1) = J_{n, |I1|-1, n-|I0|+1}: the maximal symmetric set whose
/// every point differs from p somewhere on I0 u I1. I0 must consist of
/// zero-coordinates of p and I1 of one-coordinates (1-based).
pub fn separation(n: usize, p: &[u8], i0: &[usize], i1: &[usize]) -> Result<PeripheralInterval> {
    if p.len() != n {
        return Err(Error::domain("point length does not match dimension"));
    }
    let check = |coords: &[usize], expect: u8| -> Result<()> {
        for &i in coords {
            if i < 1 || i > n {
                return Err(Error::domain(format!("coordinate {i} out of [1,{n}]")));
            }
            if p[i - 1] != expect {
                return Err(Error::domain(format!(
                    "coordinate {i} has p={} but was listed for value {expect}",
                    p[i - 1]
                )));
            }
        }
        Ok(())
    };
    check(i0, 0)?;
    check(i1, 1)?;
    let i0: BTreeSet<usize> = i0.iter().copied().collect();
    let i1: BTreeSet<usize> = i1.iter().copied().collect();
    PeripheralInterval::new(n, i1.len() as i64 - 1, n as i64 - i0.len() as i64 + 1)
}

/// Image of S under x -> (1-x_1, ..., 1-x_n): weights reflect to n - w.
pub fn complement_transform(s: &SymmetricSet) -> SymmetricSet {
    let weights: BTreeSet<usize> = s.weights.iter().map(|&w| s.n - w).collect();
    SymmetricSet { n: s.n, weights: weights.into_iter().collect() }
}

/// All 2^(n+1) symmetric sets of {0,1}^n, ordered by weight-set bitmask.
pub fn all_symmetric_sets(n: usize) -> Vec<SymmetricSet> {
    (0u64..(1 << (n + 1)))
        .map(|mask| {
            let weights = (0..=n).filter(|w| (mask >> w) & 1 == 1).collect();
            SymmetricSet { n, weights }
        })
        .collect()
}
