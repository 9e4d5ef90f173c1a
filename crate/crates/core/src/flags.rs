//! Splitting types of flags of vector bundles on `ℙ¹`: admissible and
//! balanced sequence sets, the numeric stabilization inequalities, and two
//! combinatorial identities used in the degree bounds.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A flag shape `0 < i_1 < … < i_m < n`; `i_0 = 0` and `i_{m+1} = n` by
/// convention.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FlagShape {
    dims: Vec<u32>,
    n: u32,
}

impl FlagShape {
    pub fn new(dims: Vec<u32>, n: u32) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::ShapeMismatch("a flag shape needs at least one step".into()));
        }
        if dims[0] == 0 || dims.windows(2).any(|w| w[0] >= w[1]) || *dims.last().unwrap() >= n {
            return Err(Error::ShapeMismatch(format!("{dims:?} is not strictly increasing in (0, {n})")));
        }
        Ok(FlagShape { dims, n })
    }

    /// Shape with the smallest ambient dimension, `n = i_m + 1`; balanced
    /// sequences do not depend on `n`.
    pub fn minimal(dims: Vec<u32>) -> Result<Self> {
        let n = dims.last().copied().unwrap_or(0) + 1;
        Self::new(dims, n)
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.dims.len()
    }
}

/// Sequences `a_{k,·}` of lengths `i_k` with their degree vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AdmissibleSequenceSet {
    pub sequences: Vec<Vec<u64>>,
    pub degrees: Vec<u64>,
}

impl AdmissibleSequenceSet {
    /// Build from sequences, taking `d_k = Σ_j a_{k,j}`.
    pub fn from_sequences(sequences: Vec<Vec<u64>>) -> Self {
        let degrees = sequences.iter().map(|s| s.iter().sum()).collect();
        AdmissibleSequenceSet { sequences, degrees }
    }
}

/// Conditions (1)–(3): each sequence is nondecreasing, `a_{k+1,j} ≤ a_{k,j}`
/// for `j ≤ i_k`, and `Σ_j a_{k,j} = d_k`.
pub fn is_admissible(a: &AdmissibleSequenceSet, shape: &FlagShape) -> Result<bool> {
    if a.sequences.len() != shape.m() || a.degrees.len() != shape.m() {
        return Err(Error::ShapeMismatch(format!(
            "{} sequences and {} degrees for a shape with {} steps",
            a.sequences.len(),
            a.degrees.len(),
            shape.m()
        )));
    }
    for (s, i) in a.sequences.iter().zip(shape.dims()) {
        if s.len() != *i as usize {
            return Err(Error::ShapeMismatch(format!("sequence of length {} for i_k = {i}", s.len())));
        }
    }
    let nondecreasing = a.sequences.iter().all(|s| s.windows(2).all(|w| w[0] <= w[1]));
    let nested = a.sequences.windows(2).all(|w| w[0].iter().zip(&w[1]).all(|(x, y)| y <= x));
    let sums = a.sequences.iter().zip(&a.degrees).all(|(s, d)| s.iter().sum::<u64>() == *d);
    Ok(nondecreasing && nested && sums)
}

/// `Σ_k Σ_{l<p} (a_{k,p} - a_{k,l})`.
pub fn spread(a: &AdmissibleSequenceSet) -> i64 {
    a.sequences
        .iter()
        .map(|s| {
            let mut t = 0i64;
            for p in 0..s.len() {
                for l in 0..p {
                    t += s[p] as i64 - s[l] as i64;
                }
            }
            t
        })
        .sum()
}

/// `len` entries summing to `total`, as equal as possible, smaller entries
/// first: `⌈total/len⌉ - ε_j` with the `ε_j = 1` in the lowest positions.
fn even_fill(total: u64, len: u64) -> Vec<u64> {
    let q = total.div_ceil(len);
    let lowered = q * len - total;
    (0..len).map(|j| if j < lowered { q - 1 } else { q }).collect()
}

/// The iterative construction of the balanced admissible set.
///
/// Level 1 is the even fill of `d_1` into `i_1` slots. For `k > 1`, let `r`
/// be the largest index with `a_{k-1,r} ≤ d_k/i_k`; while some larger index
/// `R ≤ i_{k-1}` has `a_{k-1,R} ≤ (d_k - Σ_{j≤r} a_{k-1,j})/(i_k - r)`, move
/// `r` to the largest such `R`. Then `a_{k,j} = a_{k-1,j}` for `j ≤ r`, and
/// the remaining `i_k - r` slots get the even fill of what is left.
pub fn balanced_construct(shape: &FlagShape, d: &[u64]) -> Result<AdmissibleSequenceSet> {
    if d.len() != shape.m() {
        return Err(Error::ShapeMismatch(format!("{} degrees for a shape with {} steps", d.len(), shape.m())));
    }
    let mut sequences: Vec<Vec<u64>> = Vec::with_capacity(d.len());
    for (k, (&ik, &dk)) in shape.dims().iter().zip(d).enumerate() {
        let ik = ik as u64;
        let prev: &[u64] = if k == 0 { &[] } else { &sequences[k - 1] };
        // largest r with a_{k-1,r} ≤ d_k / i_k (a prefix, as prev is sorted)
        let mut r = prev.iter().take_while(|&&a| a * ik <= dk).count();
        for _ in 0..ik {
            let rem = dk - prev[..r].iter().sum::<u64>();
            let slots = ik - r as u64;
            let next = prev.iter().enumerate().skip(r).filter(|(_, &a)| a * slots <= rem).map(|(j, _)| j + 1).max();
            match next {
                Some(big_r) => r = big_r,
                None => break,
            }
        }
        let rem = dk - prev[..r].iter().sum::<u64>();
        let mut seq = prev[..r].to_vec();
        seq.extend(even_fill(rem, ik - r as u64));
        sequences.push(seq);
    }
    Ok(AdmissibleSequenceSet { sequences, degrees: d.to_vec() })
}

/// Every admissible set for `(shape, d)`, in lexicographic order.
pub fn enumerate_admissible(shape: &FlagShape, d: &[u64], bound: u64) -> Result<Vec<AdmissibleSequenceSet>> {
    if d.len() != shape.m() {
        return Err(Error::ShapeMismatch(format!("{} degrees for a shape with {} steps", d.len(), shape.m())));
    }
    let total: u64 = d.iter().sum();
    if total > bound {
        return Err(Error::BoundExceeded(format!("total degree {total} exceeds the enumeration bound {bound}")));
    }
    let mut out = Vec::new();
    let mut current: Vec<Vec<u64>> = Vec::new();
    levels(shape.dims(), d, &mut current, &mut out);
    Ok(out)
}

fn levels(dims: &[u32], d: &[u64], current: &mut Vec<Vec<u64>>, out: &mut Vec<AdmissibleSequenceSet>) {
    let k = current.len();
    if k == dims.len() {
        out.push(AdmissibleSequenceSet { sequences: current.clone(), degrees: d.to_vec() });
        return;
    }
    let caps: Vec<u64> = current.last().cloned().unwrap_or_default();
    let mut seqs = Vec::new();
    sequences(dims[k] as usize, d[k], &caps, &mut Vec::new(), &mut seqs);
    for s in seqs {
        current.push(s);
        levels(dims, d, current, out);
        current.pop();
    }
}

/// Nondecreasing sequences of `len` entries summing to `total` with
/// `s_j ≤ caps_j` wherever a cap exists.
fn sequences(len: usize, total: u64, caps: &[u64], prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let pos = prefix.len();
    let used: u64 = prefix.iter().sum();
    if pos == len {
        if used == total {
            out.push(prefix.clone());
        }
        return;
    }
    let lo = prefix.last().copied().unwrap_or(0);
    let left = total - used;
    let slots = (len - pos) as u64;
    // every later entry is at least this one
    let mut hi = left / slots;
    if let Some(c) = caps.get(pos) {
        hi = hi.min(*c);
    }
    for x in lo..=hi {
        prefix.push(x);
        sequences(len, total, caps, prefix, out);
        prefix.pop();
    }
}

/// Exhaustive oracle: the unique spread minimizer among all admissible sets.
pub fn brute_force_balanced(shape: &FlagShape, d: &[u64], bound: u64) -> Result<AdmissibleSequenceSet> {
    let all = enumerate_admissible(shape, d, bound)?;
    let best = all.iter().map(spread).min().expect("an admissible set always exists");
    let mut minimizers: Vec<_> = all.into_iter().filter(|a| spread(a) == best).collect();
    if minimizers.len() != 1 {
        return Err(Error::NonUniqueMinimizer { count: minimizers.len(), spread: best });
    }
    Ok(minimizers.pop().unwrap())
}

/// `⌈a/b⌉` for `b > 0`.
fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// `∀ p < k: d_k ≥ i_k ⌈(d_p - d_{p-1})/(i_p - i_{p-1})⌉` (1-based `k`,
/// `1 < k ≤ m`, with `d_0 = i_0 = 0`). When it holds, the balanced set
/// carries level `k-1` over: `a_{k,j} = a_{k-1,j}` for `j ≤ i_{k-1}`.
pub fn splitting_predicate(shape: &FlagShape, d: &[u64], k: usize) -> Result<bool> {
    if d.len() != shape.m() {
        return Err(Error::ShapeMismatch(format!("{} degrees for a shape with {} steps", d.len(), shape.m())));
    }
    if k < 2 || k > shape.m() {
        return Err(Error::InvalidIndex { i: k as i64, j: 0, n: shape.m() as u32 });
    }
    let dd = |p: usize| if p == 0 { 0 } else { d[p - 1] as i64 };
    let ii = |p: usize| if p == 0 { 0 } else { shape.dims()[p - 1] as i64 };
    Ok((1..k).all(|p| dd(k) >= ii(k) * ceil_div(dd(p) - dd(p - 1), ii(p) - ii(p - 1))))
}

/// Hypotheses of the correlator comparison theorem for forgetting step `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationInput {
    /// `n_1 < … < n_m < n`.
    pub dims: Vec<u32>,
    pub n: u32,
    /// `d_1, …, d_m`.
    pub degrees: Vec<u64>,
    /// 1-based step being forgotten.
    pub k: usize,
    /// Number of marked points.
    pub r: u64,
}

/// Conjunction of, with `d_0 = d_{m+1} = 0`, `n_0 = 0`, `n_{m+1} = n`:
///
/// * `∀ p < k: d_k ≥ n_k ⌈(d_p - d_{p-1})/(n_p - n_{p-1})⌉`;
/// * `d_{k-1} ≤ ⌊d_{k+1}/n_{k+1}⌋`;
/// * `d_k ≥ r(n_k - n_{k-1}) + d_{k-1} + (n_k - n_{k-1})(⌊(d_{k+1} - d_{k-1})/(n_{k+1} - n_{k-1})⌋ + 1)`.
pub fn theorem_conditions(s: &StabilizationInput) -> Result<bool> {
    let shape = FlagShape::new(s.dims.clone(), s.n)?;
    let m = shape.m();
    if s.degrees.len() != m {
        return Err(Error::ShapeMismatch(format!("{} degrees for a shape with {m} steps", s.degrees.len())));
    }
    if s.k < 1 || s.k > m {
        return Err(Error::ShapeMismatch(format!("step k = {} is not in 1..={m}", s.k)));
    }
    let dd = |p: usize| if p == 0 || p == m + 1 { 0 } else { s.degrees[p - 1] as i64 };
    let nn = |p: usize| match p {
        0 => 0,
        p if p == m + 1 => s.n as i64,
        p => s.dims[p - 1] as i64,
    };
    let k = s.k;
    let first = (1..k).all(|p| dd(k) >= nn(k) * ceil_div(dd(p) - dd(p - 1), nn(p) - nn(p - 1)));
    let second = dd(k - 1) <= dd(k + 1).div_euclid(nn(k + 1));
    let width = nn(k) - nn(k - 1);
    let third = dd(k)
        >= s.r as i64 * width + dd(k - 1) + width * ((dd(k + 1) - dd(k - 1)).div_euclid(nn(k + 1) - nn(k - 1)) + 1);
    Ok(first && second && third)
}

/// Sufficient condition for a Grassmannian `Gr(k,n)` over a point to be
/// stabilized in degree `d` with `r` marked points: `d ≥ rk` or `d ≥ r(n-k)`.
pub fn grassmannian_stabilized(k: u32, n: u32, d: u64, r: u64) -> Result<bool> {
    if k == 0 || k >= n {
        return Err(Error::ShapeMismatch(format!("Gr({k},{n}) needs 0 < k < n")));
    }
    Ok(d >= r * k as u64 || d >= r * (n - k) as u64)
}

/// Sufficient condition when the first space `V_{j_1}`, `j_1 < i_1`, is
/// forgotten: `d_1 ≥ j_1 (r + 1 + ⌊d_2/i_1⌋)`.
pub fn forget_first_stabilized(j1: u32, i1: u32, d1: u64, d2: u64, r: u64) -> Result<bool> {
    if j1 == 0 || j1 >= i1 {
        return Err(Error::ShapeMismatch(format!("need 0 < j_1 < i_1, got j_1 = {j1}, i_1 = {i1}")));
    }
    Ok(d1 >= j1 as u64 * (r + 1 + d2 / i1 as u64))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}

/// `Σ_{k+p=N, 0≤k≤n, 0≤p≤m} C(n,k) C(m,p)`; equals `C(n+m, N)`.
pub fn vandermonde_sum(n: u64, m: u64, big_n: u64) -> BigUint {
    (0..=big_n.min(n))
        .filter(|k| big_n - k <= m)
        .map(|k| binomial(n, k) * binomial(m, big_n - k))
        .sum()
}

/// `Σ_k C(n,k) (-1)^k k`, which vanishes for `n ≥ 2`.
pub fn alternating_weighted_binomial_sum(n: u64) -> num_bigint::BigInt {
    (0..=n)
        .map(|k| {
            let t = num_bigint::BigInt::from(binomial(n, k)) * k;
            if k % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// Cap on `d - d_0` and `δ - δ_0` for [`alternating_decomposition_sum`].
pub const DECOMPOSITION_CAP: u64 = 64;

/// `Σ (-1)^r` over all ordered decompositions
/// `(d, δ) = (d_0, δ_0) + (d_1, δ_1) + … + (d_r, δ_r)` with every tail part
/// in `ℕ² \ {(0,0)}`. Vanishes when `d_0 < d - 1` or `δ_0 < δ - 1`.
///
/// The tail decompositions of `(a,b)` are enumerated by their first part,
/// which gives the exact recursion `f(0,0) = 1`,
/// `f(a,b) = -Σ_{(x,y) ≠ 0} f(a-x, b-y)`.
pub fn alternating_decomposition_sum(d: u64, delta: u64, d0: u64, delta0: u64) -> Result<i64> {
    if d0 > d || delta0 > delta {
        return Ok(0);
    }
    let (a, b) = ((d - d0) as usize, (delta - delta0) as usize);
    if a as u64 > DECOMPOSITION_CAP || b as u64 > DECOMPOSITION_CAP {
        return Err(Error::BoundExceeded(format!("remainder ({a},{b}) exceeds the cap {DECOMPOSITION_CAP}")));
    }
    let mut f = vec![vec![0i64; b + 1]; a + 1];
    for x in 0..=a {
        for y in 0..=b {
            if x == 0 && y == 0 {
                f[0][0] = 1;
                continue;
            }
            let mut s = 0i64;
            for px in 0..=x {
                for py in 0..=y {
                    if px == 0 && py == 0 {
                        continue;
                    }
                    s += f[x - px][y - py];
                }
            }
            f[x][y] = -s;
        }
    }
    Ok(f[a][b])
}
