//! The Schubert basis of `K(Fl(1,n-1))`.
//!
//! A class `O_{i,j}` is indexed by the minimal coset representative
//! `w_{i,j}` sending `1 ↦ i` and `n ↦ j`. Internally classes are addressed by
//! a 0-based linear index whose order is the lexicographic order on `(i,j)`;
//! everything user-facing keeps the 1-based pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Check that the ambient dimension gives a nondegenerate incidence variety.
pub fn check_rank(n: u32) -> Result<()> {
    if n < 3 {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

/// Number of Schubert classes, `n(n-1)`.
pub fn basis_size(n: u32) -> usize {
    (n as usize) * (n as usize - 1)
}

/// A basis element `O_{i,j}`, `1 ≤ i,j ≤ n`, `i ≠ j`.
///
/// The derived ordering is lexicographic in `(i,j)`, which coincides with the
/// linear order of [`linear_index`]; sorted maps keyed by this type therefore
/// iterate in basis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SchubertIndex {
    pub i: u32,
    pub j: u32,
}

impl SchubertIndex {
    /// Build a validated index.
    pub fn new(i: u32, j: u32, n: u32) -> Result<Self> {
        check_rank(n)?;
        let w = SchubertIndex { i, j };
        if w.is_valid(n) {
            Ok(w)
        } else {
            Err(Error::InvalidIndex { i: i as i64, j: j as i64, n })
        }
    }

    /// Interpret an arbitrary integer pair under the zero-class convention:
    /// `O_{a,b}` is zero when `a < 1`, `b > n`, either entry is out of range,
    /// or `a = b`. Returns `None` for such pairs.
    pub fn from_signed(a: i64, b: i64, n: u32) -> Option<Self> {
        let n = n as i64;
        if a < 1 || b < 1 || a > n || b > n || a == b {
            None
        } else {
            Some(SchubertIndex { i: a as u32, j: b as u32 })
        }
    }

    pub fn is_valid(&self, n: u32) -> bool {
        self.i >= 1 && self.j >= 1 && self.i <= n && self.j <= n && self.i != self.j
    }

    /// Ensure validity for rank `n`.
    pub fn check(&self, n: u32) -> Result<()> {
        check_rank(n)?;
        if self.is_valid(n) {
            Ok(())
        } else {
            Err(Error::InvalidIndex { i: self.i as i64, j: self.j as i64, n })
        }
    }

    /// The fundamental class `[O_X] = O_{n,1}`, the ring unit.
    pub fn unit(n: u32) -> Self {
        SchubertIndex { i: n, j: 1 }
    }

    /// The point class `O_{1,n}`.
    pub fn point(n: u32) -> Self {
        SchubertIndex { i: 1, j: n }
    }

    /// The divisor `h1 = X(w_{n-1,1})`.
    pub fn h1(n: u32) -> Self {
        SchubertIndex { i: n - 1, j: 1 }
    }

    /// The divisor `h2 = X(w_{n,2})`.
    pub fn h2(n: u32) -> Self {
        SchubertIndex { i: n, j: 2 }
    }
}

impl fmt::Display for SchubertIndex {
    /// Renders as `O_i,j`, the notation of the reference output files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O_{},{}", self.i, self.j)
    }
}

/// All `n(n-1)` basis elements in linear order.
pub fn enumerate_basis(n: u32) -> Result<Vec<SchubertIndex>> {
    check_rank(n)?;
    Ok((0..basis_size(n)).map(|k| from_linear_unchecked(k, n)).collect())
}

/// 0-based linear index: `t = (i-1)(n-1) + j - 1` if `j > i`, else
/// `(i-1)(n-1) + j`, and the result is `t - 1`.
pub fn linear_index(w: SchubertIndex, n: u32) -> Result<usize> {
    w.check(n)?;
    Ok(linear_index_unchecked(w, n))
}

pub(crate) fn linear_index_unchecked(w: SchubertIndex, n: u32) -> usize {
    let (i, j, n) = (w.i as usize, w.j as usize, n as usize);
    let t = if j > i { (i - 1) * (n - 1) + j - 1 } else { (i - 1) * (n - 1) + j };
    t - 1
}

/// Inverse of [`linear_index`].
pub fn from_linear(index: usize, n: u32) -> Result<SchubertIndex> {
    check_rank(n)?;
    if index >= basis_size(n) {
        return Err(Error::InvalidLinearIndex { index, n });
    }
    Ok(from_linear_unchecked(index, n))
}

/// With the 1-based `k = index + 1`: `i = ⌈k/(n-1)⌉`, and `j = k - (i-1)(n-1)`
/// when that is below `i`, otherwise one more.
fn from_linear_unchecked(index: usize, n: u32) -> SchubertIndex {
    let k = index + 1;
    let m = n as usize - 1;
    let i = k.div_ceil(m);
    let r = k - (i - 1) * m;
    let j = if r < i { r } else { r + 1 };
    SchubertIndex { i: i as u32, j: j as u32 }
}

/// Length of `w_{i,j}`, equal to `dim X(i,j)`: `i-1+n-j` if `i < j`,
/// `n+i-j-2` if `i > j`.
pub fn length(w: SchubertIndex, n: u32) -> u32 {
    if w.i < w.j {
        w.i - 1 + n - w.j
    } else {
        n + w.i - w.j - 2
    }
}

/// Dimension of the incidence variety, `2n - 3`.
pub fn dim(n: u32) -> u32 {
    2 * n - 3
}

/// Codimension `2n - 3 - ℓ(w)`; this is also `ℓ(w₀w)` for the longest
/// element `w₀`, which is how it enters the positivity sign rule.
pub fn codim(w: SchubertIndex, n: u32) -> u32 {
    dim(n) - length(w, n)
}

/// The duality involution `(i,j) ↦ (n-j+1, n-i+1)`; it exchanges `h1` and
/// `h2` and preserves length.
pub fn dual_index(w: SchubertIndex, n: u32) -> SchubertIndex {
    SchubertIndex { i: n + 1 - w.j, j: n + 1 - w.i }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank_rejected() {
        assert_eq!(enumerate_basis(2), Err(Error::InvalidRank(2)));
    }

    #[test]
    fn n3_order() {
        let b: Vec<(u32, u32)> = enumerate_basis(3).unwrap().iter().map(|w| (w.i, w.j)).collect();
        assert_eq!(b, vec![(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]);
    }

    #[test]
    fn equal_entries_rejected() {
        assert!(SchubertIndex::new(2, 2, 4).is_err());
        assert!(SchubertIndex::new(0, 2, 4).is_err());
        assert!(SchubertIndex::new(1, 5, 4).is_err());
    }

    #[test]
    fn display_matches_reference_output() {
        assert_eq!(SchubertIndex { i: 2, j: 3 }.to_string(), "O_2,3");
    }
}
