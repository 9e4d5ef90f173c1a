//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong when a caller hands the library malformed
/// input, or when an exhaustive oracle finds something it cannot accept.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The incidence variety degenerates for `n < 3`.
    #[error("invalid rank n = {0}: the incidence variety Fl(1,n-1) needs n >= 3")]
    InvalidRank(u32),

    /// A pair `(i,j)` that does not name a Schubert class of `Fl(1,n-1)`.
    #[error("invalid Schubert index ({i},{j}) for n = {n}")]
    InvalidIndex { i: i64, j: i64, n: u32 },

    /// A 0-based linear index outside `[0, n(n-1))`.
    #[error("linear index {index} out of range for n = {n}")]
    InvalidLinearIndex { index: usize, n: u32 },

    /// A multiplication table was queried with classes of another rank.
    #[error("table was built for n = {table} but n = {requested} was requested")]
    RankMismatch { table: u32, requested: u32 },

    /// A curve degree outside the families with a known closed form.
    #[error("unsupported degree ({d1},{d2}): {reason}")]
    UnsupportedDegree { d1: u32, d2: u32, reason: String },

    /// A translation map landed on a pair with equal components.
    #[error("degenerate target ({0},{0}) has no Schubert class")]
    DegenerateTarget(u32),

    /// Sequence lengths, flag shapes or degree vectors do not fit together.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The exhaustive search found several spread minimizers.
    #[error("balanced admissible set is not unique: {count} minimizers of spread {spread}")]
    NonUniqueMinimizer { count: usize, spread: i64 },

    /// An enumeration guard was hit.
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    /// Malformed serialized data (golden files, CLI payloads).
    #[error("parse error: {0}")]
    Parse(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
