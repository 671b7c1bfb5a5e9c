//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed edge-list input.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Degree sequence cannot be realized by a simple graph. `k` is the
    /// index of the first violated Erdos-Gallai inequality (1-based over
    /// the sequence sorted in non-increasing order); `k = 0` means the
    /// degree sum is odd.
    #[error("degree sequence is not graphical (Erdos-Gallai inequality {k} fails)")]
    NonGraphical { k: usize },

    /// Edge probability outside `[0, 1]`.
    #[error("probability {p} is outside [0, 1]")]
    InvalidProbability { p: String },

    /// The vertex-form Bartholdi prefactor `1 - (1-u)^2 t^2` vanished
    /// while its exponent `m - n` is negative.
    #[error("prefactor 1 - (1-u)^2 t^2 vanishes while its exponent {exponent} is negative")]
    PrefactorPole { exponent: i64 },

    /// A brute-force computation was asked to exceed its configured bound.
    #[error("{what} exceeds the brute-force bound ({limit})")]
    BoundExceeded { what: String, limit: usize },

    /// Coefficient index outside `0..=2m`.
    #[error("coefficient index {k} is out of range 0..={max}")]
    IndexOutOfRange { k: usize, max: usize },

    #[error("{0}")]
    InvalidArgument(String),

    /// Two pipelines that must agree produced different coefficients.
    #[error("pipelines disagree at u^{power}: {lhs} != {rhs}")]
    PipelineDisagreement {
        power: usize,
        lhs: String,
        rhs: String,
    },
}
