//! Exact linear algebra: arbitrary-precision integer matrices, dense
//! integer polynomials, and rational matrices.
//!
//! Every operation here is exact; intermediate divisions (Bareiss,
//! Faddeev-LeVerrier) assert divisibility instead of rounding.

mod matrix;
mod poly;

pub use matrix::{IntMatrix, RationalMatrix};
pub use poly::IntPoly;

pub use num_rational::BigRational;
