//! # nevlab
//!
//! Exact and numerical machinery for the value distribution theory of
//! holomorphic curves `f: ℂ → ℙⁿ` given by polynomial lifts.
//!
//! The crate is layered:
//!
//! * [`poly`]: polynomials over ℚ(i) (exact arithmetic, gcd, squarefree
//!   decomposition, roots with exact multiplicities).
//! * [`exterior`]: multi-indices, Plücker coordinates of row matrices, the
//!   determinant pairing between wedge forms and wedge vectors, and the
//!   two-row determinant identity for adjacent multi-indices.
//! * [`curve`]: lifts, associated curves `X^d = x ∧ x′ ∧ … ∧ x^(d−1)`, the
//!   Wronskian and the ramification divisor.
//! * [`nevanlinna`]: counting functions, circle quadrature, heights, Weil
//!   functions, proximity functions and the logarithmic Weil function `μ`.
//! * [`harness`]: hyperplane configurations, balanced pair collections and
//!   evaluators for both sides of the Second Main Theorem chain.
//! * [`cli`]: config parsing, command dispatch and CSV output for the
//!   `nevlab` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod cli;
pub mod curve;
pub mod error;
pub mod exterior;
pub mod harness;
pub mod nevanlinna;
pub mod poly;

pub use curve::CurveLift;
pub use error::{Error, Result};
pub use poly::{Divisor, GaussPoly, GaussRational};
