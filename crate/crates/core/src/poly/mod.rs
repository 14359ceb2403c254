//! Exact polynomial arithmetic over the Gaussian rationals, with a numeric
//! side for evaluation and root location.

mod gauss_poly;
mod parse;
mod rational;
mod roots;

pub use gauss_poly::{ComplexPoly, GaussPoly};
pub use parse::{parse_poly, parse_scalar};
pub use rational::GaussRational;
pub use roots::{Divisor, ROOT_RESIDUAL_TOL, ROOT_SEPARATION_TOL};

/// Binary operations exposed through [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &GaussPoly, q: &GaussPoly, op: PolyOp) -> GaussPoly {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    }
}
