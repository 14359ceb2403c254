use thiserror::Error;

use crate::poly::GaussPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("root iteration did not converge for factor {factor}")]
    RootsNotConverged { factor: GaussPoly },

    #[error("roots {a} and {b} are closer than the separation tolerance {tol:e}")]
    RootsTooClose { a: String, b: String, tol: f64 },

    #[error("divisor point at the origin must be recorded through ord_at_zero")]
    DivisorPointAtOrigin,

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("row {row} has length {found}, expected {expected}")]
    RaggedRows { row: usize, found: usize, expected: usize },

    #[error("invalid multi-index {elements:?} for n = {n}")]
    InvalidMultiIndex { elements: Vec<usize>, n: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("multi-indices {left:?} and {right:?} are at distance {distance}, expected 1")]
    NotAdjacent {
        left: Vec<usize>,
        right: Vec<usize>,
        distance: usize,
    },

    #[error("level d = {d} out of range {min}..={max}")]
    LevelOutOfRange { d: usize, min: usize, max: usize },

    #[error("all coordinates of the curve are zero")]
    ZeroCurve,

    #[error("the curve is constant")]
    ConstantCurve,

    #[error("{0}")]
    Degenerate(String),

    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("no (n+1)-tuple of the hyperplanes is in general position")]
    NoGeneralPositionTuple,

    #[error("the hyperplanes have a common point (their forms do not span the dual space)")]
    CommonPoint,

    #[error("pair collection is empty")]
    EmptyCollection,

    #[error("pair collection is not balanced: incidence counts {0:?}")]
    Unbalanced(Vec<usize>),

    #[error("invalid pair collection: {0}")]
    InvalidPairs(String),

    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("configuration line {line}, column {column}: {message}")]
    ConfigAt {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
