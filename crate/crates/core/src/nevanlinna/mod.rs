//! Nevanlinna functionals of polynomial curves: counting functions, circle
//! averages, heights, Weil and proximity functions, and the logarithmic Weil
//! function `μ`.

mod counting;
mod functionals;
mod numerics;
mod quadrature;
mod weil;

pub use counting::counting;
pub use functionals::{height_bar, height_t, proximity_hyperplane, proximity_m};
pub use numerics::{CurveNumerics, TupleForms};
pub use quadrature::{circle_integral, circle_integral_vec, find_breakpoints, Quadrature};
pub use weil::{
    mu, mu_values, pointwise_logderiv_check, select_tuple, weil, weil_form, LogDerivCheck, MuValue, TupleSelector,
};

/// Node schedule and stopping rule for circle averages.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureOptions {
    /// Stop once successive refinements change every component by less.
    pub tol: f64,
    pub initial_nodes: usize,
    pub max_nodes: usize,
    /// Nodes used to locate discontinuities of piecewise integrands.
    pub scan_nodes: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            tol: 1e-6,
            initial_nodes: 256,
            max_nodes: 1 << 20,
            scan_nodes: 2048,
        }
    }
}

impl QuadratureOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }
}

/// A functional evaluated at one radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialValue {
    pub r: f64,
    pub value: f64,
    pub quadrature_nodes: usize,
    pub converged: bool,
}

impl RadialValue {
    /// A value known in closed form (no quadrature involved).
    pub fn exact(r: f64, value: f64) -> Self {
        Self {
            r,
            value,
            quadrature_nodes: 0,
            converged: true,
        }
    }
}

pub(crate) fn check_radius(r: f64) -> crate::Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::NonPositiveRadius(r))
    }
}
