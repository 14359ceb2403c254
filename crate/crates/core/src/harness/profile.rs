use num_complex::Complex64;
use rayon::prelude::*;

use crate::curve::CurveLift;
use crate::error::{Error, Result};
use crate::exterior::euclidean_norm;
use crate::nevanlinna::{
    circle_integral_vec, counting, find_breakpoints, CurveNumerics, QuadratureOptions, TupleForms,
};
use crate::poly::Divisor;

use super::combinatorics::distance_one_collection;
use super::hyperplanes::HyperplaneConfig;

fn dot(f: &[Complex64], v: &[Complex64]) -> Complex64 {
    f.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Pointwise integrands of the two-row inequality for a curve `y` with
/// forms `L_k` on its ambient space and pairs `{a, b}` of form indices.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TwoRowTerms {
    /// Mean of `λ_{L_k}(y)`.
    pub m1: f64,
    /// Mean over pairs of `λ_{L_a ∧ L_b}(y ∧ y′)`.
    pub mc: f64,
    pub log_y: f64,
    pub log_yy: f64,
}

impl TwoRowTerms {
    pub fn lhs(&self) -> f64 {
        2.0 * self.m1 - self.mc
    }

    pub fn rhs(&self) -> f64 {
        2.0 * self.log_y - self.log_yy
    }
}

/// `(L_a ∧ L_b)(y ∧ y′)` is taken as the 2×2 determinant
/// `L_a(y)L_b(y′) − L_b(y)L_a(y′)`, and `|y ∧ y′|` from the pairwise minors.
pub fn two_row_terms(
    forms: &[Vec<Complex64>],
    pairs: &[(usize, usize)],
    y: &[Complex64],
    dy: &[Complex64],
) -> TwoRowTerms {
    let ly: Vec<Complex64> = forms.iter().map(|f| dot(f, y)).collect();
    let ldy: Vec<Complex64> = forms.iter().map(|f| dot(f, dy)).collect();
    let norm_y = euclidean_norm(y);
    let mut wedge_sq = 0.0;
    for a in 0..y.len() {
        for b in a + 1..y.len() {
            wedge_sq += (y[a] * dy[b] - y[b] * dy[a]).norm_sqr();
        }
    }
    let norm_yy = wedge_sq.sqrt();
    let m1 = ly.iter().map(|v| -(v.norm() / norm_y).ln()).sum::<f64>() / ly.len() as f64;
    let mc = pairs
        .iter()
        .map(|&(a, b)| -((ly[a] * ldy[b] - ly[b] * ldy[a]).norm() / norm_yy).ln())
        .sum::<f64>()
        / pairs.len() as f64;
    TwoRowTerms {
        m1,
        mc,
        log_y: norm_y.ln(),
        log_yy: norm_yy.ln(),
    }
}

/// All circle averages of one curve and configuration at one radius.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialProfile {
    pub r: f64,
    /// `T̄_{d,x}(r)` for `d = 0..=n+1`.
    pub t_bar: Vec<f64>,
    /// `N_{d,x}(r)`, exact from the content divisors.
    pub n_level: Vec<f64>,
    /// `m_{d,f}(𝐋, r)` for `d = 0..=n+1`.
    pub m: Vec<f64>,
    /// `∫ max_J Σ_{i∈J} λ_{H_i}(f) dθ/2π`.
    pub cartan_lhs: f64,
    /// `∫ max_J μ_J(f′) dθ/2π`.
    pub mu_max: f64,
    /// Two-row terms on `y = X^d` for `d = 1..=n` (index `d − 1`).
    pub route: Vec<TwoRowTerms>,
    pub nodes: usize,
    pub converged: bool,
}

impl RadialProfile {
    pub fn n(&self) -> usize {
        self.t_bar.len() - 2
    }

    /// `T_{d,f}(r)`.
    pub fn t(&self, d: usize) -> f64 {
        self.t_bar[d] - self.n_level[d]
    }

    /// Counting function of the Wronskian's zeros.
    pub fn n_w(&self) -> f64 {
        self.n_level[self.n() + 1]
    }

    /// Counting function of the ramification divisor.
    pub fn n_ram(&self) -> f64 {
        self.n_level[2]
    }
}

/// Evaluates [`RadialProfile`]s for a nondegenerate curve and a configuration.
#[derive(Clone, Debug)]
pub struct Evaluator {
    n: usize,
    curve: CurveNumerics,
    forms: TupleForms,
    route_pairs: Vec<Vec<(usize, usize)>>,
    divisors: Vec<Divisor>,
}

impl Evaluator {
    pub fn new(x: &CurveLift, config: &HyperplaneConfig) -> Result<Self> {
        if x.n() == 0 {
            return Err(Error::ConstantCurve);
        }
        config.check_dimension(x.n())?;
        let curve = CurveNumerics::new(x)?;
        let n = x.n();
        let forms = TupleForms::new(config.forms(), config.tuples(), n);
        let route_pairs = (1..=n)
            .map(|d| distance_one_collection(n, d).map(|c| c.rank_pairs()))
            .collect::<Result<_>>()?;
        let divisors = x
            .family()
            .levels()
            .iter()
            .map(|level| level.content()?.roots())
            .collect::<Result<_>>()?;
        Ok(Self {
            n,
            curve,
            forms,
            route_pairs,
            divisors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn divisors(&self) -> &[Divisor] {
        &self.divisors
    }

    fn dim(&self) -> usize {
        2 * (self.n + 2) + 2 + 4 * self.n
    }

    /// Which tuple is selected and which charts `μ` uses: the integrand is
    /// smooth wherever this is locally constant.
    fn regime(&self, z: Complex64) -> (usize, Vec<usize>, usize) {
        let x = self.curve.lift(z);
        let dx = self.curve.lift_prime(z);
        let sel = self.forms.select(&self.forms.lambdas(&x)).tuple;
        let mut charts = Vec::with_capacity(self.forms.tuples().len());
        let mut best = (f64::NEG_INFINITY, 0);
        for t in 0..self.forms.tuples().len() {
            let mu = self.forms.mu(t, &x, &dx);
            charts.push(mu.chart);
            if mu.value > best.0 {
                best = (mu.value, t);
            }
        }
        (sel, charts, best.1)
    }

    fn integrand(&self, z: Complex64) -> Vec<f64> {
        let n = self.n;
        let x = self.curve.lift(z);
        let dx = self.curve.lift_prime(z);
        let sel = self.forms.select(&self.forms.lambdas(&x));
        let mut out = Vec::with_capacity(self.dim());
        for d in 0..=n + 1 {
            let v = self.curve.level(d, z);
            out.push(0.5 * v.iter().map(Complex64::norm_sqr).sum::<f64>().ln());
        }
        for d in 0..=n + 1 {
            out.push(self.forms.mean_weil(sel.tuple, d, &self.curve.reduced(d, z)));
        }
        out.push(sel.value);
        let mu_max = (0..self.forms.tuples().len())
            .map(|t| self.forms.mu(t, &x, &dx).value)
            .fold(f64::NEG_INFINITY, f64::max);
        out.push(mu_max);
        for d in 1..=n {
            let terms = two_row_terms(
                self.forms.compounds(sel.tuple, d),
                &self.route_pairs[d - 1],
                &self.curve.level(d, z),
                &self.curve.level_derivative(d, z),
            );
            out.extend([terms.m1, terms.mc, terms.log_y, terms.log_yy]);
        }
        out
    }

    pub fn profile(&self, r: f64, opts: &QuadratureOptions) -> Result<RadialProfile> {
        crate::nevanlinna::check_radius(r)?;
        let n = self.n;
        let breakpoints = find_breakpoints(|t| self.regime(Complex64::from_polar(r, t)), opts.scan_nodes);
        let q = circle_integral_vec(
            |t| self.integrand(Complex64::from_polar(r, t)),
            self.dim(),
            &breakpoints,
            opts,
        );
        let v = &q.values;
        let route = (0..n)
            .map(|k| {
                let b = 2 * (n + 2) + 2 + 4 * k;
                TwoRowTerms {
                    m1: v[b],
                    mc: v[b + 1],
                    log_y: v[b + 2],
                    log_yy: v[b + 3],
                }
            })
            .collect();
        let n_level = self
            .divisors
            .iter()
            .map(|div| counting(div, r))
            .collect::<Result<_>>()?;
        Ok(RadialProfile {
            r,
            t_bar: v[..n + 2].to_vec(),
            n_level,
            m: v[n + 2..2 * (n + 2)].to_vec(),
            cartan_lhs: v[2 * (n + 2)],
            mu_max: v[2 * (n + 2) + 1],
            route,
            nodes: q.nodes,
            converged: q.converged,
        })
    }

    /// Profiles at every radius, evaluated in parallel; output follows `radii`.
    pub fn profiles(&self, radii: &[f64], opts: &QuadratureOptions) -> Result<Vec<RadialProfile>> {
        radii.par_iter().map(|&r| self.profile(r, opts)).collect()
    }
}
