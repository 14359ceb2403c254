use num_complex::Complex64;

use crate::curve::CurveLift;
use crate::error::{Error, Result};
use crate::exterior::{maximal_minors, MultiIndex};
use crate::poly::{ComplexPoly, GaussPoly, GaussRational};

use super::weil::{mu_values, select_tuple, weil, MuValue, TupleSelector};

fn to_float(coords: &[GaussPoly]) -> Vec<ComplexPoly> {
    coords.iter().map(GaussPoly::to_complex).collect()
}

fn eval_all(polys: &[ComplexPoly], z: Complex64) -> Vec<Complex64> {
    polys.iter().map(|p| p.eval(z)).collect()
}

/// Float images of a nondegenerate lift and all of its associated curves,
/// ready for evaluation on circles.
#[derive(Clone, Debug)]
pub struct CurveNumerics {
    n: usize,
    lift_prime: Vec<ComplexPoly>,
    levels: Vec<Vec<ComplexPoly>>,
    reduced: Vec<Vec<ComplexPoly>>,
    derivatives: Vec<Vec<ComplexPoly>>,
}

impl CurveNumerics {
    /// Requires a nonzero Wronskian, so that every `X^d` is nonzero.
    pub fn new(x: &CurveLift) -> Result<Self> {
        x.ensure_nondegenerate()?;
        Self::through_level(x, x.n() + 1)
    }

    /// Only the levels `0..=top`; requires `X^top ≢ 0`.
    pub fn through_level(x: &CurveLift, top: usize) -> Result<Self> {
        let mut levels = Vec::new();
        let mut reduced = Vec::new();
        let mut derivatives = Vec::new();
        for d in 0..=top {
            let level = x.associated(d)?;
            if level.is_zero() {
                return Err(if d == 2 {
                    Error::ConstantCurve
                } else {
                    Error::Degenerate(format!("associated curve X^{d} vanishes identically"))
                });
            }
            levels.push(to_float(level.coords()));
            reduced.push(to_float(level.reduced()?.0.coords()));
            derivatives.push(to_float(level.derivative().coords()));
        }
        let lift_prime = to_float(&x.derivative_rows(2)[1]);
        Ok(Self {
            n: x.n(),
            lift_prime,
            levels,
            reduced,
            derivatives,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `X^d(z)`.
    pub fn level(&self, d: usize, z: Complex64) -> Vec<Complex64> {
        eval_all(&self.levels[d], z)
    }

    /// `F^d(z)`: `X^d` with the common factor of its coordinates removed.
    pub fn reduced(&self, d: usize, z: Complex64) -> Vec<Complex64> {
        eval_all(&self.reduced[d], z)
    }

    /// `(X^d)′(z)`, the Leibniz partner for `1 ≤ d ≤ n`.
    pub fn level_derivative(&self, d: usize, z: Complex64) -> Vec<Complex64> {
        eval_all(&self.derivatives[d], z)
    }

    pub fn lift(&self, z: Complex64) -> Vec<Complex64> {
        self.level(1, z)
    }

    pub fn lift_prime(&self, z: Complex64) -> Vec<Complex64> {
        eval_all(&self.lift_prime, z)
    }
}

/// Float images of `q` hyperplane forms and, for each admissible tuple, the
/// Plücker coordinates of every compound form `L_{t,I}`.
#[derive(Clone, Debug)]
pub struct TupleForms {
    n: usize,
    forms: Vec<Vec<Complex64>>,
    tuples: Vec<Vec<usize>>,
    /// `compounds[t][d][rank(I)]`.
    compounds: Vec<Vec<Vec<Vec<Complex64>>>>,
}

impl TupleForms {
    pub fn new(forms: &[Vec<GaussRational>], tuples: &[Vec<usize>], n: usize) -> Self {
        let compounds = tuples
            .iter()
            .map(|t| {
                (0..=n + 1)
                    .map(|d| {
                        MultiIndex::all(n, d)
                            .iter()
                            .map(|idx| {
                                let rows: Vec<Vec<GaussRational>> =
                                    idx.elements().iter().map(|&i| forms[t[i]].clone()).collect();
                                maximal_minors(&rows, n + 1)
                                    .expect("forms have length n+1")
                                    .iter()
                                    .map(GaussRational::to_complex)
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self {
            n,
            forms: forms
                .iter()
                .map(|f| f.iter().map(GaussRational::to_complex).collect())
                .collect(),
            tuples: tuples.to_vec(),
            compounds,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Plücker coordinates of `L_{t,I}` for all `#I = d`, lexicographic in `I`.
    pub fn compounds(&self, t: usize, d: usize) -> &[Vec<Complex64>] {
        &self.compounds[t][d]
    }

    /// `λ_{H_i}(v)` for every hyperplane.
    pub fn lambdas(&self, v: &[Complex64]) -> Vec<f64> {
        self.forms.iter().map(|f| weil(f, v)).collect()
    }

    pub fn select(&self, lambdas: &[f64]) -> TupleSelector {
        select_tuple(lambdas, &self.tuples)
    }

    /// `L_{t_i}(v)` for the forms of tuple `t`.
    pub fn apply_tuple(&self, t: usize, v: &[Complex64]) -> Vec<Complex64> {
        self.tuples[t]
            .iter()
            .map(|&i| self.forms[i].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `C(n+1,d)^{-1} Σ_{#I=d} λ_{t,I}(v)` for `v ∈ ∧^d V`.
    pub fn mean_weil(&self, t: usize, d: usize, v: &[Complex64]) -> f64 {
        let forms = self.compounds(t, d);
        forms.iter().map(|f| weil(f, v)).sum::<f64>() / forms.len() as f64
    }

    /// `μ` for the divisor of tuple `t`.
    pub fn mu(&self, t: usize, x: &[Complex64], dx: &[Complex64]) -> MuValue {
        mu_values(&self.apply_tuple(t, x), &self.apply_tuple(t, dx))
    }
}
