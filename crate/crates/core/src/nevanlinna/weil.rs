use num_complex::Complex64;
use num_integer::binomial;

use crate::curve::CurveLift;
use crate::error::{Error, Result};
use crate::exterior::{euclidean_norm, WedgeForm};
use crate::poly::GaussRational;

/// `λ_F(v) = −log(|F(v)|/|v|)` for a form given by its Plücker coordinates.
/// Returns `+∞` when `v` lies on the hyperplane `F = 0`.
pub fn weil(form: &[Complex64], v: &[Complex64]) -> f64 {
    let fv: Complex64 = form.iter().zip(v).map(|(a, b)| a * b).sum();
    let value = fv.norm();
    if value == 0.0 {
        return f64::INFINITY;
    }
    -(value / euclidean_norm(v)).ln()
}

/// [`weil`] for a wedge form, checking that `v` has `C(n+1, d)` entries.
pub fn weil_form(form: &WedgeForm, v: &[Complex64]) -> Result<f64> {
    let expected = binomial(form.n() + 1, form.degree());
    if v.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: v.len(),
        });
    }
    let coords: Vec<Complex64> = form.pluecker().iter().map(GaussRational::to_complex).collect();
    Ok(weil(&coords, v))
}

/// The tuple attaining `max_J Σ_{i∈J} λ_i`; ties go to the lowest index.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TupleSelector {
    pub tuple: usize,
    pub value: f64,
}

pub fn select_tuple(lambdas: &[f64], tuples: &[Vec<usize>]) -> TupleSelector {
    let mut best = TupleSelector {
        tuple: 0,
        value: f64::NEG_INFINITY,
    };
    for (k, t) in tuples.iter().enumerate() {
        let s: f64 = t.iter().map(|&i| lambdas[i]).sum();
        if s > best.value {
            best = TupleSelector { tuple: k, value: s };
        }
    }
    best
}

/// `μ` at one point together with the chart it was computed in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MuValue {
    pub value: f64,
    pub chart: usize,
    /// `Σ |w_i′|²` over the non-chart coordinates.
    pub derivative_sq: f64,
    /// `Σ |w_i′/w_i|²`.
    pub log_derivative_sq: f64,
}

/// `μ` from the coordinates `y_i = L_i(x(z))` and `y_i′ = L_i(x′(z))`.
///
/// The chart is the coordinate of largest modulus (lowest index on ties),
/// `w_i = y_i/y_k`, and `μ = −½ log(Σ|w_i′|² / Σ|w_i′/w_i|²)`. When every
/// `w_i′` vanishes the value is `−∞`.
pub fn mu_values(y: &[Complex64], dy: &[Complex64]) -> MuValue {
    let mut chart = 0;
    for (i, v) in y.iter().enumerate() {
        if v.norm() > y[chart].norm() {
            chart = i;
        }
    }
    let (yk, dyk) = (y[chart], dy[chart]);
    let (mut a, mut b) = (0.0, 0.0);
    for i in (0..y.len()).filter(|&i| i != chart) {
        let w = y[i] / yk;
        let dw = (dy[i] * yk - dyk * y[i]) / (yk * yk);
        a += dw.norm_sqr();
        b += (dw / w).norm_sqr();
    }
    let value = if a == 0.0 {
        f64::NEG_INFINITY
    } else {
        -0.5 * (a / b).ln()
    };
    MuValue {
        value,
        chart,
        derivative_sq: a,
        log_derivative_sq: b,
    }
}

fn apply_forms(forms: &[Vec<GaussRational>], v: &[Complex64]) -> Vec<Complex64> {
    forms
        .iter()
        .map(|f| f.iter().zip(v).map(|(c, x)| c.to_complex() * x).sum())
        .collect()
}

fn tuple_coordinates(
    x: &CurveLift,
    forms: &[Vec<GaussRational>],
    z: Complex64,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    if forms.len() != x.n() + 1 {
        return Err(Error::LengthMismatch {
            expected: x.n() + 1,
            found: forms.len(),
        });
    }
    let value: Vec<Complex64> = x.coords().iter().map(|c| c.eval(z)).collect();
    let deriv: Vec<Complex64> = x.coords().iter().map(|c| c.derivative().eval(z)).collect();
    Ok((apply_forms(forms, &value), apply_forms(forms, &deriv)))
}

/// `μ` of the curve at `z` for the divisor of the given `n+1` forms.
pub fn mu(x: &CurveLift, tuple_forms: &[Vec<GaussRational>], z: Complex64) -> Result<MuValue> {
    let (y, dy) = tuple_coordinates(x, tuple_forms, z)?;
    Ok(mu_values(&y, &dy))
}

/// Both sides of the pointwise logarithmic-derivative bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDerivCheck {
    pub lhs: f64,
    pub rhs: f64,
}

impl LogDerivCheck {
    pub fn gap(&self) -> f64 {
        self.lhs - self.rhs
    }
}

fn log_plus(x: f64) -> f64 {
    x.ln().max(0.0)
}

/// `lhs = log⁺‖Tf‖ + μ − λ₀`, `rhs = log⁺‖T_D f‖`, with `‖Tf‖² = Σ|w_i′|²`,
/// `λ₀ = ½ log⁺(1/Σ|w_i′|²)` and `‖T_D f‖² = Σ|w_i′/w_i|²` in the chart of `μ`.
pub fn pointwise_logderiv_check(
    x: &CurveLift,
    tuple_forms: &[Vec<GaussRational>],
    z: Complex64,
) -> Result<LogDerivCheck> {
    let m = mu(x, tuple_forms, z)?;
    if m.derivative_sq == 0.0 {
        return Err(Error::Degenerate("all chart derivatives vanish at this point".into()));
    }
    let a = m.derivative_sq;
    let lhs = 0.5 * log_plus(a) + m.value - 0.5 * log_plus(1.0 / a);
    let rhs = 0.5 * log_plus(m.log_derivative_sq);
    Ok(LogDerivCheck { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn identity(n: usize) -> Vec<Vec<GaussRational>> {
        (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| GaussRational::from_integer(i64::from(i == j)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn weil_examples() {
        assert_eq!(
            weil(
                &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
                &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
            ),
            0.0
        );
        let v = weil(&[c(1.0, 0.0), c(0.0, 0.0)], &[c(1.0, 0.0), c(1.0, 0.0)]);
        assert!((v - 0.5 * 2f64.ln()).abs() < 1e-15);
        assert_eq!(
            weil(&[c(1.0, 0.0), c(0.0, 0.0)], &[c(0.0, 0.0), c(1.0, 0.0)]),
            f64::INFINITY
        );
        let f = WedgeForm::coordinate(1, &[0]).unwrap();
        assert!(weil_form(&f, &[c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn selector_prefers_lowest_index() {
        let tuples = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        let s = select_tuple(&[1.0, 2.0, 1.0], &tuples);
        assert_eq!(s.tuple, 0);
        assert_eq!(s.value, 3.0);
        assert_eq!(select_tuple(&[0.0, 0.0, 5.0], &tuples).tuple, 1);
    }

    #[test]
    fn mu_examples() {
        let x = CurveLift::parse(&["1", "z"]).unwrap();
        let forms = identity(1);
        // |y₁| = 2 is the chart; w = 1/z, μ = −log|w| = log 2.
        let m = mu(&x, &forms, c(2.0, 0.0)).unwrap();
        assert_eq!(m.chart, 1);
        assert!((m.value - 2f64.ln()).abs() < 1e-14);
        let m = mu(&x, &forms, c(0.5, 0.0)).unwrap();
        assert_eq!(m.chart, 0);
        assert!((m.value - 2f64.ln()).abs() < 1e-14);
        let m = mu_values(
            &[c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)],
            &[c(0.0, 0.0), c(1.0, 0.5), c(2.0, 0.0)],
        );
        assert!(m.value.abs() < 1e-14);
        assert_eq!(
            mu_values(&[c(1.0, 0.0), c(0.5, 0.0)], &[c(0.0, 0.0), c(0.0, 0.0)]).value,
            f64::NEG_INFINITY
        );
    }

    #[test]
    fn logderiv_gap_is_never_positive() {
        let x = CurveLift::parse(&["1", "z"]).unwrap();
        let forms = identity(1);
        for k in 0..50 {
            let z = Complex64::from_polar(1.05 + 0.3 * k as f64, 0.37 * k as f64);
            let check = pointwise_logderiv_check(&x, &forms, z).unwrap();
            assert!(check.lhs.is_finite() && check.gap() <= 1e-12);
        }
    }
}
