use num_complex::Complex64;

use crate::curve::CurveLift;
use crate::error::{Error, Result};
use crate::exterior::{euclidean_norm, WedgeVector};
use crate::harness::HyperplaneConfig;
use crate::poly::{GaussPoly, GaussRational};

use super::numerics::{CurveNumerics, TupleForms};
use super::quadrature::{circle_integral, circle_integral_vec, find_breakpoints};
use super::weil::weil;
use super::{check_radius, counting, QuadratureOptions, RadialValue};

fn radial(r: f64, q: super::Quadrature) -> RadialValue {
    RadialValue {
        r,
        value: q.value(),
        quadrature_nodes: q.nodes,
        converged: q.converged,
    }
}

/// `T̄(r) = ∫ log|X(re^{iθ})| dθ/2π` with the Euclidean norm on Plücker
/// coordinates.
pub fn height_bar(x: &WedgeVector, r: f64, opts: &QuadratureOptions) -> Result<RadialValue> {
    check_radius(r)?;
    if x.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let polys: Vec<_> = x
        .coords()
        .iter()
        .filter(|c| !c.is_zero())
        .map(GaussPoly::to_complex)
        .collect();
    let q = circle_integral(
        |t| {
            let z = Complex64::from_polar(r, t);
            0.5 * polys.iter().map(|p| p.eval(z).norm_sqr()).sum::<f64>().ln()
        },
        opts,
    );
    Ok(radial(r, q))
}

/// `T_{d,f}(r) = T̄_{d,x}(r) − N_{d,x}(r)`, the second term counting common
/// zeros of the Plücker coordinates of `X^d`. Zero for `d = 0`.
pub fn height_t(x: &CurveLift, d: usize, r: f64, opts: &QuadratureOptions) -> Result<RadialValue> {
    check_radius(r)?;
    if d == 0 {
        return Ok(RadialValue::exact(r, 0.0));
    }
    let level = x.associated(d)?;
    if level.is_zero() {
        return Err(Error::Degenerate(format!(
            "associated curve X^{d} vanishes identically"
        )));
    }
    let bar = height_bar(&level, r, opts)?;
    let n = counting(&level.content()?.roots()?, r)?;
    Ok(RadialValue {
        value: bar.value - n,
        ..bar
    })
}

/// `m_{d,f}(𝐋, r)`: the circle average of `C(n+1,d)^{-1} Σ_I λ_{z,I}(F^d)`,
/// where the tuple at each point is chosen by maximizing `Σ_{i∈J} λ_{H_i}(f)`.
pub fn proximity_m(
    x: &CurveLift,
    d: usize,
    config: &HyperplaneConfig,
    r: f64,
    opts: &QuadratureOptions,
) -> Result<RadialValue> {
    check_radius(r)?;
    if d > x.n() + 1 {
        return Err(Error::LevelOutOfRange {
            d,
            min: 0,
            max: x.n() + 1,
        });
    }
    if d == 0 {
        return Ok(RadialValue::exact(r, 0.0));
    }
    config.check_dimension(x.n())?;
    let curve = CurveNumerics::new(x)?;
    let forms = TupleForms::new(config.forms(), config.tuples(), x.n());
    let selected = |t: f64| {
        let z = Complex64::from_polar(r, t);
        forms.select(&forms.lambdas(&curve.lift(z))).tuple
    };
    let breakpoints = find_breakpoints(selected, opts.scan_nodes);
    let q = circle_integral_vec(
        |t| {
            let z = Complex64::from_polar(r, t);
            let sel = forms.select(&forms.lambdas(&curve.lift(z))).tuple;
            vec![forms.mean_weil(sel, d, &curve.reduced(d, z))]
        },
        1,
        &breakpoints,
        opts,
    );
    Ok(radial(r, q))
}

/// `m_f(H, r) = ∫ λ_H(f(re^{iθ})) dθ/2π` for a single hyperplane.
pub fn proximity_hyperplane(
    x: &CurveLift,
    form: &[GaussRational],
    r: f64,
    opts: &QuadratureOptions,
) -> Result<RadialValue> {
    check_radius(r)?;
    if form.len() != x.n() + 1 {
        return Err(Error::LengthMismatch {
            expected: x.n() + 1,
            found: form.len(),
        });
    }
    let coeffs: Vec<Complex64> = form.iter().map(GaussRational::to_complex).collect();
    let lift: Vec<_> = x.coords().iter().map(GaussPoly::to_complex).collect();
    let q = circle_integral(
        |t| {
            let z = Complex64::from_polar(r, t);
            let v: Vec<Complex64> = lift.iter().map(|p| p.eval(z)).collect();
            debug_assert!(euclidean_norm(&v) > 0.0);
            weil(&coeffs, &v)
        },
        opts,
    );
    Ok(radial(r, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lift(coords: &[&str]) -> CurveLift {
        CurveLift::parse(coords).unwrap()
    }

    fn forms(rows: &[&[i64]]) -> Vec<Vec<GaussRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| GaussRational::from_integer(v)).collect())
            .collect()
    }

    #[test]
    fn height_examples() {
        let opts = QuadratureOptions::default();
        let x = lift(&["1", "z"]);
        for r in [0.5, 2.0, 10.0] {
            let t = height_bar(&x.associated(1).unwrap(), r, &opts).unwrap();
            assert!((t.value - 0.5 * (1.0 + r * r).ln()).abs() < 1e-12);
            let t1 = height_t(&x, 1, r, &opts).unwrap();
            assert!((t1.value - t.value).abs() < 1e-15);
        }
        let c = WedgeVector::scalar(0, "3".parse().unwrap());
        assert!((height_bar(&c, 4.0, &opts).unwrap().value - 3f64.ln()).abs() < 1e-14);
        let single = WedgeVector::scalar(0, "z".parse().unwrap());
        assert!((height_bar(&single, 7.0, &opts).unwrap().value - 7f64.ln()).abs() < 1e-12);
        let x = lift(&["1", "z", "z^2"]);
        assert_eq!(height_t(&x, 0, 3.0, &opts).unwrap().value, 0.0);
        assert!((height_t(&x, 3, 3.0, &opts).unwrap().value - 2f64.ln()).abs() < 1e-12);
        assert!(height_bar(&x.associated(1).unwrap(), -1.0, &opts).is_err());
    }

    #[test]
    fn proximity_single_tuple_matches_hyperplane_average() {
        let opts = QuadratureOptions::default();
        let x = lift(&["1", "z"]);
        let f = forms(&[&[1, 0], &[1, 1]]);
        let config = HyperplaneConfig::general_position_tuples(f.clone(), 1).unwrap();
        let r = 3.0;
        let m1 = proximity_m(&x, 1, &config, r, &opts).unwrap();
        let expected = (proximity_hyperplane(&x, &f[0], r, &opts).unwrap().value
            + proximity_hyperplane(&x, &f[1], r, &opts).unwrap().value)
            / 2.0;
        assert!(m1.converged);
        assert!((m1.value - expected).abs() < 1e-6);
        // The full wedge has |det| = 1.
        let m2 = proximity_m(&x, 2, &config, r, &opts).unwrap();
        assert!(m2.value.abs() < 1e-6);
        assert_eq!(proximity_m(&x, 0, &config, r, &opts).unwrap().value, 0.0);
        assert!(proximity_m(&x, 3, &config, r, &opts).is_err());
    }
}
