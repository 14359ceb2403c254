use std::f64::consts::TAU;

use num_complex::Complex64;

use super::gauss_poly::{ComplexPoly, GaussPoly};
use crate::error::{Error, Result};

/// Residual tolerance for accepted roots, relative to `Σ |a_k| |ρ|^k`.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;
/// Minimum distance between distinct divisor points.
pub const ROOT_SEPARATION_TOL: f64 = 1e-8;

const MAX_ABERTH_ITERS: usize = 500;

/// Zero divisor of a polynomial on ℂ: an exact order at the origin plus
/// numerically located points with exact multiplicities.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Divisor {
    ord_at_zero: usize,
    points: Vec<(Complex64, usize)>,
}

impl Divisor {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates that points are off the origin and pairwise separated.
    pub fn new(ord_at_zero: usize, points: Vec<(Complex64, usize)>) -> Result<Self> {
        for (k, (a, _)) in points.iter().enumerate() {
            if a.norm() <= ROOT_SEPARATION_TOL {
                return Err(Error::DivisorPointAtOrigin);
            }
            for (b, _) in &points[k + 1..] {
                if (a - b).norm() <= ROOT_SEPARATION_TOL {
                    return Err(Error::RootsTooClose {
                        a: a.to_string(),
                        b: b.to_string(),
                        tol: ROOT_SEPARATION_TOL,
                    });
                }
            }
        }
        let points = points.into_iter().filter(|&(_, m)| m > 0).collect();
        Ok(Self { ord_at_zero, points })
    }

    pub fn ord_at_zero(&self) -> usize {
        self.ord_at_zero
    }

    pub fn points(&self) -> &[(Complex64, usize)] {
        &self.points
    }

    /// Total multiplicity, including the origin.
    pub fn degree(&self) -> usize {
        self.ord_at_zero + self.points.iter().map(|&(_, m)| m).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.degree() == 0
    }

    /// Multiplicity at the point nearest `z` within the separation tolerance.
    pub fn multiplicity_at(&self, z: Complex64) -> usize {
        if z.norm() <= ROOT_SEPARATION_TOL {
            return self.ord_at_zero;
        }
        self.points
            .iter()
            .find(|(p, _)| (p - z).norm() <= ROOT_SEPARATION_TOL)
            .map_or(0, |&(_, m)| m)
    }
}

impl GaussPoly {
    /// All complex roots with exact multiplicities. Multiplicities come from the
    /// exact squarefree decomposition; locations are found numerically on each
    /// squarefree factor, where every root is simple.
    pub fn roots(&self) -> Result<Divisor> {
        let ord0 = self.order_at_zero().ok_or(Error::ZeroPolynomial)?;
        let rest = GaussPoly::from_coeffs(self.coeffs()[ord0..].to_vec());
        let mut points = Vec::new();
        for (factor, mult) in rest.squarefree_decomposition()? {
            for root in simple_roots(&factor)? {
                points.push((root, mult));
            }
        }
        Divisor::new(ord0, points)
    }
}

/// Roots of a squarefree polynomial by Aberth–Ehrlich iteration followed by
/// Newton polishing.
fn simple_roots(factor: &GaussPoly) -> Result<Vec<Complex64>> {
    let p = factor.to_complex();
    let c = p.coeffs();
    let deg = c.len() - 1;
    match deg {
        0 => return Ok(Vec::new()),
        1 => {
            let root = -c[0] / c[1];
            return check_residuals(factor, &p, vec![root]);
        }
        _ => {}
    }
    // Initial guesses on a circle of the geometric-mean root radius.
    let radius = (c[0].norm() / c[deg].norm()).powf(1.0 / deg as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / deg as f64 + 0.4))
        .collect();
    let mut converged = false;
    for _ in 0..MAX_ABERTH_ITERS {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let (v, dv) = p.eval_with_derivative(z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..deg).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    for root in &mut z {
        for _ in 0..3 {
            let (v, dv) = p.eval_with_derivative(*root);
            let step = v / dv;
            if step.is_finite() {
                *root -= step;
            }
        }
    }
    if !converged && z.iter().any(|r| !r.is_finite()) {
        return Err(Error::RootsNotConverged { factor: factor.clone() });
    }
    check_residuals(factor, &p, z)
}

fn check_residuals(factor: &GaussPoly, p: &ComplexPoly, roots: Vec<Complex64>) -> Result<Vec<Complex64>> {
    for &r in &roots {
        let scale = p.magnitude_at(r);
        if !r.is_finite() || p.eval(r).norm() > ROOT_RESIDUAL_TOL * scale {
            return Err(Error::RootsNotConverged { factor: factor.clone() });
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_of(s: &str) -> Divisor {
        s.parse::<GaussPoly>().unwrap().roots().unwrap()
    }

    #[test]
    fn examples() {
        let d = roots_of("z^2+1");
        assert_eq!(d.ord_at_zero(), 0);
        assert_eq!(d.multiplicity_at(Complex64::new(0.0, 1.0)), 1);
        assert_eq!(d.multiplicity_at(Complex64::new(0.0, -1.0)), 1);

        let d = roots_of("z^3");
        assert_eq!(d.ord_at_zero(), 3);
        assert!(d.points().is_empty());

        let d = roots_of("(z-2)^2*(z+3)");
        assert_eq!(d.multiplicity_at(Complex64::new(2.0, 0.0)), 2);
        assert_eq!(d.multiplicity_at(Complex64::new(-3.0, 0.0)), 1);
        assert_eq!(d.degree(), 3);
    }

    #[test]
    fn degree_matches_for_mixed_multiplicities() {
        let d = roots_of("z^2*(z-1/2)^3*(z^2+z+1)*(z-i)^2");
        assert_eq!(d.ord_at_zero(), 2);
        assert_eq!(d.degree(), 2 + 3 + 2 + 2);
        assert_eq!(d.multiplicity_at(Complex64::new(0.5, 0.0)), 3);
    }

    #[test]
    fn errors() {
        assert!(GaussPoly::zero().roots().is_err());
        assert!(Divisor::new(0, vec![(Complex64::new(0.0, 0.0), 1)]).is_err());
        assert!(Divisor::new(
            0,
            vec![(Complex64::new(1.0, 0.0), 1), (Complex64::new(1.0 + 1e-10, 0.0), 1)]
        )
        .is_err());
        assert!(roots_of("7").is_empty());
    }
}
