use crate::error::Result;
use crate::poly::Divisor;

use super::check_radius;

/// `N(r) = ord₀·log r + Σ_{0<|ρ|≤r} mult_ρ·log(r/|ρ|)`.
pub fn counting(divisor: &Divisor, r: f64) -> Result<f64> {
    check_radius(r)?;
    let at_zero = divisor.ord_at_zero() as f64 * r.ln();
    let rest: f64 = divisor
        .points()
        .iter()
        .filter(|(p, _)| p.norm() <= r)
        .map(|&(p, m)| m as f64 * (r / p.norm()).ln())
        .sum();
    Ok(at_zero + rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn examples() {
        let d = Divisor::new(0, vec![(Complex64::new(1.0, 0.0), 1), (Complex64::new(-1.0, 0.0), 1)]).unwrap();
        assert!((counting(&d, 2.0).unwrap() - 2.0 * 2f64.ln()).abs() < 1e-15);
        assert_eq!(counting(&d, 0.5).unwrap(), 0.0);
        assert_eq!(counting(&Divisor::empty(), 7.0).unwrap(), 0.0);
        let d = Divisor::new(3, vec![]).unwrap();
        assert!((counting(&d, std::f64::consts::E).unwrap() - 3.0).abs() < 1e-15);
        assert!(counting(&d, 0.0).is_err());
        assert!(counting(&d, -1.0).is_err());
    }
}
