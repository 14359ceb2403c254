use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::GaussRational;
use crate::error::{Error, Result};

/// Univariate polynomial over ℚ(i). `coeffs[k]` is the coefficient of `z^k`;
/// the highest stored coefficient is nonzero, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussPoly {
    coeffs: Vec<GaussRational>,
}

impl GaussPoly {
    pub fn from_coeffs(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(GaussRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Polynomial with integer coefficients, lowest power first.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| GaussRational::from_integer(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: GaussRational, k: usize) -> Self {
        let mut coeffs = vec![GaussRational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(GaussRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&GaussRational> {
        self.coeffs.last()
    }

    /// Order of vanishing at the origin; `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussRational::from_integer(k as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dinv = dlead.inv().expect("leading coefficient is nonzero");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![GaussRational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + ddeg];
            if top.is_zero() {
                continue;
            }
            let q = top * &dinv;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&q * dc);
            }
            quot[k] = q;
        }
        rem.truncate(ddeg);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact. Panics (debug) if a remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        debug_assert!(r.is_zero(), "exact_div left a remainder");
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Monic gcd of a list of polynomials, not all zero.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a GaussPoly>) -> Result<Self> {
        let mut acc: Option<GaussPoly> = None;
        for p in polys {
            if p.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => p.monic(),
                Some(g) if g.is_one() => return Ok(g),
                Some(g) => g.gcd(p)?,
            });
        }
        acc.ok_or(Error::ZeroGcd)
    }

    /// True when `self = c·other` for a nonzero constant `c`.
    pub fn is_associate(&self, other: &Self) -> bool {
        self.monic() == other.monic()
    }

    /// Yun's algorithm. Returns monic, squarefree, pairwise coprime factors with
    /// their multiplicities; the product reproduces `self` up to a nonzero constant.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(GaussPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut mult = 1;
        while !b.is_constant() {
            let a = b.gcd(&d)?;
            if !a.is_constant() {
                out.push((a.clone(), mult));
            }
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            mult += 1;
        }
        Ok(out)
    }

    /// Horner evaluation of the floating-point image.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_complex())
    }

    pub fn to_complex(&self) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(GaussRational::to_complex).collect())
    }

    /// Largest coefficient modulus of `self − other`. Zero exactly when the
    /// polynomials are equal; otherwise at least `f64::MIN_POSITIVE`.
    pub fn residual(&self, other: &Self) -> f64 {
        let diff = self - other;
        if diff.is_zero() {
            return 0.0;
        }
        diff.coeffs
            .iter()
            .map(|c| c.to_complex().norm())
            .fold(f64::MIN_POSITIVE, f64::max)
    }

    /// Common-denominator form: `self = (1/den)·Σ nums[k] z^k` with Gaussian integers.
    fn integer_form(&self) -> (Vec<Complex<BigInt>>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.re.denom());
            den = den.lcm(c.im.denom());
        }
        let nums = self
            .coeffs
            .iter()
            .map(|c| {
                let scale = |q: &BigRational| q.numer() * (&den / q.denom());
                Complex::new(scale(&c.re), scale(&c.im))
            })
            .collect();
        (nums, den)
    }
}

impl<'a> Add<&'a GaussPoly> for &'a GaussPoly {
    type Output = GaussPoly;
    fn add(self, rhs: &GaussPoly) -> GaussPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a = &*a + b;
        }
        GaussPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a GaussPoly> for &'a GaussPoly {
    type Output = GaussPoly;
    fn sub(self, rhs: &GaussPoly) -> GaussPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GaussPoly> for &'a GaussPoly {
    type Output = GaussPoly;
    fn mul(self, rhs: &GaussPoly) -> GaussPoly {
        if self.is_zero() || rhs.is_zero() {
            return GaussPoly::zero();
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        // Convolve over Z[i] and normalise once per output coefficient.
        let (a, da) = self.integer_form();
        let (b, db) = rhs.integer_form();
        let mut acc = vec![Complex::new(BigInt::zero(), BigInt::zero()); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.re.is_zero() && x.im.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let (re, im) = if x.im.is_zero() && y.im.is_zero() {
                    (&x.re * &y.re, BigInt::zero())
                } else {
                    (&x.re * &y.re - &x.im * &y.im, &x.re * &y.im + &x.im * &y.re)
                };
                acc[i + j].re += re;
                acc[i + j].im += im;
            }
        }
        let den = da * db;
        GaussPoly::from_coeffs(
            acc.into_iter()
                .map(|c| GaussRational::new(BigRational::new(c.re, den.clone()), BigRational::new(c.im, den.clone())))
                .collect(),
        )
    }
}

impl Neg for &GaussPoly {
    type Output = GaussPoly;
    fn neg(self) -> GaussPoly {
        GaussPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussPoly {
            type Output = GaussPoly;
            fn $m(self, rhs: GaussPoly) -> GaussPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GaussPoly {
    type Output = GaussPoly;
    fn neg(self) -> GaussPoly {
        -&self
    }
}

impl fmt::Display for GaussPoly {
    /// Highest power first, in the grammar accepted by `str::parse`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, text) = c.coefficient_text();
            let body = match (k, text.as_str()) {
                (0, _) => text,
                (_, "1") => power_text(k),
                _ => format!("{}*{}", text, power_text(k)),
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

fn power_text(k: usize) -> String {
    if k == 1 {
        "z".to_string()
    } else {
        format!("z^{k}")
    }
}

/// Floating-point image of a [`GaussPoly`], used on the quadrature hot path.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    #[inline]
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// `Σ |a_k| |z|^k`, the natural scale for residuals at `z`.
    pub fn magnitude_at(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Value and first derivative at `z`.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> GaussPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("z+1") * &p("z-1"), p("z^2-1"));
        assert_eq!(&p("3z^2 + i") + &GaussPoly::zero(), p("3z^2 + i"));
        assert_eq!(&p("z^2+i") * &p("z-i"), p("z^3 - i*z^2 + i*z + 1"));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("z^2").derivative(), p("2z"));
        assert!(p("7/3 + i").derivative().is_zero());
        assert_eq!(p("i*z^3 + z").derivative(), p("3i*z^2 + 1"));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("z^2-1").gcd(&p("z-1")).unwrap(), p("z-1"));
        assert_eq!(p("z^5 + 2z + i").gcd(&GaussPoly::one()).unwrap(), GaussPoly::one());
        assert_eq!(p("z^2+1").gcd(&p("z-i")).unwrap(), p("z-i"));
        assert!(matches!(GaussPoly::zero().gcd(&GaussPoly::zero()), Err(Error::ZeroGcd)));
        assert_eq!(GaussPoly::zero().gcd(&p("2z-2")).unwrap(), p("z-1"));
    }

    #[test]
    fn squarefree_examples() {
        let f = p("(z-1)^2*(z+1)");
        assert_eq!(
            f.squarefree_decomposition().unwrap(),
            vec![(p("z+1"), 1), (p("z-1"), 2)]
        );
        let g = p("z^2 + z + 1");
        assert_eq!(g.squarefree_decomposition().unwrap(), vec![(g.clone(), 1)]);
        assert_eq!(p("z^3").squarefree_decomposition().unwrap(), vec![(p("z"), 3)]);
        assert!(GaussPoly::zero().squarefree_decomposition().is_err());
        assert!(p("5").squarefree_decomposition().unwrap().is_empty());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("z^2+1").eval(Complex64::new(2.0, 0.0)), Complex64::new(5.0, 0.0));
        assert_eq!(
            p("3/4 + 2z^3").eval(Complex64::new(0.0, 0.0)),
            Complex64::new(0.75, 0.0)
        );
        assert_eq!(p("z-i").eval(Complex64::new(0.0, 1.0)).norm(), 0.0);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p("z^5 + (1/2)i*z^3 - 4z + 2");
        let b = p("3z^2 - i");
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap() < 2);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(a.div_rem(&GaussPoly::zero()).is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "z^2 - 1", "-(1/3)i*z^2 + 1/2", "(1/2 - i)*z + 7", "-z^3 + i*z"] {
            let q = p(s);
            assert_eq!(q.to_string().parse::<GaussPoly>().unwrap(), q, "{s}");
        }
        assert_eq!(p("z^2 - 1").to_string(), "z^2 - 1");
    }
}
