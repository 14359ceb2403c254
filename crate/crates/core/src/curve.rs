//! Polynomial lifts `x: ℂ → ℂ^{n+1}`, their associated curves and the
//! ramification divisor.

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::exterior::{pair_poly, two_row_identity_sign, wedge_rows, MultiIndex, WedgeForm, WedgeVector};
use crate::poly::{Divisor, GaussPoly, GaussRational};

/// Message used whenever a curve fails the nondegeneracy hypothesis.
pub const DEGENERATE_MESSAGE: &str = "image contained in a hyperplane: Wronskian vanishes identically";

/// A primitive polynomial lift of a curve in `ℙⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveLift {
    n: usize,
    coords: Vec<GaussPoly>,
}

impl CurveLift {
    /// Divides out the gcd of the coordinates.
    pub fn normalize(raw: Vec<GaussPoly>) -> Result<Self> {
        if raw.is_empty() || raw.iter().all(GaussPoly::is_zero) {
            return Err(Error::ZeroCurve);
        }
        let g = GaussPoly::gcd_all(&raw)?;
        let coords = raw.iter().map(|c| c.exact_div(&g)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n: coords.len() - 1,
            coords,
        })
    }

    /// Parses each coordinate with the polynomial grammar, then normalizes.
    pub fn parse(coords: &[&str]) -> Result<Self> {
        Self::normalize(coords.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[GaussPoly] {
        &self.coords
    }

    /// The rows `x, x′, …, x^{(count−1)}`.
    pub fn derivative_rows(&self, count: usize) -> Vec<Vec<GaussPoly>> {
        let mut rows = Vec::with_capacity(count);
        let mut current = self.coords.clone();
        for _ in 0..count {
            let next = current.iter().map(GaussPoly::derivative).collect();
            rows.push(current);
            current = next;
        }
        rows
    }

    fn check_level(&self, d: usize, min: usize, max: usize) -> Result<()> {
        if d < min || d > max {
            return Err(Error::LevelOutOfRange { d, min, max });
        }
        Ok(())
    }

    /// `X^d = x ∧ x′ ∧ … ∧ x^{(d−1)}`.
    pub fn associated(&self, d: usize) -> Result<WedgeVector> {
        self.check_level(d, 0, self.n + 1)?;
        wedge_rows(&self.derivative_rows(d), self.n)
    }

    /// `x ∧ … ∧ x^{(d−2)} ∧ x^{(d)}`, which equals the derivative of `X^d`.
    pub fn leibniz_partner(&self, d: usize) -> Result<WedgeVector> {
        self.check_level(d, 1, self.n)?;
        let mut rows = self.derivative_rows(d + 1);
        rows.remove(d - 1);
        wedge_rows(&rows, self.n)
    }

    pub fn wronskian(&self) -> GaussPoly {
        self.associated(self.n + 1).expect("level n+1 is in range").coords()[0].clone()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.wronskian().is_zero()
    }

    pub fn ensure_nondegenerate(&self) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::Degenerate(DEGENERATE_MESSAGE.to_string()))
        }
    }

    /// All associated curves `X^0, …, X^{n+1}`.
    pub fn family(&self) -> AssociatedFamily {
        let levels = (0..=self.n + 1)
            .map(|d| self.associated(d).expect("level in range"))
            .collect();
        AssociatedFamily { levels }
    }

    /// Monic gcd of the Plücker coordinates of `x ∧ x′`.
    pub fn ramification_gcd(&self) -> Result<GaussPoly> {
        let x2 = self.associated(2.min(self.n + 1))?;
        if self.n == 0 || x2.is_zero() {
            return Err(Error::ConstantCurve);
        }
        x2.content()
    }

    /// The same polynomial assembled chart by chart: on `y_k ≠ 0` the
    /// ramification order is `min_i ord (y_i/y_k)′ = min_i ord p_{ki}`.
    pub fn ramification_gcd_by_charts(&self) -> Result<GaussPoly> {
        let x2 = self.associated(2.min(self.n + 1))?;
        if self.n == 0 || x2.is_zero() {
            return Err(Error::ConstantCurve);
        }
        let mut total = GaussPoly::one();
        for (k, yk) in self.coords.iter().enumerate() {
            if yk.is_zero() {
                continue;
            }
            let minors: Vec<&GaussPoly> = (0..=self.n)
                .filter(|&i| i != k)
                .map(|i| {
                    let idx = MultiIndex::from_unsorted(vec![k, i], self.n).expect("distinct indices");
                    x2.coord(&idx)
                })
                .collect();
            let mut chart = GaussPoly::gcd_all(minors)?;
            loop {
                let shared = chart.gcd(yk)?;
                if shared.is_constant() {
                    break;
                }
                chart = chart.exact_div(&shared)?;
            }
            let g = total.gcd(&chart)?;
            total = (&total * &chart).exact_div(&g)?.monic();
        }
        Ok(total)
    }

    pub fn ramification_divisor(&self) -> Result<Divisor> {
        self.ramification_gcd()?.roots()
    }

    /// Both sides of
    /// `L_I(y)·L_J(y′) − L_J(y)·L_I(y′) = ε · L_{I∩J}(X^{d−1}) · L_{I∪J}(X^{d+1})`
    /// with `y = X^d`, `y′` its Leibniz partner and `L_K` the wedge of
    /// `forms[k]` for `k ∈ K`.
    pub fn two_row_identity_sides(
        &self,
        forms: &[Vec<GaussRational>],
        i_index: &MultiIndex,
        j_index: &MultiIndex,
    ) -> Result<(GaussPoly, GaussPoly)> {
        let d = i_index.len();
        self.check_level(d, 1, self.n)?;
        let sign = two_row_identity_sign(i_index, j_index)?;
        let wedge =
            |idx: &MultiIndex| WedgeForm::new(idx.elements().iter().map(|&k| forms[k].clone()).collect(), self.n);
        let (li, lj) = (wedge(i_index)?, wedge(j_index)?);
        let y = self.associated(d)?;
        let y2 = self.leibniz_partner(d)?;
        let lhs = &(&pair_poly(&li, &y)? * &pair_poly(&lj, &y2)?) - &(&pair_poly(&lj, &y)? * &pair_poly(&li, &y2)?);
        let below = pair_poly(&wedge(&i_index.intersection(j_index))?, &self.associated(d - 1)?)?;
        let above = pair_poly(&wedge(&i_index.union(j_index))?, &self.associated(d + 1)?)?;
        let rhs = &below * &above;
        Ok((lhs, if sign > 0 { rhs } else { -rhs }))
    }
}

/// `L_S(X^{|S|})` for every subset `S` of the forms, and `L_S` of the Leibniz
/// partner for `1 ≤ |S| ≤ n`, so the two-row identity can be checked over
/// many pairs without repeating pairings.
#[derive(Clone, Debug)]
pub struct FormPairings {
    n: usize,
    values: Vec<Vec<GaussPoly>>,
    partners: Vec<Vec<GaussPoly>>,
}

impl FormPairings {
    pub fn new(x: &CurveLift, forms: &[Vec<GaussRational>]) -> Result<Self> {
        let n = x.n;
        if forms.len() != n + 1 {
            return Err(Error::LengthMismatch {
                expected: n + 1,
                found: forms.len(),
            });
        }
        let pairings = |d: usize, y: &WedgeVector| {
            MultiIndex::all(n, d)
                .iter()
                .map(|s| {
                    let form = WedgeForm::new(s.elements().iter().map(|&k| forms[k].clone()).collect(), n)?;
                    pair_poly(&form, y)
                })
                .collect::<Result<Vec<_>>>()
        };
        let values = (0..=n + 1)
            .map(|d| pairings(d, &x.associated(d)?))
            .collect::<Result<Vec<_>>>()?;
        let partners = (1..=n)
            .map(|d| pairings(d, &x.leibniz_partner(d)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, values, partners })
    }

    /// `L_S(X^{|S|})`.
    pub fn value(&self, s: &MultiIndex) -> &GaussPoly {
        &self.values[s.len()][s.rank()]
    }

    /// Same as [`CurveLift::two_row_identity_sides`] with the forms given here.
    pub fn two_row_identity_sides(&self, i_index: &MultiIndex, j_index: &MultiIndex) -> Result<(GaussPoly, GaussPoly)> {
        let d = i_index.len();
        if d == 0 || d > self.n {
            return Err(Error::LevelOutOfRange { d, min: 1, max: self.n });
        }
        let sign = two_row_identity_sign(i_index, j_index)?;
        let partner = |s: &MultiIndex| &self.partners[d - 1][s.rank()];
        let lhs = &(self.value(i_index) * partner(j_index)) - &(self.value(j_index) * partner(i_index));
        let rhs = self.value(&i_index.intersection(j_index)) * self.value(&i_index.union(j_index));
        Ok((lhs, if sign > 0 { rhs } else { -rhs }))
    }
}

/// `X^0, …, X^{n+1}` for one lift.
#[derive(Clone, Debug)]
pub struct AssociatedFamily {
    levels: Vec<WedgeVector>,
}

impl AssociatedFamily {
    pub fn level(&self, d: usize) -> &WedgeVector {
        &self.levels[d]
    }

    pub fn levels(&self) -> &[WedgeVector] {
        &self.levels
    }

    pub fn wronskian(&self) -> &GaussPoly {
        &self.levels.last().expect("n+2 levels").coords()[0]
    }

    /// Number of Plücker coordinates at level `d`.
    pub fn width(&self, d: usize) -> usize {
        binomial(self.levels.len() - 1, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn lift(coords: &[&str]) -> CurveLift {
        CurveLift::parse(coords).unwrap()
    }

    fn strings(w: &WedgeVector) -> Vec<String> {
        w.coords().iter().map(ToString::to_string).collect()
    }

    /// Wronskian by the permutation expansion of the derivative matrix.
    fn wronskian_oracle(x: &CurveLift) -> GaussPoly {
        let m = x.n() + 1;
        let rows: Vec<Vec<GaussPoly>> = (0..m)
            .map(|k| x.coords().iter().map(|c| c.nth_derivative(k)).collect())
            .collect();
        (0..m)
            .permutations(m)
            .map(|perm| {
                let inversions = (0..m)
                    .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
                    .filter(|&(a, b)| perm[a] > perm[b])
                    .count();
                let term = perm
                    .iter()
                    .enumerate()
                    .fold(GaussPoly::one(), |acc, (r, &c)| &acc * &rows[r][c]);
                if inversions % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(GaussPoly::zero(), |acc, t| &acc + &t)
    }

    #[test]
    fn batched_pairings_agree() {
        let x = lift(&["1 + z^2", "i*z - 1", "z^3", "2 - z"]);
        let forms: Vec<Vec<GaussRational>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| GaussRational::from_parts((i * 3 + j) % 5 - 2, 1, (i + 2 * j) % 3 - 1, 2))
                    .collect()
            })
            .collect();
        let batch = FormPairings::new(&x, &forms).unwrap();
        for d in 1..=3 {
            for (a, b) in MultiIndex::all(3, d).iter().tuple_combinations() {
                if a.difference(b).len() != 1 {
                    continue;
                }
                for (i, j) in [(a, b), (b, a)] {
                    let direct = x.two_row_identity_sides(&forms, i, j).unwrap();
                    assert_eq!(batch.two_row_identity_sides(i, j).unwrap(), direct);
                    assert_eq!(direct.0, direct.1);
                }
            }
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(lift(&["z", "z^2"]), lift(&["1", "z"]));
        assert_eq!(strings(&lift(&["z^2-1", "z-1"]).associated(1).unwrap()), ["z + 1", "1"]);
        assert!(matches!(CurveLift::parse(&["0", "0"]), Err(Error::ZeroCurve)));
    }

    #[test]
    fn associated_examples() {
        let x = lift(&["1", "z", "z^2"]);
        assert_eq!(strings(&x.associated(2).unwrap()), ["1", "2*z", "z^2"]);
        assert_eq!(strings(&x.associated(0).unwrap()), ["1"]);
        assert_eq!(strings(&x.associated(3).unwrap()), ["2"]);
        assert_eq!(strings(&x.leibniz_partner(2).unwrap()), ["0", "2", "2*z"]);
        assert_eq!(x.associated(2).unwrap().derivative(), x.leibniz_partner(2).unwrap());
        assert_eq!(strings(&x.leibniz_partner(1).unwrap()), ["0", "1", "2*z"]);
        assert!(x.associated(4).is_err());
        assert!(x.leibniz_partner(3).is_err());
    }

    #[test]
    fn wronskian_matches_permutation_expansion() {
        for coords in [
            vec!["1", "z", "z^2"],
            vec!["z^3 + 2", "i*z - 1", "z^2 + z", "1/2*z^4"],
            vec!["1", "z^2"],
            vec!["1", "z", "2*z"],
        ] {
            let x = lift(&coords);
            assert_eq!(x.wronskian(), wronskian_oracle(&x));
            assert_eq!(x.family().wronskian(), &x.wronskian());
        }
    }

    #[test]
    fn degenerate_curves_are_detected() {
        let x = lift(&["1", "z", "2*z"]);
        assert!(!x.is_nondegenerate());
        let err = x.ensure_nondegenerate().unwrap_err().to_string();
        assert!(err.contains("image contained in a hyperplane"));
        assert!(err.contains("Wronskian vanishes identically"));
        assert!(lift(&["1", "z", "z^2"]).is_nondegenerate());
    }

    #[test]
    fn ramification_examples() {
        let x = lift(&["1", "z^2"]);
        assert_eq!(x.ramification_gcd().unwrap().to_string(), "z");
        assert_eq!(x.ramification_divisor().unwrap().ord_at_zero(), 1);
        assert!(lift(&["1", "z"]).ramification_divisor().unwrap().is_empty());
        let x = lift(&["1", "z^3", "z^6"]);
        assert_eq!(x.ramification_gcd().unwrap().to_string(), "z^2");
        assert!(matches!(
            lift(&["1", "2"]).ramification_gcd(),
            Err(Error::ConstantCurve)
        ));
    }

    #[test]
    fn ramification_routes_agree() {
        for coords in [
            vec!["1", "z^2"],
            vec!["1", "z^3", "z^6"],
            vec!["z^2 - 1", "z^3", "1"],
            vec!["(z-1)^3", "(z-1)^2*z + 1", "z"],
            vec!["1", "z", "z^2"],
            vec!["z^2", "(z-i)^2"],
        ] {
            let x = lift(&coords);
            assert_eq!(
                x.ramification_gcd().unwrap(),
                x.ramification_gcd_by_charts().unwrap(),
                "{coords:?}"
            );
        }
    }

    #[test]
    fn two_row_identity_on_coordinate_forms() {
        let x = lift(&["1", "z", "z^2"]);
        let forms: Vec<Vec<GaussRational>> = (0..3)
            .map(|i| (0..3).map(|j| GaussRational::from_integer(i64::from(i == j))).collect())
            .collect();
        for d in 1..=2 {
            for i in MultiIndex::all(2, d) {
                for j in MultiIndex::all(2, d) {
                    if i == j {
                        continue;
                    }
                    let (lhs, rhs) = x.two_row_identity_sides(&forms, &i, &j).unwrap();
                    assert_eq!(lhs, rhs, "I={i:?} J={j:?}");
                }
            }
        }
        let (i, j) = (
            MultiIndex::new(vec![0], 1).unwrap(),
            MultiIndex::new(vec![1], 1).unwrap(),
        );
        assert_eq!(two_row_identity_sign(&i, &j).unwrap(), 1);
        assert_eq!(two_row_identity_sign(&j, &i).unwrap(), -1);
    }
}
