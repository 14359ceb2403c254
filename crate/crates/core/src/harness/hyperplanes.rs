use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exterior::maximal_minors;
use crate::poly::GaussRational;

/// `q` hyperplanes of `ℙⁿ` given by linear forms, with the admissible tuples:
/// every `(n+1)`-subset whose forms are linearly independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneConfig {
    n: usize,
    forms: Vec<Vec<GaussRational>>,
    tuples: Vec<Vec<usize>>,
}

impl HyperplaneConfig {
    pub fn general_position_tuples(forms: Vec<Vec<GaussRational>>, n: usize) -> Result<Self> {
        for (row, f) in forms.iter().enumerate() {
            if f.len() != n + 1 {
                return Err(Error::RaggedRows {
                    row,
                    found: f.len(),
                    expected: n + 1,
                });
            }
        }
        let tuples: Vec<Vec<usize>> = (0..forms.len())
            .combinations(n + 1)
            .filter(|t| !determinant(&forms, t).is_zero())
            .collect();
        if tuples.is_empty() {
            return Err(Error::NoGeneralPositionTuple);
        }
        Ok(Self { n, forms, tuples })
    }

    /// Parses each coefficient with the scalar grammar.
    pub fn parse(forms: &[&[&str]], n: usize) -> Result<Self> {
        let parsed = forms
            .iter()
            .map(|f| f.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::general_position_tuples(parsed, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[Vec<GaussRational>] {
        &self.forms
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// The forms of tuple `t`, in tuple order.
    pub fn tuple_forms(&self, t: usize) -> Vec<Vec<GaussRational>> {
        self.tuples[t].iter().map(|&i| self.forms[i].clone()).collect()
    }

    pub fn tuple_determinant(&self, t: usize) -> GaussRational {
        determinant(&self.forms, &self.tuples[t])
    }

    /// True iff the hyperplanes have no common point, i.e. the forms span the
    /// dual space. Checked by exact row reduction.
    pub fn common_point_free(&self) -> bool {
        exact_rank(&self.forms) == self.n + 1
    }

    pub fn ensure_common_point_free(&self) -> Result<()> {
        if self.common_point_free() {
            Ok(())
        } else {
            Err(Error::CommonPoint)
        }
    }

    /// True iff every subset of at most `n+1` forms is linearly independent.
    pub fn in_general_position(&self) -> bool {
        (1..=self.n + 1).all(|k| {
            (0..self.q())
                .combinations(k)
                .all(|s| exact_rank(&s.iter().map(|&i| self.forms[i].clone()).collect::<Vec<_>>()) == k)
        })
    }

    /// The same configuration with one more hyperplane.
    pub fn with_form(&self, form: Vec<GaussRational>) -> Result<Self> {
        let mut forms = self.forms.clone();
        forms.push(form);
        Self::general_position_tuples(forms, self.n)
    }

    pub fn check_dimension(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::LengthMismatch {
                expected: n + 1,
                found: self.n + 1,
            });
        }
        Ok(())
    }
}

fn determinant(forms: &[Vec<GaussRational>], tuple: &[usize]) -> GaussRational {
    let rows: Vec<Vec<GaussRational>> = tuple.iter().map(|&i| forms[i].clone()).collect();
    let m = rows.first().map_or(0, Vec::len);
    maximal_minors(&rows, m).expect("square matrix")[0].clone()
}

fn exact_rank(rows: &[Vec<GaussRational>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let factor = &a[i][c] / &pivot;
                for k in c..cols {
                    let v = &factor * &a[rank][k];
                    a[i][k] = &a[i][k] - &v;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_examples() {
        let c = HyperplaneConfig::parse(&[&["1", "0"], &["0", "1"], &["1", "1"]], 1).unwrap();
        assert_eq!(c.tuples().len(), 3);
        assert!(c.in_general_position() && c.common_point_free());
        assert!(matches!(
            HyperplaneConfig::parse(&[&["1", "0"], &["2", "0"]], 1),
            Err(Error::NoGeneralPositionTuple)
        ));
        let c = HyperplaneConfig::parse(
            &[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"], &["1", "1", "1"]],
            2,
        )
        .unwrap();
        assert_eq!(c.tuples().len(), 4);
        let c = HyperplaneConfig::parse(
            &[&["1", "0", "0"], &["0", "1", "0"], &["1", "1", "0"], &["0", "0", "1"]],
            2,
        )
        .unwrap();
        assert_eq!(c.tuples().len(), 3);
        assert!(!c.in_general_position());
        assert!(HyperplaneConfig::parse(&[&["1", "0"]], 2).is_err());
    }
}
