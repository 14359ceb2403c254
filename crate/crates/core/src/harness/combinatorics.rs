use std::collections::HashSet;

use itertools::Itertools;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::exterior::{index_distance, MultiIndex};

/// Incidence counts of a collection of two-element subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceCertificate {
    pub balanced: bool,
    pub empty: bool,
    pub counts: Vec<usize>,
}

/// Whether every index `0..=n` lies in the same number of pairs. The empty
/// collection is balanced but flagged as empty.
pub fn balanced_check(pairs: &[(usize, usize)], n: usize) -> BalanceCertificate {
    let mut counts = vec![0; n + 1];
    for &(a, b) in pairs {
        counts[a] += 1;
        counts[b] += 1;
    }
    BalanceCertificate {
        balanced: counts.iter().all_equal(),
        empty: pairs.is_empty(),
        counts,
    }
}

/// Unordered pairs `{I, J}` of `d`-subsets of `{0,…,n}` at distance one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCollection {
    n: usize,
    d: usize,
    pairs: Vec<(MultiIndex, MultiIndex)>,
}

impl PairCollection {
    /// Validates sizes and distances, and rejects duplicates. Each pair is
    /// stored with its lexicographically smaller member first.
    pub fn new(pairs: Vec<(MultiIndex, MultiIndex)>, n: usize, d: usize) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(pairs.len());
        for (i, j) in pairs {
            if i.len() != d || j.len() != d || i.n() != n || j.n() != n {
                return Err(Error::InvalidPairs(format!(
                    "{:?}, {:?} are not {d}-subsets of 0..={n}",
                    i.elements(),
                    j.elements()
                )));
            }
            let distance = index_distance(&i, &j)?;
            if distance != 1 {
                return Err(Error::NotAdjacent {
                    left: i.elements().to_vec(),
                    right: j.elements().to_vec(),
                    distance,
                });
            }
            let pair = if i < j { (i, j) } else { (j, i) };
            if !seen.insert(pair.clone()) {
                return Err(Error::InvalidPairs(format!(
                    "duplicate pair {:?}, {:?}",
                    pair.0.elements(),
                    pair.1.elements()
                )));
            }
            out.push(pair);
        }
        Ok(Self { n, d, pairs: out })
    }

    /// Two-element subsets `{i, j}` of `{0,…,n}`, as pairs of singletons.
    pub fn from_two_subsets(pairs: &[(usize, usize)], n: usize) -> Result<Self> {
        let mut out = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b || a > n || b > n {
                return Err(Error::InvalidPairs(format!(
                    "{{{a}, {b}}} is not a two-element subset of 0..={n}"
                )));
            }
            out.push((MultiIndex::new(vec![a], n)?, MultiIndex::new(vec![b], n)?));
        }
        Self::new(out, n, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(MultiIndex, MultiIndex)] {
        &self.pairs
    }

    /// Pairs as lexicographic ranks among the `d`-subsets.
    pub fn rank_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().map(|(i, j)| (i.rank(), j.rank())).collect()
    }

    /// Balance over the `C(n+1, d)` subsets that index the wedge forms.
    pub fn balance(&self) -> BalanceCertificate {
        balanced_check(&self.rank_pairs(), binomial(self.n + 1, self.d) - 1)
    }

    pub fn ensure_balanced(&self) -> Result<()> {
        let cert = self.balance();
        if cert.empty {
            return Err(Error::EmptyCollection);
        }
        if !cert.balanced {
            return Err(Error::Unbalanced(cert.counts));
        }
        Ok(())
    }

    /// How often each `(d−1)`-subset occurs as `I ∩ J`, lexicographic.
    pub fn intersection_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; binomial(self.n + 1, self.d - 1)];
        for (i, j) in &self.pairs {
            counts[i.intersection(j).rank()] += 1;
        }
        counts
    }

    /// How often each `(d+1)`-subset occurs as `I ∪ J`, lexicographic.
    pub fn union_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; binomial(self.n + 1, self.d + 1)];
        for (i, j) in &self.pairs {
            counts[i.union(j).rank()] += 1;
        }
        counts
    }
}

/// All pairs of `d`-subsets of `{0,…,n}` at distance one.
pub fn distance_one_collection(n: usize, d: usize) -> Result<PairCollection> {
    if d == 0 || d > n {
        return Err(Error::LevelOutOfRange { d, min: 1, max: n });
    }
    let all = MultiIndex::all(n, d);
    let pairs = all
        .iter()
        .tuple_combinations()
        .filter(|(i, j)| i.difference(j).len() == 1)
        .map(|(i, j)| (i.clone(), j.clone()))
        .collect();
    PairCollection::new(pairs, n, d)
}

/// Both sides of
/// `Σ_{d=1}^n (n+1−d)(−a_{d−1} + 2a_d − a_{d+1}) = −n·a₀ + (n+1)·a₁ − a_{n+1}`.
pub fn telescoping_identity(a: &[f64], n: usize) -> Result<(f64, f64)> {
    if a.len() != n + 2 {
        return Err(Error::LengthMismatch {
            expected: n + 2,
            found: a.len(),
        });
    }
    let lhs = (1..=n)
        .map(|d| (n + 1 - d) as f64 * (-a[d - 1] + 2.0 * a[d] - a[d + 1]))
        .sum();
    let rhs = -(n as f64) * a[0] + (n + 1) as f64 * a[1] - a[n + 1];
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balance_examples() {
        assert!(balanced_check(&[(0, 1), (1, 2), (0, 2)], 2).balanced);
        let c = balanced_check(&[(0, 1)], 2);
        assert!(!c.balanced);
        assert_eq!(c.counts, vec![1, 1, 0]);
        let c = balanced_check(&[], 2);
        assert!(c.balanced && c.empty);
        let empty = PairCollection::from_two_subsets(&[], 2).unwrap();
        assert!(matches!(empty.ensure_balanced(), Err(Error::EmptyCollection)));
        assert!(PairCollection::from_two_subsets(&[(0, 1), (1, 0)], 2).is_err());
        assert!(PairCollection::from_two_subsets(&[(0, 0)], 2).is_err());
    }

    #[test]
    fn distance_one_examples() {
        let c = distance_one_collection(2, 1).unwrap();
        let pairs: Vec<(usize, usize)> = c
            .pairs()
            .iter()
            .map(|(i, j)| (i.elements()[0], j.elements()[0]))
            .collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(c.intersection_counts(), vec![3]);
        assert_eq!(c.union_counts(), vec![1, 1, 1]);
        assert_eq!(distance_one_collection(3, 2).unwrap().len(), 12);
        assert!(distance_one_collection(3, 0).is_err());
        assert!(distance_one_collection(3, 4).is_err());
    }

    #[test]
    fn telescoping_examples() {
        let n = 5;
        let mut a = vec![0.0; n + 2];
        a[1] = 1.0;
        assert_eq!(telescoping_identity(&a, n).unwrap(), (6.0, 6.0));
        let (l, r) = telescoping_identity(&vec![2.5; n + 2], n).unwrap();
        assert_eq!((l, r), (0.0, 0.0));
        assert!(telescoping_identity(&a, n + 1).is_err());
    }
}
