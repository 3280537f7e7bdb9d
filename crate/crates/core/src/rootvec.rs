//! Integer vectors in simple-root coordinates, and sets of root indices.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Coefficients of a root or root-lattice weight in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(Vec<i64>);

impl RootVec {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootVec(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        RootVec(vec![0; rank])
    }

    /// The `i`-th simple root (0-based).
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVec(v)
    }

    /// Builds `Σ c·φ_node` from `(coefficient, 1-based node)` terms.
    pub fn from_terms(rank: usize, terms: &[(i64, usize)]) -> Self {
        let mut v = vec![0; rank];
        for &(c, node) in terms {
            v[node - 1] += c;
        }
        RootVec(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coefficients nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// Canonical ordering used for every sorted root list: height, then
    /// coefficients lexicographically.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Index<usize> for RootVec {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add<&RootVec> for &RootVec {
    type Output = RootVec;

    fn add(self, rhs: &RootVec) -> RootVec {
        assert_eq!(self.rank(), rhs.rank());
        RootVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&RootVec> for &RootVec {
    type Output = RootVec;

    fn sub(self, rhs: &RootVec) -> RootVec {
        assert_eq!(self.rank(), rhs.rank());
        RootVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVec {
    type Output = RootVec;

    fn neg(self) -> RootVec {
        RootVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for RootVec {
    type Output = RootVec;

    fn neg(self) -> RootVec {
        -&self
    }
}

impl Mul<&RootVec> for i64 {
    type Output = RootVec;

    fn mul(self, rhs: &RootVec) -> RootVec {
        RootVec(rhs.0.iter().map(|a| self * a).collect())
    }
}

impl From<Vec<i64>> for RootVec {
    fn from(v: Vec<i64>) -> Self {
        RootVec(v)
    }
}

/// A set of roots, stored as sorted indices into a [`RootSystem`](crate::RootSystem).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSet(Vec<usize>);

impl RootSet {
    pub fn from_indices(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        RootSet(indices)
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.0.binary_search(&idx).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.iter().all(|i| other.contains(i))
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        RootSet(self.iter().filter(|&i| other.contains(i)).collect())
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet::from_indices(self.iter().chain(other.iter()).collect())
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        RootSet::from_indices(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = RootVec::new(vec![1, 2, 0]);
        let b = RootVec::new(vec![0, 1, 1]);
        assert_eq!(&a + &b, RootVec::new(vec![1, 3, 1]));
        assert_eq!(&a - &b, RootVec::new(vec![1, 1, -1]));
        assert_eq!(-&a, RootVec::new(vec![-1, -2, 0]));
        assert_eq!(2 * &b, RootVec::new(vec![0, 2, 2]));
        assert_eq!(a.height(), 3);
        assert!(a.is_positive());
        assert!(!(&a - &b).is_positive());
        assert!(!(&a - &b).is_negative());
    }

    #[test]
    fn from_terms_is_one_based() {
        let v = RootVec::from_terms(4, &[(1, 1), (2, 2), (2, 4)]);
        assert_eq!(v.coeffs(), &[1, 2, 0, 2]);
        assert_eq!(v.to_string(), "(1,2,0,2)");
    }

    #[test]
    fn root_set_ops() {
        let s = RootSet::from_indices(vec![5, 1, 3, 3]);
        assert_eq!(s.indices(), &[1, 3, 5]);
        let t: RootSet = [3, 4].into_iter().collect();
        assert_eq!(s.intersection(&t).indices(), &[3]);
        assert_eq!(s.union(&t).indices(), &[1, 3, 4, 5]);
        assert!(!t.is_subset(&s));
    }
}
