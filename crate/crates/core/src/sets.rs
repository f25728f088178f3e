//! The decidable set algebra on the natural numbers: finite sets and their
//! complements. This family is closed under complement, finite union, finite
//! intersection and difference, and membership is exact, which is all the
//! measure-theoretic machinery downstream ever quantifies over.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentableSet {
    /// Exactly the listed indices.
    Finite(BTreeSet<u64>),
    /// Everything except the listed indices.
    Cofinite(BTreeSet<u64>),
}

impl RepresentableSet {
    pub fn empty() -> Self {
        RepresentableSet::Finite(BTreeSet::new())
    }

    pub fn all() -> Self {
        RepresentableSet::Cofinite(BTreeSet::new())
    }

    pub fn finite<I: IntoIterator<Item = u64>>(elements: I) -> Self {
        RepresentableSet::Finite(elements.into_iter().collect())
    }

    pub fn cofinite<I: IntoIterator<Item = u64>>(excluded: I) -> Self {
        RepresentableSet::Cofinite(excluded.into_iter().collect())
    }

    pub fn singleton(t: u64) -> Self {
        RepresentableSet::Finite(BTreeSet::from([t]))
    }

    /// The half-open interval `[lo, hi)`.
    pub fn range(lo: u64, hi: u64) -> Self {
        RepresentableSet::Finite((lo..hi).collect())
    }

    /// All indices `>= lo`.
    pub fn from_index(lo: u64) -> Self {
        RepresentableSet::Cofinite((0..lo).collect())
    }

    pub fn contains(&self, t: u64) -> bool {
        match self {
            RepresentableSet::Finite(s) => s.contains(&t),
            RepresentableSet::Cofinite(e) => !e.contains(&t),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, RepresentableSet::Finite(_))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, RepresentableSet::Finite(s) if s.is_empty())
    }

    /// Elements of a finite set, none for a cofinite one.
    pub fn elements(&self) -> Option<&BTreeSet<u64>> {
        match self {
            RepresentableSet::Finite(s) => Some(s),
            RepresentableSet::Cofinite(_) => None,
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            RepresentableSet::Finite(s) => RepresentableSet::Cofinite(s.clone()),
            RepresentableSet::Cofinite(e) => RepresentableSet::Finite(e.clone()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use RepresentableSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.union(b).copied().collect()),
            (Finite(a), Cofinite(e)) | (Cofinite(e), Finite(a)) => {
                Cofinite(e.difference(a).copied().collect())
            }
            (Cofinite(e1), Cofinite(e2)) => Cofinite(e1.intersection(e2).copied().collect()),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        use RepresentableSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.intersection(b).copied().collect()),
            (Finite(a), Cofinite(e)) | (Cofinite(e), Finite(a)) => {
                Finite(a.difference(e).copied().collect())
            }
            (Cofinite(e1), Cofinite(e2)) => Cofinite(e1.union(e2).copied().collect()),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// `self` intersected with `[0, n)`; always finite.
    pub fn truncate(&self, n: u64) -> BTreeSet<u64> {
        (0..n).filter(|t| self.contains(*t)).collect()
    }

    /// Splits at the index `at` into the finite head `self ∩ [0, at)` and the
    /// tail part `self ∩ [at, ∞)`.
    pub fn split_at(&self, at: u64) -> (BTreeSet<u64>, RepresentableSet) {
        let head = self.truncate(at);
        let tail = self.intersection(&RepresentableSet::from_index(at));
        (head, tail)
    }
}

impl fmt::Display for RepresentableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(s: &BTreeSet<u64>) -> String {
            s.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            RepresentableSet::Finite(s) => write!(f, "{{{}}}", list(s)),
            RepresentableSet::Cofinite(e) if e.is_empty() => f.write_str("N"),
            RepresentableSet::Cofinite(e) => write!(f, "N\\{{{}}}", list(e)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_algebra() {
        let a = RepresentableSet::finite([0, 2, 4]);
        let b = RepresentableSet::cofinite([2, 3]);
        assert!(a.contains(2) && !b.contains(2));
        assert_eq!(a.intersection(&b), RepresentableSet::finite([0, 4]));
        assert_eq!(a.union(&b), RepresentableSet::cofinite([3]));
        assert_eq!(b.difference(&a), RepresentableSet::cofinite([0, 2, 3, 4]));
        assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn truncation_and_split() {
        let b = RepresentableSet::cofinite([1]);
        assert_eq!(b.truncate(4), BTreeSet::from([0, 2, 3]));
        let (head, tail) = b.split_at(3);
        assert_eq!(head, BTreeSet::from([0, 2]));
        assert_eq!(tail, RepresentableSet::cofinite([0, 1, 2]));
    }

    #[test]
    fn serialization_shape() {
        let a = RepresentableSet::finite([0, 1]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"finite":[0,1]}"#);
        let b: RepresentableSet = serde_json::from_str(r#"{"cofinite":[3]}"#).unwrap();
        assert_eq!(b, RepresentableSet::cofinite([3]));
    }
}
