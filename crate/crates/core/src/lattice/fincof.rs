//! Finite and cofinite subsets of the natural numbers.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Finite,
    Cofinite,
}

/// A subset of ℕ that is either finite or has finite complement.
///
/// `elements` holds the set itself for [`Polarity::Finite`] and the
/// complement for [`Polarity::Cofinite`]. Every value is canonical, so
/// structural equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FinCofSet {
    polarity: Polarity,
    elements: BTreeSet<u32>,
}

impl FinCofSet {
    pub fn empty() -> Self {
        Self::finite(BTreeSet::new())
    }

    /// All of ℕ.
    pub fn all() -> Self {
        Self::cofinite(BTreeSet::new())
    }

    pub fn finite(elements: impl IntoIterator<Item = u32>) -> Self {
        FinCofSet {
            polarity: Polarity::Finite,
            elements: elements.into_iter().collect(),
        }
    }

    /// The set ℕ ∖ `excluded`.
    pub fn cofinite(excluded: impl IntoIterator<Item = u32>) -> Self {
        FinCofSet {
            polarity: Polarity::Cofinite,
            elements: excluded.into_iter().collect(),
        }
    }

    pub fn singleton(i: u32) -> Self {
        Self::finite([i])
    }

    /// `{0, …, n}`.
    pub fn range_to(n: u32) -> Self {
        Self::finite(0..=n)
    }

    /// `{n, n+1, …}`.
    pub fn at_least(n: u32) -> Self {
        Self::cofinite(0..n)
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    /// The stored finite set: members when finite, non-members when cofinite.
    pub fn elements(&self) -> &BTreeSet<u32> {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.polarity == Polarity::Finite && self.elements.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.polarity == Polarity::Cofinite && self.elements.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.polarity == Polarity::Finite
    }

    pub fn contains(&self, i: u32) -> bool {
        match self.polarity {
            Polarity::Finite => self.elements.contains(&i),
            Polarity::Cofinite => !self.elements.contains(&i),
        }
    }

    pub fn complement(&self) -> Self {
        let polarity = match self.polarity {
            Polarity::Finite => Polarity::Cofinite,
            Polarity::Cofinite => Polarity::Finite,
        };
        FinCofSet {
            polarity,
            elements: self.elements.clone(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use Polarity::*;
        match (self.polarity, other.polarity) {
            (Finite, Finite) => Self::finite(self.elements.union(&other.elements).copied()),
            (Cofinite, Cofinite) => {
                Self::cofinite(self.elements.intersection(&other.elements).copied())
            }
            (Finite, Cofinite) => {
                Self::cofinite(other.elements.difference(&self.elements).copied())
            }
            (Cofinite, Finite) => {
                Self::cofinite(self.elements.difference(&other.elements).copied())
            }
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        use Polarity::*;
        match (self.polarity, other.polarity) {
            (Finite, Finite) => {
                Self::finite(self.elements.intersection(&other.elements).copied())
            }
            (Cofinite, Cofinite) => Self::cofinite(self.elements.union(&other.elements).copied()),
            (Finite, Cofinite) => Self::finite(self.elements.difference(&other.elements).copied()),
            (Cofinite, Finite) => Self::finite(other.elements.difference(&self.elements).copied()),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// Smallest member, if any.
    pub fn least(&self) -> Option<u32> {
        match self.polarity {
            Polarity::Finite => self.elements.iter().next().copied(),
            Polarity::Cofinite => (0..).find(|i| !self.elements.contains(i)),
        }
    }

    /// `self ∩ {0, …, n}` as an explicit set.
    pub fn truncate(&self, n: u32) -> BTreeSet<u32> {
        (0..=n).filter(|&i| self.contains(i)).collect()
    }

    /// Members when finite; `None` for an infinite set.
    pub fn members(&self) -> Option<&BTreeSet<u32>> {
        match self.polarity {
            Polarity::Finite => Some(&self.elements),
            Polarity::Cofinite => None,
        }
    }
}

impl Default for FinCofSet {
    fn default() -> Self {
        Self::empty()
    }
}

impl fmt::Display for FinCofSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |set: &BTreeSet<u32>| {
            set.iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.polarity {
            Polarity::Finite => write!(f, "{{{}}}", list(&self.elements)),
            Polarity::Cofinite if self.elements.is_empty() => f.write_str("ℕ"),
            Polarity::Cofinite => write!(f, "ℕ∖{{{}}}", list(&self.elements)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_of_finite_sets() {
        let a = FinCofSet::finite([1, 2]);
        let b = FinCofSet::finite([2, 3]);
        assert_eq!(a.union(&b), FinCofSet::finite([1, 2, 3]));
    }

    #[test]
    fn complement_flips_polarity() {
        assert_eq!(
            FinCofSet::finite([0]).complement(),
            FinCofSet::cofinite([0])
        );
        assert_eq!(FinCofSet::empty().complement(), FinCofSet::all());
    }

    #[test]
    fn intersect_cofinite_with_finite() {
        let a = FinCofSet::cofinite([0, 1]);
        let b = FinCofSet::finite([0, 5]);
        let got = a.intersect(&b);
        // membership oracle over a window
        let expected: BTreeSet<u32> = (0..=10).filter(|&i| a.contains(i) && b.contains(i)).collect();
        assert_eq!(expected, BTreeSet::from([5]));
        assert_eq!(got, FinCofSet::finite([5]));
    }

    #[test]
    fn min_of_cofinite_skips_excluded() {
        assert_eq!(FinCofSet::cofinite([0, 1, 3]).least(), Some(2));
        assert_eq!(FinCofSet::empty().least(), None);
        assert_eq!(FinCofSet::at_least(4).least(), Some(4));
    }

    #[test]
    fn display() {
        assert_eq!(FinCofSet::finite([2, 0]).to_string(), "{0,2}");
        assert_eq!(FinCofSet::all().to_string(), "ℕ");
        assert_eq!(FinCofSet::at_least(2).to_string(), "ℕ∖{0,1}");
    }
}
