//! Multisets over finite label sets: the points of Sym^n(X).

use std::collections::BTreeMap;
use std::fmt;

/// Labels with positive multiplicities; the total is the n of Sym^n(X).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Multiset {
    mult: BTreeMap<String, usize>,
}

impl Multiset {
    pub fn new() -> Self {
        Multiset::default()
    }

    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, usize)>) -> Self {
        let mut ms = Multiset::new();
        for (label, m) in pairs {
            ms.insert(label.into(), m);
        }
        ms
    }

    pub fn from_elements<S: Into<String>>(elements: impl IntoIterator<Item = S>) -> Self {
        let mut ms = Multiset::new();
        for label in elements {
            ms.insert(label.into(), 1);
        }
        ms
    }

    pub fn insert(&mut self, label: String, m: usize) {
        if m == 0 {
            return;
        }
        *self.mult.entry(label).or_insert(0) += m;
    }

    pub fn multiplicity(&self, label: &str) -> usize {
        self.mult.get(label).copied().unwrap_or(0)
    }

    /// Total multiplicity.
    pub fn total(&self) -> usize {
        self.mult.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &str> {
        self.mult.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.mult.iter().map(|(l, &m)| (l.as_str(), m))
    }

    /// Disjoint union (adds multiplicities).
    pub fn sum(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for (label, m) in other.iter() {
            out.insert(label.to_string(), m);
        }
        out
    }

    pub fn scaled(&self, k: usize) -> Multiset {
        let mut out = Multiset::new();
        for (label, m) in self.iter() {
            out.insert(label.to_string(), m * k);
        }
        out
    }

    /// Push forward along a relabeling.
    pub fn map_labels(&self, f: impl Fn(&str) -> String) -> Multiset {
        let mut out = Multiset::new();
        for (label, m) in self.iter() {
            out.insert(f(label), m);
        }
        out
    }

    /// Expand to a sorted list with repetitions.
    pub fn elements(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.total());
        for (label, m) in self.iter() {
            for _ in 0..m {
                out.push(label.to_string());
            }
        }
        out
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.elements().join(","))
    }
}

/// All multisets of total n over the given labels, in lexicographic order.
pub fn enumerate_multisets(labels: &[String], n: usize) -> Vec<Multiset> {
    use itertools::Itertools;
    (0..labels.len())
        .combinations_with_replacement(n)
        .map(|combo| Multiset::from_elements(combo.into_iter().map(|i| labels[i].clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_and_sums() {
        let a = Multiset::from_pairs([("x", 2usize), ("y", 1)]);
        let b = Multiset::from_elements(["x", "z"]);
        assert_eq!(a.total(), 3);
        let u = a.sum(&b);
        assert_eq!(u.multiplicity("x"), 3);
        assert_eq!(u.total(), 5);
        assert_eq!(a.elements(), vec!["x", "x", "y"]);
    }

    #[test]
    fn enumeration_count_is_binomial() {
        let labels: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
        // C(3+2-1, 2) = 6
        assert_eq!(enumerate_multisets(&labels, 2).len(), 6);
    }
}
