//! Shared count containers: the per-k composition spectrum of a graph
//! and the (j, m) table of disjoint bad-component selections.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

/// counts[k-1] = number of compositions with exactly k components,
/// for k = 1..n. Queries beyond n return 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionVector {
    counts: Vec<BigUint>,
}

impl CompositionVector {
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        CompositionVector { counts }
    }

    /// Build a spectrum of length n from a function of k (1-based).
    pub fn from_fn(n: usize, f: impl Fn(usize) -> BigUint) -> Self {
        CompositionVector {
            counts: (1..=n).map(f).collect(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        CompositionVector {
            counts: vec![BigUint::zero(); n],
        }
    }

    /// Number of vertices the spectrum covers.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// C^k, 1-based; 0 for k = 0 or k > n.
    pub fn get(&self, k: usize) -> BigUint {
        if k == 0 || k > self.counts.len() {
            BigUint::zero()
        } else {
            self.counts[k - 1].clone()
        }
    }

    pub(crate) fn set(&mut self, k: usize, value: BigUint) {
        self.counts[k - 1] = value;
    }

    /// C(G): the sum over all k.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BigUint> {
        self.counts.iter()
    }

    /// Counts rendered as decimal strings, k = 1..n.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.counts.iter().map(|c| c.to_string()).collect()
    }
}

/// entry(j, m) = number of unordered families of m pairwise-disjoint bad
/// subsets covering j vertices in total, for 0 <= m <= j <= n.
/// Zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    n: usize,
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl CoefficientTable {
    pub fn new(n: usize) -> Self {
        let mut entries = BTreeMap::new();
        // one way to choose no bad components
        entries.insert((0, 0), BigUint::from(1u32));
        CoefficientTable { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, j: usize, m: usize) -> BigUint {
        self.entries.get(&(j, m)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, j: usize, m: usize, value: BigUint) {
        if value.is_zero() {
            self.entries.remove(&(j, m));
        } else {
            self.entries.insert((j, m), value);
        }
    }

    pub fn add(&mut self, j: usize, m: usize, value: &BigUint) {
        if value.is_zero() {
            return;
        }
        *self.entries.entry((j, m)).or_default() += value;
    }

    /// Non-zero entries in (j, m) lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &BigUint)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_queries() {
        let s = CompositionVector::from_counts(
            [1u32, 3, 3, 1].iter().map(|&x| BigUint::from(x)).collect(),
        );
        assert_eq!(s.get(1), BigUint::from(1u32));
        assert_eq!(s.get(2), BigUint::from(3u32));
        assert_eq!(s.get(5), BigUint::zero());
        assert_eq!(s.get(0), BigUint::zero());
        assert_eq!(s.total(), BigUint::from(8u32));
    }

    #[test]
    fn table_defaults() {
        let t = CoefficientTable::new(3);
        assert_eq!(t.entry(0, 0), BigUint::from(1u32));
        assert_eq!(t.entry(2, 1), BigUint::zero());
    }
}
