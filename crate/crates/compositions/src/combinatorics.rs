//! Arbitrary-precision combinatorial kernel: binomial coefficients,
//! Stirling numbers of the second kind, and Bell numbers.
//!
//! All values are exact `BigUint`s. Tables grow lazily and are cached
//! behind a process-wide `RwLock`, so concurrent readers are cheap and
//! table growth is serialized. Out-of-range queries (`k < 0`, `k > n`)
//! return 0 instead of erroring; the inclusion-exclusion sums elsewhere
//! in the crate routinely walk past valid index ranges.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Triangular table of Stirling numbers of the second kind,
/// S(n,k) for 0 <= k <= n <= max_n.
///
/// Built from S(0,0) = 1 and the recurrence
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1).
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new() -> Self {
        StirlingTable {
            rows: vec![vec![BigUint::one()]],
        }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Extend the triangle so that row `n` exists.
    pub fn grow_to(&mut self, n: usize) {
        while self.max_n() < n {
            let prev = self.rows.last().unwrap();
            let nn = self.rows.len();
            let mut row = Vec::with_capacity(nn + 1);
            row.push(BigUint::zero()); // S(n, 0) = 0 for n >= 1
            for k in 1..nn {
                row.push(BigUint::from(k) * &prev[k] + &prev[k - 1]);
            }
            row.push(BigUint::one()); // S(n, n) = 1
            self.rows.push(row);
        }
    }

    /// S(n,k), or 0 when k > n. Panics if row `n` has not been grown.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.rows[n][k].clone()
    }
}

impl Default for StirlingTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Pascal's triangle, same lazy-growth discipline as `StirlingTable`.
#[derive(Debug, Clone)]
struct PascalTable {
    rows: Vec<Vec<BigUint>>,
}

impl PascalTable {
    fn new() -> Self {
        PascalTable {
            rows: vec![vec![BigUint::one()]],
        }
    }

    fn grow_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().unwrap();
            let nn = self.rows.len();
            let mut row = Vec::with_capacity(nn + 1);
            row.push(BigUint::one());
            for k in 1..nn {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            self.rows.push(row);
        }
    }
}

static STIRLING: LazyLock<RwLock<StirlingTable>> =
    LazyLock::new(|| RwLock::new(StirlingTable::new()));
static PASCAL: LazyLock<RwLock<PascalTable>> = LazyLock::new(|| RwLock::new(PascalTable::new()));

/// n choose k; 0 when k < 0 or k > n.
pub fn binomial(n: usize, k: isize) -> BigUint {
    if k < 0 || k as usize > n {
        return BigUint::zero();
    }
    let k = k as usize;
    {
        let table = PASCAL.read().unwrap();
        if table.rows.len() > n {
            return table.rows[n][k].clone();
        }
    }
    let mut table = PASCAL.write().unwrap();
    table.grow_to(n);
    table.rows[n][k].clone()
}

/// Stirling number of the second kind S(n,k); 0 when k < 0 or k > n.
/// S(0,0) = 1.
pub fn stirling2(n: usize, k: isize) -> BigUint {
    if k < 0 || k as usize > n {
        return BigUint::zero();
    }
    let k = k as usize;
    {
        let table = STIRLING.read().unwrap();
        if table.max_n() >= n {
            return table.get(n, k);
        }
    }
    let mut table = STIRLING.write().unwrap();
    table.grow_to(n);
    table.get(n, k)
}

/// Bell number: sum over k of S(n,k).
pub fn bell(n: usize) -> BigUint {
    (0..=n).map(|k| stirling2(n, k as isize)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 0), BigUint::from(1u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(3, -1), BigUint::zero());
    }

    #[test]
    fn stirling_small() {
        assert_eq!(stirling2(5, 3), BigUint::from(25u32));
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(6, 0), BigUint::zero());
        assert_eq!(stirling2(0, 0), BigUint::one());
    }

    #[test]
    fn bell_small() {
        assert_eq!(bell(0), BigUint::from(1u32));
        assert_eq!(bell(3), BigUint::from(5u32));
        assert_eq!(bell(5), BigUint::from(52u32));
    }

    #[test]
    fn stirling_triangle_rows() {
        // rows 1..5 of the triangle
        let expect: [&[u32]; 5] = [
            &[1],
            &[1, 1],
            &[1, 3, 1],
            &[1, 7, 6, 1],
            &[1, 15, 25, 10, 1],
        ];
        for (i, row) in expect.iter().enumerate() {
            let n = i + 1;
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(stirling2(n, (j + 1) as isize), BigUint::from(v));
            }
        }
    }

    proptest! {
        #[test]
        fn stirling_recurrence(n in 1usize..30, k in 1isize..30) {
            prop_assume!(k as usize <= n);
            let lhs = stirling2(n, k);
            let rhs = BigUint::from(k as usize) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn bell_is_row_sum(n in 0usize..20) {
            let sum: BigUint = (0..=n).map(|k| stirling2(n, k as isize)).sum();
            prop_assert_eq!(bell(n), sum);
        }

        #[test]
        fn binomial_symmetry(n in 0usize..40, k in 0isize..40) {
            prop_assume!(k as usize <= n);
            prop_assert_eq!(binomial(n, k), binomial(n, (n - k as usize) as isize));
        }
    }
}
