//! Closed formulas and recurrences for composition spectra: the basic
//! families, spectra of combined graphs, the generic inclusion-exclusion
//! evaluator over bad-component tables, and the specialized deletion
//! formulas for stars and matchings.
//!
//! Inclusion-exclusion sums are computed in signed arbitrary precision;
//! a negative final value means a formula or table bug and is reported
//! as an internal error rather than silently truncated.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, stirling2};
use crate::error::{Error, Result};
use crate::spectrum::{CoefficientTable, CompositionVector};

/// Spectrum of any tree on n vertices: C^k = binomial(n-1, k-1).
/// Shape independent.
pub fn tree_spectrum(n: usize) -> CompositionVector {
    CompositionVector::from_fn(n, |k| binomial(n - 1, k as isize - 1))
}

/// Spectrum of the n-cycle: C^1 = 1, C^k = binomial(n, k) for k > 1.
pub fn cycle_spectrum(n: usize) -> Result<CompositionVector> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle requires n >= 3, got {n}")));
    }
    Ok(CompositionVector::from_fn(n, |k| {
        if k == 1 {
            BigUint::one()
        } else {
            binomial(n, k as isize)
        }
    }))
}

/// Spectrum of the complete graph: C^k = S(n, k).
pub fn complete_spectrum(n: usize) -> CompositionVector {
    CompositionVector::from_fn(n, |k| stirling2(n, k as isize))
}

/// Spectrum of the disjoint union:
/// C^k = sum over j of C^j(G1) * C^(k-j)(G2).
pub fn disjoint_union_spectrum(
    c1: &CompositionVector,
    c2: &CompositionVector,
) -> CompositionVector {
    CompositionVector::from_fn(c1.len() + c2.len(), |k| {
        (1..k).map(|j| c1.get(j) * c2.get(k - j)).sum()
    })
}

/// Spectrum of two graphs glued at one shared vertex:
/// C^k = sum over j of C^j(G1) * C^(k+1-j)(G2).
pub fn shared_vertex_spectrum(
    c1: &CompositionVector,
    c2: &CompositionVector,
) -> CompositionVector {
    CompositionVector::from_fn(c1.len() + c2.len() - 1, |k| {
        (1..=k).map(|j| c1.get(j) * c2.get(k + 1 - j)).sum()
    })
}

/// Spectrum of two disjoint graphs joined by a single bridge edge:
/// C^k = sum over j of C^j(G1) * [C^(k+1-j)(G2) + C^(k-j)(G2)] + C^k(G1).
pub fn bridge_spectrum(c1: &CompositionVector, c2: &CompositionVector) -> CompositionVector {
    CompositionVector::from_fn(c1.len() + c2.len(), |k| {
        let cross: BigUint = (1..k)
            .map(|j| c1.get(j) * (c2.get(k + 1 - j) + c2.get(k - j)))
            .sum();
        cross + c1.get(k)
    })
}

fn to_nonnegative(value: BigInt, context: &str) -> Result<BigUint> {
    match value.to_biguint() {
        Some(v) => Ok(v),
        None => Err(Error::Internal(format!(
            "{context} produced negative value {value}"
        ))),
    }
}

fn signed(value: BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, value)
}

/// Generic inclusion-exclusion over a bad-component table:
/// C^k(K_N^{-G}) = sum over j, m of (-1)^m entry(j,m) * S(N-j, k-m).
pub fn deletion_spectrum(ambient: usize, table: &CoefficientTable, k: usize) -> Result<BigUint> {
    if table.n() > ambient {
        return Err(Error::AmbientTooSmall {
            ambient,
            n: table.n(),
        });
    }
    if k == 0 || k > ambient {
        return Err(Error::Precondition(format!(
            "k must satisfy 1 <= k <= N, got k={k}, N={ambient}"
        )));
    }
    let mut acc = BigInt::zero();
    for ((j, m), value) in table.iter() {
        let term = signed(value.clone()) * signed(stirling2(ambient - j, k as isize - m as isize));
        if m % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    to_nonnegative(acc, "deletion spectrum")
}

/// Full spectrum of K_N^{-G} via `deletion_spectrum`, k = 1..N.
pub fn deletion_spectrum_vector(ambient: usize, table: &CoefficientTable) -> Result<CompositionVector> {
    let mut out = CompositionVector::zeros(ambient);
    for k in 1..=ambient {
        out.set(k, deletion_spectrum(ambient, table, k)?);
    }
    Ok(out)
}

/// p-table for the path P_n, built by the recurrence
/// p(j,m,n) = p(j,m,n-1) + p(j-2,m-1,n-2) + p(j-3,m-1,n-3)
/// for j >= 3, m >= 1, n >= 3.
///
/// Base cases outside the recurrence's range:
/// p(0,0,n) = 1; p(j,m,n) = 0 when j > n, m > j, m > n, or j > m = 0;
/// p(1,m,n) = 0; p(2,1,n) = n-1 (the edges of P_n) and p(2,m,n) = 0 for
/// m != 1.
pub fn path_b_table(n: usize) -> CoefficientTable {
    let cube = path_b_cube(n);
    cube_to_table(&cube, n)
}

/// Dense table p[nn][j][m] for all nn <= n.
fn path_b_cube(n: usize) -> Vec<Vec<Vec<BigUint>>> {
    let mut p = vec![vec![vec![BigUint::zero(); n + 1]; n + 1]; n + 1];
    for nn in 0..=n {
        for j in 0..=nn {
            for m in 0..=j {
                p[nn][j][m] = match (j, m) {
                    (0, 0) => BigUint::one(),
                    (_, 0) => BigUint::zero(),
                    (1, _) => BigUint::zero(),
                    (2, 1) => BigUint::from(nn.saturating_sub(1)),
                    (2, _) => BigUint::zero(),
                    _ => {
                        // j >= 3, m >= 1; j <= nn forces nn >= 3
                        &p[nn - 1][j][m] + &p[nn - 2][j - 2][m - 1] + &p[nn - 3][j - 3][m - 1]
                    }
                };
            }
        }
    }
    p
}

fn cube_to_table(cube: &[Vec<Vec<BigUint>>], n: usize) -> CoefficientTable {
    let mut table = CoefficientTable::new(n);
    for (j, row) in cube[n].iter().enumerate() {
        for (m, value) in row.iter().enumerate().take(j + 1) {
            table.set(j, m, value.clone());
        }
    }
    table
}

/// c-table for the cycle C_n, n >= 3, built by
/// c(j,m,n) = p(j,m,n-1) + 2*p(j-2,m-1,n-2) + 3*p(j-3,m-1,n-3)
/// where the recurrence applies (j >= 3, and not n = j for n in {3,4}).
///
/// Cells outside the recurrence: c(2,1,n) = n (the edges of C_n);
/// the whole-cycle cells are c(3,1,3) = 1, c(4,1,4) = 1 (the cycle
/// itself is the unique bad component covering everything) and
/// c(4,2,4) = 2 (the two pairs of opposite edges of C4).
pub fn cycle_b_table(n: usize) -> Result<CoefficientTable> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle requires n >= 3, got {n}")));
    }
    let p = path_b_cube(n);
    let mut table = CoefficientTable::new(n);
    for j in 0..=n {
        for m in 0..=j {
            let value = match (j, m) {
                (0, 0) => BigUint::one(),
                (_, 0) => BigUint::zero(),
                (1, _) => BigUint::zero(),
                (2, 1) => BigUint::from(n),
                (2, _) => BigUint::zero(),
                _ if j == n && (n == 3 || n == 4) => match (n, m) {
                    (3, 1) => BigUint::one(),
                    (4, 1) => BigUint::one(),
                    (4, 2) => BigUint::from(2u32),
                    _ => BigUint::zero(),
                },
                _ => {
                    // j >= 3, m >= 1, n >= 3
                    let a = &p[n - 1][j][m];
                    let b = BigUint::from(2u32) * &p[n - 2][j - 2][m - 1];
                    let c = BigUint::from(3u32) * &p[n - 3][j - 3][m - 1];
                    a + b + c
                }
            };
            table.set(j, m, value);
        }
    }
    Ok(table)
}

/// Deletion of a star with `leaves` leaves (leaves + 1 vertices) from
/// K_N: C^k = S(N,k) - sum over j of binomial(leaves,j) * S(N-j-1, k-1).
pub fn star_deletion_spectrum(ambient: usize, leaves: usize, k: usize) -> Result<BigUint> {
    if leaves < 1 {
        return Err(Error::Precondition("star deletion requires at least one leaf".into()));
    }
    if leaves + 1 > ambient {
        return Err(Error::AmbientTooSmall {
            ambient,
            n: leaves + 1,
        });
    }
    let mut acc = signed(stirling2(ambient, k as isize));
    for j in 1..=leaves {
        acc -= signed(binomial(leaves, j as isize))
            * signed(stirling2(ambient - j - 1, k as isize - 1));
    }
    to_nonnegative(acc, "star deletion spectrum")
}

/// Deletion of n disjoint edges (2n vertices) from K_N:
/// C^k = sum over j of (-1)^j binomial(n,j) * S(N-2j, k-j).
pub fn matching_deletion_spectrum(ambient: usize, n: usize, k: usize) -> Result<BigUint> {
    if 2 * n > ambient {
        return Err(Error::AmbientTooSmall { ambient, n: 2 * n });
    }
    let mut acc = BigInt::zero();
    for j in 0..=n {
        let term = signed(binomial(n, j as isize))
            * signed(stirling2(ambient - 2 * j, k as isize - j as isize));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    to_nonnegative(acc, "matching deletion spectrum")
}

/// True iff binomial(n-1,k-1) <= C^k <= S(n,k) holds for every k.
/// The bounds are only claimed for connected graphs.
pub fn spectrum_bounds_check(c: &CompositionVector, connected: bool) -> bool {
    assert!(connected, "bounds are only claimed for connected graphs");
    let n = c.len();
    (1..=n).all(|k| {
        let v = c.get(k);
        binomial(n - 1, k as isize - 1) <= v && v <= stirling2(n, k as isize)
    })
}
