//! Exact rational linear algebra: fraction-free row reduction and kernel
//! bases for integer matrices.
//!
//! The oracles reduce feasibility questions to kernels of small integer
//! matrices. Everything here is exact; rows are kept as `BigInt` vectors and
//! normalized by their content gcd so entries stay small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rat;

/// A matrix in reduced row echelon shape over the integers (each row scaled
/// to integer entries with content 1, pivot entries positive, pivot columns
/// cleared in all other rows).
#[derive(Debug, Clone)]
pub struct Echelon {
    pub ncols: usize,
    /// Rows paired with their pivot column, in increasing pivot order.
    pub rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Reduces `row` against the echelon rows. Returns the remainder, scaled
    /// by an arbitrary positive integer (content-normalized).
    pub fn reduce(&self, mut row: Vec<BigInt>) -> Vec<BigInt> {
        for (p, r) in &self.rows {
            if !row[*p].is_zero() {
                let a = r[*p].clone();
                let b = row[*p].clone();
                for c in 0..self.ncols {
                    row[c] = &row[c] * &a - &r[c] * &b;
                }
            }
        }
        normalize_content(&mut row);
        row
    }

    /// Inserts a row, returning true if it increased the rank.
    pub fn insert(&mut self, row: Vec<BigInt>) -> bool {
        let row = self.reduce(row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // Clear the new pivot column from the existing rows.
        let mut row = row;
        if row[p].is_negative() {
            for x in row.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        for (_, r) in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let a = row[p].clone();
                let b = r[p].clone();
                for c in 0..self.ncols {
                    r[c] = &r[c] * &a - &row[c] * &b;
                }
                normalize_content(r);
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, row));
        true
    }

    /// True iff `row` lies in the row span.
    pub fn spans(&self, row: Vec<BigInt>) -> bool {
        self.reduce(row).iter().all(|x| x.is_zero())
    }
}

fn normalize_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// Builds the echelon form of the given rows.
pub fn echelon(ncols: usize, rows: impl IntoIterator<Item = Vec<BigInt>>) -> Echelon {
    let mut e = Echelon { ncols, rows: Vec::new() };
    for row in rows {
        debug_assert_eq!(row.len(), ncols);
        e.insert(row);
    }
    e
}

/// Rational basis of the right kernel {x : A x = 0} of the row set.
///
/// One basis vector per free column, in increasing column order; the vector
/// for free column f has x_f = 1 and zeros at all other free columns, so the
/// basis is deterministic.
pub fn kernel_basis(ncols: usize, rows: impl IntoIterator<Item = Vec<BigInt>>) -> Vec<Vec<Rat>> {
    let e = echelon(ncols, rows);
    let pivots = e.pivot_cols();
    let is_pivot = {
        let mut v = vec![false; ncols];
        for p in &pivots {
            v[*p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for f in 0..ncols {
        if is_pivot[f] {
            continue;
        }
        let mut x = vec![Rat::zero(); ncols];
        x[f] = Rat::one();
        for (p, r) in &e.rows {
            // Row is p-pivotal and cleared at other pivots: x_p = -r[f]/r[p].
            x[*p] = -Rat::new(r[f].clone(), r[*p].clone());
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn kernel_of_simple_system() {
        // x + y + z = 0, x - z = 0 -> kernel spanned by (1, -2, 1).
        let rows = vec![vec![bi(1), bi(1), bi(1)], vec![bi(1), bi(0), bi(-1)]];
        let basis = kernel_basis(3, rows);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let s: Rat = v[0].clone() + v[1].clone() + v[2].clone();
        assert!(s.is_zero());
        assert_eq!(v[0], v[2]);
        assert!(!v[0].is_zero());
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let rows = vec![vec![bi(2), bi(0)], vec![bi(3), bi(5)]];
        assert!(kernel_basis(2, rows).is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_identity() {
        let basis = kernel_basis(3, vec![vec![bi(0), bi(0), bi(0)]]);
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x == Rat::one(), i == j);
                assert_eq!(x.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn spans_detects_membership() {
        let e = echelon(3, vec![vec![bi(1), bi(2), bi(3)], vec![bi(0), bi(1), bi(1)]]);
        assert!(e.spans(vec![bi(2), bi(5), bi(7)]));
        assert!(!e.spans(vec![bi(0), bi(0), bi(1)]));
    }
}
