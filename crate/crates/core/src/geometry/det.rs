//! Exact determinant signs and ranks of integer matrices by fraction-free
//! (Bareiss) elimination. Every intermediate entry is a minor of the input,
//! so the divisions are exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Sign of the determinant of a square `i128` matrix. The caller bounds the
/// entries with [`fits_small`] so no intermediate product overflows.
pub fn det_sign_small(mut m: Vec<Vec<i128>>) -> Ordering {
    let n = m.len();
    if n == 0 {
        return Ordering::Greater;
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(p) => {
                    m.swap(k, p);
                    negate = !negate;
                }
                None => return Ordering::Equal,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    let s = m[n - 1][n - 1].cmp(&0);
    if negate {
        s.reverse()
    } else {
        s
    }
}

/// Same as [`det_sign_small`] over arbitrary-precision integers.
pub fn det_sign(mut m: Vec<Vec<BigInt>>) -> Ordering {
    let n = m.len();
    if n == 0 {
        return Ordering::Greater;
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    negate = !negate;
                }
                None => return Ordering::Equal,
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let last = &m[n - 1][n - 1];
    let s = if last.is_zero() {
        Ordering::Equal
    } else if last.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    };
    if negate {
        s.reverse()
    } else {
        s
    }
}

/// Rank of a rectangular integer matrix (fraction-free row echelon form).
pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            for j in c + 1..cols {
                let v = &row[j] * &pivot_row[c] - &row[c] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Whether a `dim × dim` Bareiss run on entries bounded by `max_abs` stays
/// well inside `i128`: the largest intermediate is a product of two minors,
/// each at most `(√dim · max_abs)^dim` by Hadamard's inequality.
pub fn fits_small(dim: usize, max_abs: u128) -> bool {
    if dim == 0 {
        return true;
    }
    let d = dim as f64;
    let log_minor = d * ((max_abs.max(1) as f64).log2() + 0.5 * d.log2());
    2.0 * log_minor < 120.0
}
