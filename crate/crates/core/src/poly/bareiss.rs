//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Runs Bareiss elimination on the leading `n` columns of `rows` in place,
/// applying the same operations to any extra columns. Returns the sign of the
/// row permutation, or `None` if the leading block is singular.
fn eliminate(rows: &mut [Vec<BigInt>], n: usize) -> Option<bool> {
    let mut negated = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if rows[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&i| !rows[i][k].is_zero())?;
            rows.swap(k, pivot);
            negated = !negated;
        }
        let (upper, lower) = rows.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pkk = &pivot_row[k];
        for row in lower.iter_mut() {
            let rik = std::mem::take(&mut row[k]);
            for j in k + 1..row.len() {
                let v = &row[j] * pkk - &rik * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pkk.clone();
    }
    Some(negated)
}

/// Determinant of a square integer matrix given as rows.
pub fn determinant(mut rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    match eliminate(&mut rows, n) {
        None => BigInt::zero(),
        Some(negated) => {
            let d = rows[n - 1][n - 1].clone();
            if negated {
                -d
            } else {
                d
            }
        }
    }
}

/// Solves `M x = b` over the rationals without leaving the integers.
///
/// Returns `(det, y)` with `det = det(M)` and `x = y / det`, i.e. `y` is the
/// adjugate applied to `b`. `None` when `M` is singular.
pub fn solve_fraction_free(
    matrix: &[Vec<BigInt>],
    rhs: &[BigInt],
) -> Option<(BigInt, Vec<BigInt>)> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n, "right-hand side length mismatch");
    if n == 0 {
        return Some((BigInt::one(), Vec::new()));
    }
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let negated = eliminate(&mut rows, n)?;
    let last = rows[n - 1][n - 1].clone();
    // rows now hold an upper triangular system with the same solution; scale
    // the unknowns by the final pivot so every step divides exactly.
    let mut y = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &last * &rows[i][n];
        for j in i + 1..n {
            acc -= &rows[i][j] * &y[j];
        }
        y[i] = acc / &rows[i][i];
    }
    if negated {
        // det(M) = -last; y was scaled by last, rescale to det(M)
        for v in &mut y {
            *v = -&*v;
        }
        Some((-last, y))
    } else {
        Some((last, y))
    }
}

/// Matrix of multiplication by `f` on `Z[X]/(X^n - a)` in the basis
/// `1, X, ..., X^(n-1)`; column `j` holds the coordinates of `X^j * f`.
pub fn mult_matrix(f: &IntPoly, n: usize, a: &BigInt) -> Vec<Vec<BigInt>> {
    let mut reduced = vec![BigInt::zero(); n];
    // X^i = a^(i / n) X^(i mod n)
    let mut wrap = BigInt::one();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i > 0 && i % n == 0 {
            wrap *= a;
        }
        reduced[i % n] += c * &wrap;
    }
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    #[allow(clippy::needless_range_loop)]
    for j in 0..n {
        for (i, r) in reduced.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let t = i + j;
            rows[t % n][j] = if t >= n { r * a } else { r.clone() };
        }
    }
    rows
}

/// Determinant of multiplication by `f` on the rank-`n` module `Z[X]/(X^n - a)`,
/// i.e. the norm of `f(x)`. Agrees with `Res(X^n - a, f)`.
pub fn mult_matrix_det(f: &IntPoly, n: u64, a: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if a == 0 {
        return Err(Error::invalid("a must be nonzero"));
    }
    let n = usize::try_from(n).map_err(|_| Error::size("n does not fit in memory"))?;
    Ok(determinant(mult_matrix(f, n, &BigInt::from(a))))
}
