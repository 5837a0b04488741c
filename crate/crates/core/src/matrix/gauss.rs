//! Exact Gaussian elimination with partial pivoting on nonzero entries.
//! Used as an independent reference for determinants, solves and inverses.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;

fn require_square(a: &Matrix<Rational>) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "expected a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(a.rows())
}

pub fn exact_determinant(a: &Matrix<Rational>) -> Result<Rational> {
    let n = require_square(a)?;
    let mut w = a.clone();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !w[(i, k)].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            w.swap_rows(p, k);
            det = -det;
        }
        let pivot = w[(k, k)].clone();
        det *= &pivot;
        for i in k + 1..n {
            if w[(i, k)].is_zero() {
                continue;
            }
            let f = &w[(i, k)] / &pivot;
            for j in k + 1..n {
                let d = &f * &w[(k, j)];
                w[(i, j)] -= &d;
            }
            w[(i, k)] = Rational::zero();
        }
    }
    Ok(det)
}

/// Solves `A X = B` for every column of `B` by Gauss-Jordan elimination.
pub fn exact_solve_many(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let n = require_square(a)?;
    if b.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} rows, expected {n}",
            b.rows()
        )));
    }
    let m = b.cols();
    let mut w = Matrix::from_fn(n, n + m, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[(i, j - n)].clone()
        }
    });
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !w[(i, k)].is_zero())
            .ok_or_else(|| Error::SingularMatrix(format!("no pivot in column {}", k + 1)))?;
        w.swap_rows(p, k);
        let pivot = w[(k, k)].clone();
        for j in k..n + m {
            w[(k, j)] = &w[(k, j)] / &pivot;
        }
        for i in 0..n {
            if i == k || w[(i, k)].is_zero() {
                continue;
            }
            let f = w[(i, k)].clone();
            for j in k..n + m {
                let d = &f * &w[(k, j)];
                w[(i, j)] -= &d;
            }
        }
    }
    Ok(Matrix::from_fn(n, m, |i, j| w[(i, n + j)].clone()))
}

pub fn exact_solve(a: &Matrix<Rational>, b: &[Rational]) -> Result<Vec<Rational>> {
    let rhs = Matrix::new(b.len(), 1, b.to_vec())?;
    let x = exact_solve_many(a, &rhs)?;
    Ok(x.as_slice().to_vec())
}

pub fn exact_inverse(a: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let n = require_square(a)?;
    exact_solve_many(a, &Matrix::identity(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn determinant_and_inverse_two_by_two() {
        let m = mat(&[&[1, 2], &[1, 3]]);
        assert_eq!(exact_determinant(&m).unwrap(), Rational::one());
        assert_eq!(exact_inverse(&m).unwrap(), mat(&[&[3, -2], &[-1, 1]]));
        assert_eq!(
            exact_determinant(&mat(&[&[0, 1], &[1, 0]])).unwrap(),
            Rational::from(-1)
        );
        assert!(exact_determinant(&mat(&[&[1, 2], &[2, 4]]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn solve_checks() {
        let m = mat(&[&[1, 2], &[1, 3]]);
        let x = exact_solve(&m, &[Rational::from(1), Rational::from(-1)]).unwrap();
        assert_eq!(x, vec![Rational::from(5), Rational::from(-2)]);
        assert!(exact_solve(
            &mat(&[&[1, 2], &[2, 4]]),
            &[Rational::one(), Rational::one()]
        )
        .is_err());
    }
}
