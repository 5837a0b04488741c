//! Neville elimination over exact rationals.
//!
//! Column `t` is cleared bottom-up by subtracting from each row a multiple of
//! the row directly above it. Before clearing, rows with a zero in column `t`
//! (at or below the diagonal) are moved to the bottom, preserving order.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;

/// Pivots, multipliers and the final upper-triangular matrix of one elimination.
///
/// Indices are 0-based: `pivot(i, j)` is defined for `j <= i`, `multiplier(i, j)` for `j < i`.
#[derive(Clone, Debug, PartialEq)]
pub struct NevilleResult {
    pivots: Vec<Vec<Rational>>,
    multipliers: Vec<Vec<Rational>>,
    pub upper: Matrix<Rational>,
    pub row_exchanges_used: bool,
}

impl NevilleResult {
    pub fn n(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot(&self, i: usize, j: usize) -> &Rational {
        assert!(j <= i, "pivot ({i}, {j}) is above the diagonal");
        &self.pivots[i][j]
    }

    pub fn multiplier(&self, i: usize, j: usize) -> &Rational {
        assert!(
            j < i,
            "multiplier ({i}, {j}) is not strictly below the diagonal"
        );
        &self.multipliers[i][j]
    }

    pub fn diagonal_pivots(&self) -> impl Iterator<Item = &Rational> {
        self.pivots.iter().enumerate().map(|(i, row)| &row[i])
    }

    pub fn all_pivots(&self) -> impl Iterator<Item = &Rational> {
        self.pivots.iter().flatten()
    }
}

/// Runs the full elimination `A = A(1) -> ... -> A(n) = U` exactly.
pub fn neville_eliminate(a: &Matrix<Rational>) -> Result<NevilleResult> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "Neville elimination needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut work = a.clone();
    let mut pivots: Vec<Vec<Rational>> = (0..n).map(|i| Vec::with_capacity(i + 1)).collect();
    let mut multipliers: Vec<Vec<Rational>> = (0..n).map(Vec::with_capacity).collect();
    let mut exchanged = false;

    for t in 0..n {
        exchanged |= sink_zero_rows(&mut work, t);
        if work[(t, t)].is_zero() {
            return Err(Error::SingularMatrix(format!(
                "column {} has no nonzero pivot",
                t + 1
            )));
        }
        for i in t..n {
            pivots[i].push(work[(i, t)].clone());
        }
        for i in t + 1..n {
            let above = &pivots[i - 1][t];
            let m = if above.is_zero() {
                Rational::zero()
            } else {
                &pivots[i][t] / above
            };
            multipliers[i].push(m);
        }
        // bottom-up so that row i - 1 still holds its step-t values
        for i in (t + 1..n).rev() {
            let m = multipliers[i][t].clone();
            if m.is_zero() {
                continue;
            }
            work[(i, t)] = Rational::zero();
            for j in t + 1..n {
                if work[(i - 1, j)].is_zero() {
                    continue;
                }
                let delta = &m * &work[(i - 1, j)];
                work[(i, j)] -= &delta;
            }
        }
    }

    Ok(NevilleResult {
        pivots,
        multipliers,
        upper: work,
        row_exchanges_used: exchanged,
    })
}

/// Stable partition of rows `t..n` so that rows with a zero in column `t` come last.
/// Returns whether the row order changed.
fn sink_zero_rows(work: &mut Matrix<Rational>, t: usize) -> bool {
    let n = work.rows();
    let order: Vec<usize> = (t..n)
        .filter(|&i| !work[(i, t)].is_zero())
        .chain((t..n).filter(|&i| work[(i, t)].is_zero()))
        .collect();
    if order.iter().copied().eq(t..n) {
        return false;
    }
    let rows: Vec<Vec<Rational>> = order.iter().map(|&i| work.row(i).to_vec()).collect();
    for (k, row) in rows.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            work[(t + k, j)] = v;
        }
    }
    true
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

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn identity_has_unit_pivots() {
        let ne = neville_eliminate(&Matrix::identity(3)).unwrap();
        assert!(!ne.row_exchanges_used);
        assert!(ne.diagonal_pivots().all(|p| *p == 1));
        for i in 1..3 {
            for j in 0..i {
                assert!(ne.multiplier(i, j).is_zero());
            }
        }
    }

    #[test]
    fn bessel_basis_order_three() {
        let ne = neville_eliminate(&mat(&[&[1, 0, 0], &[1, 1, 0], &[1, 3, 3]])).unwrap();
        assert_eq!(*ne.multiplier(1, 0), q(1));
        assert_eq!(*ne.multiplier(2, 0), q(1));
        assert_eq!(*ne.multiplier(2, 1), q(2));
        let diag: Vec<_> = ne.diagonal_pivots().cloned().collect();
        assert_eq!(diag, vec![q(1), q(1), q(3)]);
        assert!(!ne.row_exchanges_used);
    }

    #[test]
    fn vandermonde_one_two_three() {
        let ne = neville_eliminate(&mat(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]])).unwrap();
        let diag: Vec<_> = ne.diagonal_pivots().cloned().collect();
        assert_eq!(diag, vec![q(1), q(1), q(2)]);
        assert_eq!(*ne.multiplier(1, 0), q(1));
        assert_eq!(*ne.multiplier(2, 0), q(1));
        assert_eq!(*ne.multiplier(2, 1), q(1));
        assert_eq!(ne.upper, mat(&[&[1, 1, 1], &[0, 1, 3], &[0, 0, 2]]));
    }

    #[test]
    fn zero_rows_are_sunk() {
        let ne = neville_eliminate(&mat(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(ne.row_exchanges_used);
        assert_eq!(ne.upper, mat(&[&[1, 0], &[0, 1]]));
        // a zero already at the bottom is not an exchange
        let ne = neville_eliminate(&mat(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(!ne.row_exchanges_used);
    }

    #[test]
    fn zero_pivot_above_gives_zero_multiplier() {
        // column 1 = (1, 0, 0): rows 2 and 3 are already zero
        let ne = neville_eliminate(&mat(&[&[1, 1, 1], &[0, 1, 1], &[0, 1, 2]])).unwrap();
        assert!(ne.multiplier(1, 0).is_zero());
        assert!(ne.multiplier(2, 0).is_zero());
        assert_eq!(*ne.multiplier(2, 1), q(1));
    }

    #[test]
    fn singular_is_reported() {
        assert!(matches!(
            neville_eliminate(&mat(&[&[1, 2], &[2, 4]])),
            Err(Error::SingularMatrix(_))
        ));
        assert!(matches!(
            neville_eliminate(&mat(&[&[0, 1], &[0, 2]])),
            Err(Error::SingularMatrix(_))
        ));
    }

    #[test]
    fn non_tp_pivot_sign() {
        let ne = neville_eliminate(&mat(&[&[1, 2], &[3, 1]])).unwrap();
        assert_eq!(*ne.pivot(1, 1), q(-5));
    }
}
