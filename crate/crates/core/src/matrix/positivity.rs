//! Total positivity tests.

use crate::error::{Error, Result};
use crate::matrix::gauss::exact_determinant;
use crate::matrix::neville::{neville_eliminate, NevilleResult};
use crate::matrix::Matrix;
use crate::scalar::Rational;

/// Default order limit for brute-force minor enumeration.
pub const DEFAULT_MAX_MINOR_ORDER: usize = 7;

fn clean(ne: &NevilleResult) -> bool {
    !ne.row_exchanges_used && ne.all_pivots().all(|p| !p.is_negative())
}

/// Elimination of `A` when `A` passes the nonsingular TP test, `None` otherwise.
pub(crate) fn tp_elimination(a: &Matrix<Rational>) -> Result<Option<NevilleResult>> {
    let ne = neville_eliminate(a)?;
    if !clean(&ne) {
        return Ok(None);
    }
    let ne_ut = neville_eliminate(&ne.upper.transpose())?;
    Ok(clean(&ne_ut).then_some(ne))
}

/// A nonsingular matrix is TP iff the eliminations of `A` and of `U^T` need no
/// row exchanges and produce only nonnegative pivots.
pub fn is_tp_nonsingular(a: &Matrix<Rational>) -> Result<bool> {
    Ok(tp_elimination(a)?.is_some())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Visits every square minor by order, then by lexicographic row and column
/// subsets, stopping at the first one failing `accept`.
fn every_minor(
    a: &Matrix<Rational>,
    max_n: usize,
    accept: impl Fn(&Rational) -> bool,
) -> Result<bool> {
    let n = a.rows().max(a.cols());
    if n > max_n {
        return Err(Error::TooLarge { n, max: max_n });
    }
    for k in 1..=a.rows().min(a.cols()) {
        let row_sets = combinations(a.rows(), k);
        let col_sets = combinations(a.cols(), k);
        for rows in &row_sets {
            for cols in &col_sets {
                if !accept(&exact_determinant(&a.select(rows, cols))?) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Brute force: every minor is `>= 0`.
pub fn all_minors_nonnegative(a: &Matrix<Rational>, max_n: usize) -> Result<bool> {
    every_minor(a, max_n, |d| !d.is_negative())
}

/// Brute force: every minor is `> 0` (strict total positivity).
pub fn all_minors_positive(a: &Matrix<Rational>, max_n: usize) -> Result<bool> {
    every_minor(a, max_n, Rational::is_positive)
}
