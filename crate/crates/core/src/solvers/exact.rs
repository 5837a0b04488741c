//! Exact algebra through the bidiagonal factors: determinant, linear solves
//! and the inverse.

use crate::bd::BidiagonalDecomposition;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPattern {
    /// Signs follow `s (-1)^i` for a fixed `s`, zeros allowed, not all zero.
    Alternating,
    /// Exactly one nonzero entry.
    SingleSupport,
    General,
}

/// A right-hand side together with its sign structure.
#[derive(Clone, Debug, PartialEq)]
pub struct SignPatternVector {
    values: Vec<Rational>,
    pattern: SignPattern,
}

impl SignPatternVector {
    pub fn new(values: Vec<Rational>) -> Self {
        let pattern = classify(&values);
        SignPatternVector { values, pattern }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn pattern(&self) -> SignPattern {
        self.pattern
    }

    /// Alternating or single support: the cases the factor sweeps solve without cancellation.
    pub fn is_sign_regular(&self) -> bool {
        self.pattern != SignPattern::General
    }
}

impl From<Vec<Rational>> for SignPatternVector {
    fn from(values: Vec<Rational>) -> Self {
        SignPatternVector::new(values)
    }
}

fn classify(values: &[Rational]) -> SignPattern {
    let nonzero = values.iter().filter(|v| !v.is_zero()).count();
    if nonzero == 0 {
        return SignPattern::General;
    }
    if nonzero == 1 {
        return SignPattern::SingleSupport;
    }
    let checkerboard = |s: i32| {
        values.iter().enumerate().all(|(i, v)| {
            let expected = if i % 2 == 0 { s } else { -s };
            v.signum() == 0 || v.signum() == expected
        })
    };
    if checkerboard(1) || checkerboard(-1) {
        SignPattern::Alternating
    } else {
        SignPattern::General
    }
}

/// `det A = d_1 d_2 ... d_n`; the bidiagonal factors are unit triangular.
pub fn determinant(bd: &BidiagonalDecomposition) -> Rational {
    (0..bd.n()).fold(Rational::one(), |acc, i| acc * bd.diag(i))
}

/// Intermediate vectors of the `2n - 1` factor solves, the last being `x`.
///
/// Order: `F_{n-1}^{-1}, ..., F_1^{-1}`, then `D^{-1}`, then `G_1^{-1}, ..., G_{n-1}^{-1}`.
pub fn solve_stages(bd: &BidiagonalDecomposition, b: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let n = bd.n();
    if b.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for a system of order {n}",
            b.len()
        )));
    }
    let mut stages = Vec::with_capacity(2 * n - 1);
    let mut y = b.to_vec();
    for k in (1..n).rev() {
        // F_k: y_r -= m_{r, r-k} y_{r-1}, top-down
        for r in k..n {
            let m = bd.lower(r, r - k);
            if !m.is_zero() && !y[r - 1].is_zero() {
                let t = m * &y[r - 1];
                y[r] -= &t;
            }
        }
        stages.push(y.clone());
    }
    for (i, v) in y.iter_mut().enumerate() {
        *v = v.checked_div(bd.diag(i))?;
    }
    stages.push(y.clone());
    for k in 1..n {
        // G_k: y_{c-1} -= u_{c-k, c} y_c, bottom-up
        for c in (k..n).rev() {
            let g = bd.upper(c - k, c);
            if !g.is_zero() && !y[c].is_zero() {
                let t = g * &y[c];
                y[c - 1] -= &t;
            }
        }
        stages.push(y.clone());
    }
    Ok(stages)
}

/// Exact solution of `expand(bd) x = b`.
pub fn solve(bd: &BidiagonalDecomposition, b: &SignPatternVector) -> Result<Vec<Rational>> {
    let mut stages = solve_stages(bd, b.values())?;
    Ok(stages.pop().expect("at least the diagonal stage"))
}

/// Exact inverse, one unit right-hand side per column.
pub fn inverse(bd: &BidiagonalDecomposition) -> Result<Matrix<Rational>> {
    let n = bd.n();
    let columns = (0..n)
        .map(|k| {
            let e: Vec<Rational> = (0..n)
                .map(|i| {
                    if i == k {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            solve(bd, &SignPatternVector::new(e))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(n, n, |i, j| columns[j][i].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    fn bd(rows: &[&[i64]]) -> BidiagonalDecomposition {
        BidiagonalDecomposition::from_packed(
            Matrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&v| q(v)).collect())
                    .collect(),
            )
            .unwrap(),
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> SignPatternVector {
        SignPatternVector::new(xs.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn classification() {
        assert_eq!(v(&[1, -2, 3]).pattern(), SignPattern::Alternating);
        assert_eq!(v(&[-1, 0, -3]).pattern(), SignPattern::Alternating);
        assert_eq!(v(&[0, 0, 5]).pattern(), SignPattern::SingleSupport);
        assert_eq!(v(&[1, 1]).pattern(), SignPattern::General);
        // adjacent products are <= 0 but the signs are not checkerboard
        assert_eq!(v(&[1, 0, -1]).pattern(), SignPattern::General);
        assert_eq!(v(&[0, 0]).pattern(), SignPattern::General);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&bd(&[&[1, 0], &[0, 1]])), q(1));
        assert_eq!(determinant(&bd(&[&[1, 2], &[1, 1]])), q(1));
        assert_eq!(determinant(&crate::bessel::bd_of_a(4)), q(45));
    }

    #[test]
    fn solves() {
        let id = bd(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            solve(&id, &v(&[4, -5, 6])).unwrap(),
            vec![q(4), q(-5), q(6)]
        );
        let m = bd(&[&[1, 2], &[1, 1]]);
        assert_eq!(solve(&m, &v(&[1, -1])).unwrap(), vec![q(5), q(-2)]);
        assert_eq!(solve(&m, &v(&[1, 1])).unwrap(), vec![q(1), q(0)]);
        assert!(solve(&m, &v(&[1])).is_err());
        assert_eq!(solve_stages(&m, &[q(1), q(-1)]).unwrap().len(), 3);
    }

    #[test]
    fn inverses() {
        let id = bd(&[&[1, 0], &[0, 1]]);
        assert_eq!(inverse(&id).unwrap(), Matrix::identity(2));
        let m = bd(&[&[1, 2], &[1, 1]]);
        assert_eq!(inverse(&m).unwrap().to_string(), "3 -2\n-1 1\n");
        let a6 = crate::bessel::bd_of_a(6);
        assert_eq!(
            inverse(&a6).unwrap().matmul(&a6.expand()).unwrap(),
            Matrix::identity(6)
        );
    }
}
