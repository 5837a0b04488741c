//! Bidiagonal decomposition `A = F_{n-1} ... F_1 D G_1 ... G_{n-1}` of a
//! nonsingular totally positive matrix.
//!
//! The decomposition is stored packed in one `n x n` array:
//!
//! * `(i, i)`: diagonal pivot `p_ii` (the entries of `D`),
//! * `(i, j)`, `i > j`: multiplier `m_ij` of the elimination of `A`,
//! * `(i, j)`, `i < j`: multiplier `m~_ji` of the elimination of `A^T`.
//!
//! `F_k` is unit lower bidiagonal with `F_k[r, r-1] = m_{r, r-k}` for `r >= k`
//! (0-based `r`), and `G_k` is its upper counterpart built from the
//! transposed multipliers.

mod format;

use std::fmt;

pub use format::{format_bdf, parse_bdf};

use crate::error::{Error, Result};
use crate::matrix::{neville_eliminate, tp_elimination, Matrix};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct BidiagonalDecomposition {
    packed: Matrix<Rational>,
}

/// A broken invariant of a packed decomposition. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NonPositiveDiagonal {
        i: usize,
    },
    NegativeLower {
        i: usize,
        j: usize,
    },
    NegativeUpper {
        i: usize,
        j: usize,
    },
    /// `m_ij = 0` while `m_hj != 0` for some `h > i`.
    LowerZeroPattern {
        i: usize,
        j: usize,
        h: usize,
    },
    /// `m~_ij = 0` while `m~_hj != 0` for some `h > i`, reported at packed positions `(j, i)` and `(j, h)`.
    UpperZeroPattern {
        i: usize,
        j: usize,
        h: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NonPositiveDiagonal { i } => write!(f, "d_{i} not positive"),
            Violation::NegativeLower { i, j } => write!(f, "m_{i}{j} is negative"),
            Violation::NegativeUpper { i, j } => write!(f, "u_{i}{j} is negative"),
            Violation::LowerZeroPattern { i, j, h } => {
                write!(
                    f,
                    "m_ij=0 => m_hj=0 for all h>i violated: m_{i}{j} = 0 but m_{h}{j} != 0"
                )
            }
            Violation::UpperZeroPattern { i, j, h } => write!(
                f,
                "m~_ij=0 => m~_hj=0 for all h>i violated: u_{j}{i} = 0 but u_{j}{h} != 0"
            ),
        }
    }
}

impl BidiagonalDecomposition {
    /// Wraps a packed array without validating it; see [`Self::validate`].
    pub fn from_packed(packed: Matrix<Rational>) -> Result<Self> {
        if !packed.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "packed decomposition must be square, got {}x{}",
                packed.rows(),
                packed.cols()
            )));
        }
        Ok(BidiagonalDecomposition { packed })
    }

    /// Decomposition with the given diagonal and all multipliers zero.
    pub fn diagonal(d: Vec<Rational>) -> Result<Self> {
        let n = d.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("empty diagonal".into()));
        }
        Self::from_packed(Matrix::from_fn(n, n, |i, j| {
            if i == j {
                d[i].clone()
            } else {
                Rational::zero()
            }
        }))
    }

    /// The unique decomposition of a nonsingular TP matrix, from the
    /// eliminations of `A` and `A^T`.
    pub fn from_matrix(a: &Matrix<Rational>) -> Result<Self> {
        let lower = tp_elimination(a)?.ok_or_else(|| {
            Error::NotTotallyPositive("elimination needs row exchanges or negative pivots".into())
        })?;
        let upper = neville_eliminate(&a.transpose())?;
        if upper.row_exchanges_used || upper.all_pivots().any(Rational::is_negative) {
            return Err(Error::NotTotallyPositive(
                "transposed elimination is not clean".into(),
            ));
        }
        let n = a.rows();
        let packed = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => lower.pivot(i, i).clone(),
            std::cmp::Ordering::Greater => lower.multiplier(i, j).clone(),
            std::cmp::Ordering::Less => upper.multiplier(j, i).clone(),
        });
        Ok(BidiagonalDecomposition { packed })
    }

    pub fn n(&self) -> usize {
        self.packed.rows()
    }

    pub fn packed(&self) -> &Matrix<Rational> {
        &self.packed
    }

    /// `d_i` (0-based).
    pub fn diag(&self, i: usize) -> &Rational {
        &self.packed[(i, i)]
    }

    /// `m_ij` for `i > j` (0-based).
    pub fn lower(&self, i: usize, j: usize) -> &Rational {
        assert!(i > j);
        &self.packed[(i, j)]
    }

    /// Packed upper entry `u_ij = m~_ji` for `i < j` (0-based).
    pub fn upper(&self, i: usize, j: usize) -> &Rational {
        assert!(i < j);
        &self.packed[(i, j)]
    }

    /// Multiplies the bidiagonal factors back together. Only products and
    /// sums of nonnegative terms occur.
    pub fn expand(&self) -> Matrix<Rational> {
        let n = self.n();
        let mut x = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                self.diag(i).clone()
            } else {
                Rational::zero()
            }
        });
        // D G_1 ... G_{n-1}
        for k in 1..n {
            for c in (k..n).rev() {
                let g = self.upper(c - k, c);
                if g.is_zero() {
                    continue;
                }
                for r in 0..n {
                    if !x[(r, c - 1)].is_zero() {
                        let add = g * &x[(r, c - 1)];
                        x[(r, c)] += &add;
                    }
                }
            }
        }
        // F_{n-1} ... F_1 (D G_1 ... G_{n-1})
        for k in 1..n {
            for r in (k..n).rev() {
                let f = self.lower(r, r - k);
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    if !x[(r - 1, c)].is_zero() {
                        let add = f * &x[(r - 1, c)];
                        x[(r, c)] += &add;
                    }
                }
            }
        }
        x
    }

    /// Decomposition of `A^T`: the packed array transposed.
    pub fn transpose(&self) -> Self {
        BidiagonalDecomposition {
            packed: self.packed.transpose(),
        }
    }

    /// Decomposition of the product of the two expanded matrices.
    pub fn product(&self, rhs: &BidiagonalDecomposition) -> Result<Self> {
        if self.n() != rhs.n() {
            return Err(Error::DimensionMismatch(format!(
                "product of decompositions of order {} and {}",
                self.n(),
                rhs.n()
            )));
        }
        let prod = self.expand().matmul(&rhs.expand())?;
        Self::from_matrix(&prod)
    }

    /// Every violated positivity or uniqueness condition; empty when valid.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.n();
        let p = &self.packed;
        let mut out = Vec::new();
        for i in 0..n {
            if !p[(i, i)].is_positive() {
                out.push(Violation::NonPositiveDiagonal { i: i + 1 });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if p[(i, j)].is_negative() {
                    match i.cmp(&j) {
                        std::cmp::Ordering::Greater => {
                            out.push(Violation::NegativeLower { i: i + 1, j: j + 1 })
                        }
                        std::cmp::Ordering::Less => {
                            out.push(Violation::NegativeUpper { i: i + 1, j: j + 1 })
                        }
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
        }
        // zero multipliers must stay zero further down their elimination column
        for j in 0..n {
            for i in j + 1..n {
                if p[(i, j)].is_zero() {
                    if let Some(h) = (i + 1..n).find(|&h| !p[(h, j)].is_zero()) {
                        out.push(Violation::LowerZeroPattern {
                            i: i + 1,
                            j: j + 1,
                            h: h + 1,
                        });
                    }
                }
                // m~_ij lives at packed (j, i)
                if p[(j, i)].is_zero() {
                    if let Some(h) = (i + 1..n).find(|&h| !p[(j, h)].is_zero()) {
                        out.push(Violation::UpperZeroPattern {
                            i: i + 1,
                            j: j + 1,
                            h: h + 1,
                        });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for BidiagonalDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.packed)
    }
}
