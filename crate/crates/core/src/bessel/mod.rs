//! Bessel and reverse Bessel polynomials, their change-of-basis matrices and
//! the bidiagonal decompositions of their collocation matrices.
//!
//! With `A` (resp. `C`) the lower-triangular matrix whose row `i` holds the
//! coefficients of `B_{i-1}` (resp. `B^r_{i-1}`), the collocation matrix at
//! nodes `t` factors as `M = V A^T` (resp. `M_r = V C^T`) with `V` the
//! Vandermonde matrix. Both `A` and `C` have closed-form decompositions, so
//! the decomposition of `M` is the product of two known decompositions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::bd::BidiagonalDecomposition;
use crate::error::{Error, Result};
use crate::matrix::{vandermonde_matrix, Matrix, NodeSequence};
use crate::scalar::Rational;

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn pow2(k: u64) -> BigUint {
    BigUint::one() << k
}

/// `n!! = n (n - 2) (n - 4) ...`, ending at 1 or 2; `0!! = 1`.
pub fn semifactorial(n: u64) -> BigUint {
    (0..n / 2).fold(BigUint::one(), |acc, k| acc * (n - 2 * k))
}

/// Nonnegative integer coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialCoeffs(Vec<BigUint>);

impl PolynomialCoeffs {
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.0
    }

    /// Horner evaluation in exact arithmetic.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from(c.clone())
        })
    }
}

fn bessel_coeff(n: u64, k: u64) -> BigUint {
    factorial(n + k) / (pow2(k) * factorial(n - k) * factorial(k))
}

/// `B_n(x) = sum_k (n+k)! / (2^k (n-k)! k!) x^k`.
pub fn bessel_poly(n: usize) -> PolynomialCoeffs {
    let n = n as u64;
    PolynomialCoeffs((0..=n).map(|k| bessel_coeff(n, k)).collect())
}

/// `B_n` with its coefficients reversed.
pub fn reverse_bessel_poly(n: usize) -> PolynomialCoeffs {
    let mut c = bessel_poly(n).0;
    c.reverse();
    PolynomialCoeffs(c)
}

/// Lower-triangular `a_ij = (i+j-2)! / (2^(j-1) (i-j)! (j-1)!)` (1-based).
pub fn basis_matrix_a(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |r, c| {
        let (i, j) = (r as u64 + 1, c as u64 + 1);
        if i < j {
            return Rational::zero();
        }
        let num = factorial(i + j - 2);
        let den = pow2(j - 1) * factorial(i - j) * factorial(j - 1);
        Rational::from(num / den)
    })
}

/// Lower-triangular `c_ij = (2i-j-1)! / (2^(i-j) (j-1)! (i-j)!)` (1-based).
pub fn basis_matrix_c(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |r, c| {
        let (i, j) = (r as u64 + 1, c as u64 + 1);
        if i < j {
            return Rational::zero();
        }
        let num = factorial(2 * i - j - 1);
        let den = pow2(i - j) * factorial(j - 1) * factorial(i - j);
        Rational::from(num / den)
    })
}

/// Closed-form elimination pivot `p_ij` of `A` (1-based, `j <= i`).
pub fn pivot_of_a(i: u64, j: u64) -> Rational {
    assert!(1 <= j && j <= i);
    let mut p = Rational::from(factorial(i - 1)) / Rational::from(pow2(j - 1) * factorial(i - j));
    for r in 1..j {
        p = p * Rational::new((2 * i - r - 1) as i64, (i - j + r) as i64).expect("nonzero");
    }
    p
}

/// Closed-form elimination pivot `p_ij` of `C` (1-based, `j <= i`).
pub fn pivot_of_c(i: u64, j: u64) -> Rational {
    assert!(1 <= j && j <= i);
    if j % 2 == 1 {
        Rational::from(factorial(2 * i - 2 * j) / (pow2(i - j) * factorial(i - j)))
    } else if i == j {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Decomposition of `A`: multipliers `(2i-2)(2i-3) / ((2i-j-1)(2i-j-2))`,
/// diagonal `1, 1!!, 3!!, 5!!, ...`, nothing above the diagonal.
pub fn bd_of_a(n: usize) -> BidiagonalDecomposition {
    let packed = Matrix::from_fn(n, n, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        match i.cmp(&j) {
            std::cmp::Ordering::Greater => {
                Rational::new((2 * i - 2) * (2 * i - 3), (2 * i - j - 1) * (2 * i - j - 2))
                    .expect("nonzero denominator")
            }
            std::cmp::Ordering::Equal if i == 1 => Rational::one(),
            std::cmp::Ordering::Equal => Rational::from(semifactorial((2 * i - 3) as u64)),
            std::cmp::Ordering::Less => Rational::zero(),
        }
    });
    BidiagonalDecomposition::from_packed(packed).expect("square")
}

/// Decomposition of `C`: multipliers `2i-2j-1` in odd columns, zero in even
/// columns, unit diagonal, nothing above the diagonal.
pub fn bd_of_c(n: usize) -> BidiagonalDecomposition {
    let packed = Matrix::from_fn(n, n, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        if i == j {
            Rational::one()
        } else if i > j && j % 2 == 1 {
            Rational::from(2 * i - 2 * j - 1)
        } else {
            Rational::zero()
        }
    });
    BidiagonalDecomposition::from_packed(packed).expect("square")
}

/// Decomposition of the Vandermonde matrix at `nodes`, by exact elimination.
pub fn bd_vandermonde(nodes: &NodeSequence) -> Result<BidiagonalDecomposition> {
    BidiagonalDecomposition::from_matrix(&vandermonde_matrix(nodes))
}

/// Decomposition of the Bessel collocation matrix `M = V A^T`.
pub fn bd_bessel_collocation(nodes: &NodeSequence) -> Result<BidiagonalDecomposition> {
    bd_vandermonde(nodes)?.product(&bd_of_a(nodes.len()).transpose())
}

/// Decomposition of the reverse Bessel collocation matrix `M_r = V C^T`.
pub fn bd_reverse_bessel_collocation(nodes: &NodeSequence) -> Result<BidiagonalDecomposition> {
    bd_vandermonde(nodes)?.product(&bd_of_c(nodes.len()).transpose())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Bessel,
    ReverseBessel,
    Monomial,
}

impl Basis {
    /// Polynomial of degree `k` in this basis.
    pub fn poly(self, k: usize) -> PolynomialCoeffs {
        match self {
            Basis::Bessel => bessel_poly(k),
            Basis::ReverseBessel => reverse_bessel_poly(k),
            Basis::Monomial => {
                let mut c = vec![BigUint::default(); k + 1];
                c[k] = BigUint::one();
                PolynomialCoeffs(c)
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Bessel => "bessel",
            Basis::ReverseBessel => "rbessel",
            Basis::Monomial => "monomial",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bessel" => Ok(Basis::Bessel),
            "rbessel" => Ok(Basis::ReverseBessel),
            "monomial" => Ok(Basis::Monomial),
            other => Err(Error::Parse(format!(
                "unknown basis `{other}` (expected bessel, rbessel or monomial)"
            ))),
        }
    }
}

/// A basis and the nodes it is collocated at; the matrix order is the node count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollocationSpec {
    pub basis: Basis,
    pub nodes: NodeSequence,
}

impl CollocationSpec {
    pub fn new(basis: Basis, nodes: NodeSequence) -> Self {
        CollocationSpec { basis, nodes }
    }

    pub fn n(&self) -> usize {
        self.nodes.len()
    }

    /// Decomposition of the collocation matrix through its factored form.
    pub fn bidiagonal(&self) -> Result<BidiagonalDecomposition> {
        match self.basis {
            Basis::Bessel => bd_bessel_collocation(&self.nodes),
            Basis::ReverseBessel => bd_reverse_bessel_collocation(&self.nodes),
            Basis::Monomial => bd_vandermonde(&self.nodes),
        }
    }
}

/// `M[i][j] = p_j(t_i)` by direct polynomial evaluation.
pub fn collocation_matrix(spec: &CollocationSpec) -> Matrix<Rational> {
    let n = spec.n();
    let polys: Vec<PolynomialCoeffs> = (0..n).map(|k| spec.basis.poly(k)).collect();
    Matrix::from_fn(n, n, |i, j| polys[j].eval(&spec.nodes.as_slice()[i]))
}
