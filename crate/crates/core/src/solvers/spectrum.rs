//! Eigenvalues and singular values to high relative accuracy.
//!
//! The matrix is formed exactly from its bidiagonal factors, then the dense
//! kernels run in multiprecision at doubling precision until two levels agree.

use super::dense::{eigenvalues_dense, singular_values_jacobi, MAX_JACOBI_SWEEPS};
use crate::bd::BidiagonalDecomposition;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{refine_until_stable, BigFloat, PrecisionPolicy, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumKind {
    Eigenvalues,
    SingularValues,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumResult {
    /// Descending.
    pub values: Vec<f64>,
    pub achieved_precision_bits: u32,
    pub kind: SpectrumKind,
}

fn descending(v: &mut [BigFloat]) {
    v.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
}

fn eigen_at(a: &Matrix<Rational>, bits: u32, rtol: f64) -> Result<Vec<BigFloat>> {
    let pairs = eigenvalues_dense(&a.to_bigfloat(bits))?;
    let tol = BigFloat::from_f64(rtol, bits);
    let mut values = Vec::with_capacity(pairs.len());
    for (re, im) in pairs {
        if im.abs() > &tol * &re.abs() {
            return Err(Error::NonRealSpectrum(format!(
                "eigenvalue {} {:+}i at {bits} bits",
                re.to_f64(),
                im.to_f64()
            )));
        }
        values.push(re);
    }
    descending(&mut values);
    Ok(values)
}

fn singular_at(a: &Matrix<Rational>, bits: u32) -> Result<Vec<BigFloat>> {
    let tol = BigFloat::one(bits).mul_pow2(-(i64::from(bits) / 2));
    singular_values_jacobi(&a.to_bigfloat(bits), &tol, MAX_JACOBI_SWEEPS)
}

fn square(a: &Matrix<Rational>) -> Result<()> {
    if a.is_square() && a.rows() > 0 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "expected a nonempty square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )))
    }
}

/// Eigenvalues of an exactly known square matrix, real spectrum required.
pub fn matrix_eigenvalues(
    a: &Matrix<Rational>,
    policy: &PrecisionPolicy,
) -> Result<SpectrumResult> {
    square(a)?;
    let refined = refine_until_stable(policy, |bits| eigen_at(a, bits, policy.agreement_rtol))?;
    Ok(SpectrumResult {
        values: refined.values,
        achieved_precision_bits: refined.bits,
        kind: SpectrumKind::Eigenvalues,
    })
}

/// Singular values of an exactly known matrix.
pub fn matrix_singular_values(
    a: &Matrix<Rational>,
    policy: &PrecisionPolicy,
) -> Result<SpectrumResult> {
    square(a)?;
    let refined = refine_until_stable(policy, |bits| singular_at(a, bits))?;
    Ok(SpectrumResult {
        values: refined.values,
        achieved_precision_bits: refined.bits,
        kind: SpectrumKind::SingularValues,
    })
}

pub fn eigenvalues(
    bd: &BidiagonalDecomposition,
    policy: &PrecisionPolicy,
) -> Result<SpectrumResult> {
    matrix_eigenvalues(&bd.expand(), policy)
}

pub fn singular_values(
    bd: &BidiagonalDecomposition,
    policy: &PrecisionPolicy,
) -> Result<SpectrumResult> {
    matrix_singular_values(&bd.expand(), policy)
}
