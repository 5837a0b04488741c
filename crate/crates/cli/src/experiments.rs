//! Comparison experiments: multiprecision references against the
//! factorization-based path and plain double precision.

use rayon::prelude::*;
use tpbessel::bessel::{collocation_matrix, Basis, CollocationSpec};
use tpbessel::matrix::{exact_inverse, exact_solve};
use tpbessel::solvers::{
    eigenvalues, inverse, matrix_eigenvalues, matrix_singular_values, naive_eigenvalues,
    naive_inverse, naive_singular_values, naive_solve, relative_errors, singular_values, solve,
    SignPatternVector, SpectrumKind,
};
use tpbessel::{Matrix, NodeSequence, PrecisionPolicy, Rational, Result};

use crate::rhs::rhs_pair;

/// References are certified this many decimal orders tighter than the requested tolerance.
const REFERENCE_MARGIN: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow {
    pub i: usize,
    pub reference: f64,
    pub relerr_hra: f64,
    pub relerr_naive: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorStats {
    pub mean: f64,
    pub max: f64,
}

impl ErrorStats {
    fn of(errors: &[f64]) -> Self {
        let max = errors.iter().copied().fold(0.0, f64::max);
        let mean = errors.iter().sum::<f64>() / errors.len() as f64;
        ErrorStats { mean, max }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InverseComparison {
    pub hra: ErrorStats,
    pub naive: ErrorStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rhs {
    Alternating,
    Positive,
}

pub fn reference_policy(tol: f64) -> Result<PrecisionPolicy> {
    PrecisionPolicy::for_tolerance(tol * REFERENCE_MARGIN)
}

fn rounded(a: &Matrix<Rational>) -> Result<Matrix<f64>> {
    a.to_f64()
}

fn to_f64(v: &[Rational]) -> Result<Vec<f64>> {
    v.iter().map(Rational::to_f64).collect()
}

fn rows(reference: &[f64], hra: &[f64], naive: &[f64]) -> Result<Vec<ComparisonRow>> {
    let eh = relative_errors(hra, reference)?;
    let en = relative_errors(naive, reference)?;
    Ok((0..reference.len())
        .map(|k| ComparisonRow {
            i: k + 1,
            reference: reference[k],
            relerr_hra: eh[k],
            relerr_naive: en[k],
        })
        .collect())
}

/// Eigenvalues or singular values: reference from the directly evaluated
/// matrix, HRA values from the decomposition, naive values from the rounded matrix.
pub fn spectrum_comparison(
    spec: &CollocationSpec,
    kind: SpectrumKind,
    tol: f64,
) -> Result<Vec<ComparisonRow>> {
    let policy = PrecisionPolicy::for_tolerance(tol)?;
    let refpol = reference_policy(tol)?;
    let m = collocation_matrix(spec);
    let bd = spec.bidiagonal()?;
    let a = rounded(&m)?;
    let (reference, hra, naive) = match kind {
        SpectrumKind::Eigenvalues => (
            matrix_eigenvalues(&m, &refpol)?,
            eigenvalues(&bd, &policy)?,
            naive_eigenvalues(&a),
        ),
        SpectrumKind::SingularValues => (
            matrix_singular_values(&m, &refpol)?,
            singular_values(&bd, &policy)?,
            naive_singular_values(&a),
        ),
    };
    rows(&reference.values, &hra.values, &naive)
}

/// Componentwise errors of the inverse against Gauss-Jordan in rationals.
pub fn inverse_comparison(spec: &CollocationSpec) -> Result<InverseComparison> {
    let m = collocation_matrix(spec);
    let reference = exact_inverse(&m)?.to_f64()?;
    let hra = inverse(&spec.bidiagonal()?)?.to_f64()?;
    let naive = naive_inverse(&rounded(&m)?)?;
    let refs: Vec<f64> = reference.as_slice().to_vec();
    let keep: Vec<usize> = (0..refs.len()).filter(|&k| refs[k] != 0.0).collect();
    let pick = |v: &[f64]| keep.iter().map(|&k| v[k]).collect::<Vec<_>>();
    let r = pick(&refs);
    Ok(InverseComparison {
        hra: ErrorStats::of(&relative_errors(&pick(hra.as_slice()), &r)?),
        naive: ErrorStats::of(&relative_errors(&pick(naive.as_slice()), &r)?),
    })
}

/// Componentwise solution errors for the seeded right-hand side.
pub fn solve_comparison(spec: &CollocationSpec, rhs: Rhs, seed: u64) -> Result<Vec<ComparisonRow>> {
    let (b1, b2) = rhs_pair(spec.n(), seed);
    let b = match rhs {
        Rhs::Alternating => b1,
        Rhs::Positive => b2,
    };
    let m = collocation_matrix(spec);
    let reference = to_f64(&exact_solve(&m, &b)?)?;
    let hra = to_f64(&solve(
        &spec.bidiagonal()?,
        &SignPatternVector::new(b.clone()),
    )?)?;
    let naive = naive_solve(&rounded(&m)?, &to_f64(&b)?)?;
    rows(&reference, &hra, &naive)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureId {
    Val,
    Inv,
    ValR,
    InvR,
}

impl FigureId {
    pub fn basis(self) -> Basis {
        match self {
            FigureId::Val | FigureId::Inv => Basis::Bessel,
            FigureId::ValR | FigureId::InvR => Basis::ReverseBessel,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Val => "val",
            FigureId::Inv => "inv",
            FigureId::ValR => "valR",
            FigureId::InvR => "invR",
        }
    }

    fn is_spectral(self) -> bool {
        matches!(self, FigureId::Val | FigureId::ValR)
    }

    pub fn columns(self) -> [&'static str; 4] {
        if self.is_spectral() {
            ["eig_hra", "eig_naive", "svd_hra", "svd_naive"]
        } else {
            ["mean_hra", "mean_naive", "max_hra", "max_naive"]
        }
    }
}

impl std::str::FromStr for FigureId {
    type Err = tpbessel::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "val" => Ok(FigureId::Val),
            "inv" => Ok(FigureId::Inv),
            "valR" => Ok(FigureId::ValR),
            "invR" => Ok(FigureId::InvR),
            other => Err(tpbessel::Error::Parse(format!(
                "unknown figure `{other}` (val, inv, valR, invR)"
            ))),
        }
    }
}

/// One sweep: for each order `n`, the four series named by `FigureId::columns`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sweep {
    pub id: FigureId,
    pub rows: Vec<(usize, [f64; 4])>,
}

pub const MAX_SWEEP_ORDER: usize = 25;

fn sweep_point(id: FigureId, n: usize, tol: f64) -> Result<[f64; 4]> {
    let spec = CollocationSpec::new(id.basis(), NodeSequence::integers(n)?);
    if id.is_spectral() {
        let ev = spectrum_comparison(&spec, SpectrumKind::Eigenvalues, tol)?;
        let sv = spectrum_comparison(&spec, SpectrumKind::SingularValues, tol)?;
        let (e, s) = (&ev[n - 1], &sv[n - 1]);
        Ok([e.relerr_hra, e.relerr_naive, s.relerr_hra, s.relerr_naive])
    } else {
        let c = inverse_comparison(&spec)?;
        Ok([c.hra.mean, c.naive.mean, c.hra.max, c.naive.max])
    }
}

/// Orders `2..=n_max` at integer nodes, computed concurrently.
pub fn sweep(id: FigureId, n_max: usize, tol: f64) -> Result<Sweep> {
    if !(2..=MAX_SWEEP_ORDER).contains(&n_max) {
        return Err(tpbessel::Error::InvalidArgument(format!(
            "n_max must lie in 2..={MAX_SWEEP_ORDER}, got {n_max}"
        )));
    }
    let rows = (2..=n_max)
        .into_par_iter()
        .map(|n| sweep_point(id, n, tol).map(|v| (n, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Sweep { id, rows })
}
