//! Exact bidiagonal factorizations of totally positive collocation matrices
//! of Bessel and reverse Bessel polynomials, and solvers that keep high
//! relative accuracy by working from those factors.

pub mod bd;
pub mod bessel;
pub mod error;
pub mod matrix;
pub mod scalar;
pub mod solvers;

pub use bd::{BidiagonalDecomposition, Violation};
pub use bessel::{Basis, CollocationSpec};
pub use error::{Error, Result};
pub use matrix::{Matrix, NodeSequence};
pub use scalar::{BigFloat, PrecisionPolicy, Rational};
