mod baseline;
mod dense;
mod exact;
mod spectrum;

pub use baseline::{
    naive_eigenvalues, naive_inverse, naive_singular_values, naive_solve, relative_errors,
};
pub use dense::{eigenvalues_dense, singular_values_jacobi, MAX_JACOBI_SWEEPS};
pub use exact::{determinant, inverse, solve, solve_stages, SignPattern, SignPatternVector};
pub use spectrum::{
    eigenvalues, matrix_eigenvalues, matrix_singular_values, singular_values, SpectrumKind,
    SpectrumResult,
};
