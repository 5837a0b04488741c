//! Dense matrices, Neville elimination and total positivity tests.

mod dense;
pub mod gauss;
mod neville;
mod nodes;
mod positivity;
pub mod text;

pub use dense::Matrix;
pub use gauss::{exact_determinant, exact_inverse, exact_solve};
pub use neville::{neville_eliminate, NevilleResult};
pub use nodes::{vandermonde_matrix, NodeSequence};
pub(crate) use positivity::tp_elimination;
pub use positivity::{
    all_minors_nonnegative, all_minors_positive, is_tp_nonsingular, DEFAULT_MAX_MINOR_ORDER,
};
