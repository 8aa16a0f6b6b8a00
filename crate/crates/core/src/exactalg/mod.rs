//! Exact rational linear algebra: rationals, dense matrices, and canonical
//! (reduced row-echelon) subspaces.
//!
//! Nothing in here touches floating point. Subspaces are stored in reduced
//! row-echelon form, so two equal subspaces always compare equal with `==`.

mod matrix;
mod rational;
mod subspace;

pub use matrix::Matrix;
pub use rational::{
    dot, format_rational, is_zero_vector, lcm_denominators, parse_rational, primitive_integer,
    scale, sub, zero_vector, Rational, Vector,
};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("subspaces do not form a direct sum decomposition of the ambient space")]
    NotDirectSum,
    #[error("vector is not contained in the subspace")]
    NotContained,
}
