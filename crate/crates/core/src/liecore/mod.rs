//! Matrix Lie algebras with the Cartan involution `θ(X) = −Xᵀ`, restricted
//! root decompositions and standard parabolics.

pub mod algebra;
pub mod eigen;
pub mod families;
pub mod parabolic;
pub mod roots;

pub use algebra::LieAlgebraRealization;
pub use families::{InvolutionKind, NamedAlgebra};
pub use parabolic::ParabolicData;
pub use roots::{Covector, Root, RootDatum};

use thiserror::Error;

use crate::exactalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("basis matrix {index} is not {expected}x{expected}")]
    BadMatrixShape { index: usize, expected: usize },
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error("bracket of basis elements {left} and {right} leaves the span")]
    NotClosed { left: usize, right: usize },
    #[error("theta(X) = -X^T of basis element {index} leaves the span")]
    NotThetaStable { index: usize },
    #[error("trace form is not positive definite on the basis")]
    GramNotPositive,
    #[error("Jacobi identity fails on basis triple {triple:?}")]
    JacobiFails { triple: (usize, usize, usize) },
    #[error("theta is not an automorphism on basis pair ({left}, {right})")]
    ThetaNotAutomorphism { left: usize, right: usize },
    #[error("bad family parameters: {0}")]
    BadFamily(String),
    #[error("involution matrix is singular")]
    SingularInvolution,
    #[error("involution does not preserve the algebra")]
    InvolutionLeavesAlgebra,
    #[error("map does not square to the identity")]
    NotAnInvolution,
    #[error("Cartan matrix {index} is not in the algebra")]
    CartanOutsideAlgebra { index: usize },
    #[error("split Cartan subspace is not contained in the symmetric part")]
    CartanNotSymmetric,
    #[error("split Cartan subspace is not abelian")]
    CartanNotAbelian,
    #[error("split Cartan subspace is not maximal abelian in the symmetric part")]
    CartanNotMaximal,
    #[error("positivity seed has {found} entries, expected {expected}")]
    SeedLength { expected: usize, found: usize },
    #[error("positivity seed vanishes on root {0}")]
    SeedVanishes(String),
    #[error("realization not split-adapted: ad(a) has non-rational eigenvalues")]
    NotSplitAdapted,
    #[error("reflection image {0} is not a root")]
    NotRootSystem(String),
    #[error("Weyl group exceeds the safety bound of {0} elements")]
    WeylTooLarge(usize),
    #[error("marked simple root position {0} is out of range")]
    BadMarkedRoot(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
