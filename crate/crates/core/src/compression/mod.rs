//! The compression cone `𝔞_Z⁻` from the monoid of the graph map, its edge,
//! the wavefront test, and the Plücker weight-support cross-check.

mod graph;
mod plucker;

pub use graph::{graph_map, monoid_generators, GraphMapData, GraphMapEntry, WeightFrame};
pub use plucker::{plucker_oracle, PLUCKER_BOUND};

use thiserror::Error;

use crate::exactalg::{LinalgError, Matrix, Subspace, Vector};
use crate::liecore::Covector;
use crate::polycone::{Cone, ConeError};
use crate::spherical::{SphericalError, SphericalSpace, StructureSplitting};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompressionError {
    #[error("local structure violated: {0}")]
    LocalStructureViolated(String),
    #[error("exterior power of dimension {size} exceeds the bound {bound}")]
    ExteriorPowerTooLarge { size: u128, bound: u128 },
    #[error("limiting wedge vanished")]
    LimitingWedgeVanished,
    #[error("leading Plücker component is not the wedge of 𝔥_lim")]
    LimitingWedgeMismatch,
    #[error(transparent)]
    Spherical(#[from] SphericalError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone)]
pub struct CompressionReport {
    /// Nonzero monoid generators as values on the 𝔞_Z basis.
    pub monoid_generators: Vec<Covector>,
    /// `𝔞_Z⁻` in 𝔞_Z-basis coordinates.
    pub cone: Cone,
    pub edge: Subspace,
    pub sharp: bool,
    pub wavefront: bool,
    /// Image of the closed negative chamber `𝔞⁻` in 𝔞_Z.
    pub chamber_image: Cone,
    pub h_lim: Subspace,
    pub oracle_cone: Cone,
    pub oracle_agrees: bool,
    pub rank: usize,
}

/// Matrix (`dim 𝔞_Z × dim 𝔞`) of the gram-orthogonal projection `𝔞 → 𝔞_Z`
/// in the canonical bases.
pub fn projection_to_a_z(z: &SphericalSpace, ss: &StructureSplitting) -> Matrix {
    let a = z.rd.a_space();
    let mut m = Matrix::zeros(ss.a_z.dim(), a.dim());
    for (j, e) in a.basis().iter().enumerate() {
        let c = a_z_coords(z, ss, e);
        for (i, ci) in c.into_iter().enumerate() {
            m[(i, j)] = ci;
        }
    }
    m
}

/// 𝔞_Z-coordinates of the gram-orthogonal projection of `x ∈ 𝔤` onto 𝔞_Z.
pub fn a_z_coords(
    z: &SphericalSpace,
    ss: &StructureSplitting,
    x: &[crate::exactalg::Rational],
) -> Vector {
    let p = ss
        .a_z
        .orthogonal_projection(x, z.g.gram())
        .expect("gram matches");
    ss.a_z.coords(&p).expect("projection lies in 𝔞_Z")
}

/// The closed negative chamber `{X ∈ 𝔞 : α(X) ≤ 0 for simple α}`.
pub fn negative_chamber(z: &SphericalSpace) -> Result<Cone, ConeError> {
    let rd = &z.rd;
    let simple: Vec<Vector> = rd
        .simple_roots()
        .iter()
        .map(|&i| rd.root(i).covector.0.clone())
        .collect();
    Cone::from_inequalities(rd.rank(), &simple)
}

pub fn compression_cone(
    z: &SphericalSpace,
    ss: &StructureSplitting,
) -> Result<CompressionReport, CompressionError> {
    let gm = graph_map(z, ss)?;
    let monoid = monoid_generators(&z.rd, &ss.a_z, &gm);
    let rank = ss.a_z.dim();
    let ineqs: Vec<Vector> = monoid.iter().map(|c| c.0.clone()).collect();
    let cone = Cone::from_inequalities(rank, &ineqs)?;
    let edge = cone.edge();
    let sharp = cone.is_sharp();
    let chamber_image = negative_chamber(z)?.linear_image(&projection_to_a_z(z, ss))?;
    let wavefront = cone == chamber_image;
    let h_lim = z.limiting_subalgebra(ss)?;
    let oracle_cone = plucker_oracle(z, ss, &h_lim)?;
    let oracle_agrees = cone == oracle_cone;
    Ok(CompressionReport {
        monoid_generators: monoid,
        cone,
        edge,
        sharp,
        wavefront,
        chamber_image,
        h_lim,
        oracle_cone,
        oracle_agrees,
        rank,
    })
}
