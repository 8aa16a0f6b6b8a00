//! Open-orbit selection, the adapted parabolic and the local structure
//! splittings of a spherical pair `(𝔤, 𝔥)`.

use std::sync::Arc;

use thiserror::Error;

use crate::exactalg::{LinalgError, Subspace};
use crate::liecore::{LieAlgebraRealization, LieError, ParabolicData, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphericalError {
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subalgebra lives in dimension {found}, algebra has dimension {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("no open P-orbit through base point; conjugate 𝔥 and retry")]
    NoOpenOrbit,
    #[error(
        "adapted parabolic not unique; input violates real-sphericality assumptions \
         (passing subsets: {0:?})"
    )]
    AdaptedNotUnique(Vec<Vec<usize>>),
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A subalgebra `𝔥` together with a positive system for which `𝔭 + 𝔥 = 𝔤`.
#[derive(Debug, Clone)]
pub struct SphericalSpace {
    pub g: Arc<LieAlgebraRealization>,
    pub h: Subspace,
    pub rd: RootDatum,
    pub p: Subspace,
}

#[derive(Debug, Clone)]
pub struct StructureSplitting {
    pub q: ParabolicData,
    pub h_cap_l: Subspace,
    pub a_h: Subspace,
    pub a_z: Subspace,
    pub m_h: Subspace,
    pub m_z: Subspace,
    pub d: Subspace,
    pub d_h: Subspace,
    pub d_h_perp: Subspace,
    pub rank: usize,
}

impl StructureSplitting {
    pub fn m_z_dim(&self) -> usize {
        self.m_z.dim()
    }
}

#[derive(Debug, Clone)]
pub struct NormalizerData {
    pub n_g_h: Subspace,
    pub a_tilde_h: Subspace,
    /// `ã_h = 0`.
    pub compact_quotient: bool,
}

/// First Weyl twist of `rd0` (shortlex in simple-reflection words) with
/// `𝔭 + 𝔥 = 𝔤`.
pub fn find_open_parabolic(h: Subspace, rd0: &RootDatum) -> Result<SphericalSpace, SphericalError> {
    let g = rd0.algebra().clone();
    if h.ambient_dim() != g.dim() {
        return Err(SphericalError::AmbientMismatch {
            expected: g.dim(),
            found: h.ambient_dim(),
        });
    }
    if !g.is_subalgebra(&h) {
        return Err(SphericalError::NotSubalgebra);
    }
    for rd in rd0.weyl_twists()? {
        let p = rd.minimal_parabolic();
        if p.sum(&h)?.is_full() {
            return Ok(SphericalSpace { g, h, rd, p });
        }
    }
    Err(SphericalError::NoOpenOrbit)
}

impl SphericalSpace {
    fn orthogonal_image(&self, vs: &[crate::exactalg::Vector], onto: &Subspace) -> Subspace {
        let gram = self.g.gram();
        let images: Vec<_> = vs
            .iter()
            .map(|v| onto.orthogonal_projection(v, gram).expect("gram matches"))
            .collect();
        self.g.span(&images)
    }

    /// Tests the three adaptedness conditions for one subset of simple roots.
    fn is_adapted(&self, q: &ParabolicData) -> Result<bool, SphericalError> {
        let q_cap_h = q.q.intersect(&self.h)?;
        Ok(q.l.contains(&q_cap_h)? && q_cap_h.contains(&q.l_n)? && self.p.sum(&q_cap_h)? == q.q)
    }

    fn adapted_candidates(&self) -> Result<Vec<ParabolicData>, SphericalError> {
        let r = self.rd.simple_roots().len();
        let mut passing = Vec::new();
        for mask in 0..(1usize << r) {
            let marked: Vec<usize> = (0..r).filter(|k| mask >> k & 1 == 1).collect();
            let q = self.rd.standard_parabolic(&marked)?;
            if self.is_adapted(&q)? {
                passing.push(q);
            }
        }
        Ok(passing)
    }

    /// Every subset of simple roots whose standard parabolic is adapted.
    pub fn adapted_subsets(&self) -> Result<Vec<Vec<usize>>, SphericalError> {
        Ok(self
            .adapted_candidates()?
            .into_iter()
            .map(|q| q.marked_simple)
            .collect())
    }

    /// The unique standard parabolic `Q ⊇ P` adapted to the space, with the
    /// splittings of its Levi factor.
    pub fn adapted_parabolic(&self) -> Result<StructureSplitting, SphericalError> {
        let mut passing = self.adapted_candidates()?;
        if passing.len() != 1 {
            return Err(SphericalError::AdaptedNotUnique(
                passing.into_iter().map(|q| q.marked_simple).collect(),
            ));
        }
        let q = passing.pop().expect("one passing subset");
        let gram = self.g.gram();

        let h_cap_l = q.l.intersect(&self.h)?;
        let a_h = self.orthogonal_image(h_cap_l.basis(), &q.z_l_np);
        let a_z = a_h.orth_complement(gram)?.intersect(&q.z_l_np)?;
        let compact_part = q.z_l_cp.sum(&q.l_c)?;
        let m_h = self.orthogonal_image(h_cap_l.basis(), &compact_part);
        let m_z = m_h.orth_complement(gram)?.intersect(&compact_part)?;
        let d = q.d();
        let d_h = d.intersect(&self.h)?;
        let d_h_perp = d_h.orth_complement(gram)?.intersect(&d)?;

        let total = self.h.sum(&a_z)?.sum(&m_z)?.sum(&q.u)?;
        let dims = self.h.dim() + a_z.dim() + m_z.dim() + q.u.dim();
        if dims != self.g.dim() || !total.is_full() {
            return Err(SphericalError::Inconsistent(format!(
                "𝔥 ⊕ 𝔞_Z ⊕ 𝔪_Z ⊕ 𝔲 has dimensions summing to {dims}, span of dimension {}, \
                 algebra of dimension {}",
                total.dim(),
                self.g.dim()
            )));
        }
        let rank = a_z.dim();
        Ok(StructureSplitting {
            q,
            h_cap_l,
            a_h,
            a_z,
            m_h,
            m_z,
            d,
            d_h,
            d_h_perp,
            rank,
        })
    }

    /// `𝔫_𝔤(𝔥)` and the split part `ã_h` of its complement to 𝔥.
    pub fn normalizer(&self) -> Result<NormalizerData, SphericalError> {
        let gram = self.g.gram();
        let n_g_h = self.g.normalizer(&self.h);
        let zero = self.rd.zero_space();
        let n_zero = n_g_h.intersect(zero)?;
        let h_zero = self.h.intersect(zero)?;
        let complement = h_zero.orth_complement(gram)?.intersect(&n_zero)?;
        let a_tilde_h = self.orthogonal_image(complement.basis(), self.rd.a_space());
        let compact_quotient = a_tilde_h.is_zero();
        Ok(NormalizerData {
            n_g_h,
            a_tilde_h,
            compact_quotient,
        })
    }

    /// `𝔥_lim = 𝔲̄ + (𝔩 ∩ 𝔥)`.
    pub fn limiting_subalgebra(&self, ss: &StructureSplitting) -> Result<Subspace, SphericalError> {
        let h_lim = ss.q.u_bar.sum(&ss.h_cap_l)?;
        if h_lim.dim() != self.h.dim() {
            return Err(SphericalError::Inconsistent(format!(
                "dim 𝔥_lim = {} but dim 𝔥 = {}",
                h_lim.dim(),
                self.h.dim()
            )));
        }
        if !self.g.is_subalgebra(&h_lim) {
            return Err(SphericalError::Inconsistent(
                "𝔥_lim is not a subalgebra".into(),
            ));
        }
        Ok(h_lim)
    }
}
