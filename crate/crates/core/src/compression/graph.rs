use num_traits::Zero;

use crate::exactalg::{is_zero_vector, Matrix, Rational, Subspace, Vector};
use crate::liecore::{Covector, RootDatum};
use crate::spherical::{SphericalSpace, StructureSplitting};

use super::CompressionError;

/// Coordinates with respect to the `ad(𝔞)` weight basis of 𝔤.
#[derive(Debug, Clone)]
pub struct WeightFrame {
    /// `(weight, basis vector)`, zero weight first, then root spaces in root order.
    pub basis: Vec<(Covector, Vector)>,
    /// Root index of each basis vector (`None` for weight zero).
    pub root_of: Vec<Option<usize>>,
    to_weight: Matrix,
}

impl WeightFrame {
    pub fn new(rd: &RootDatum) -> Self {
        let basis = rd.weight_basis();
        let n = basis.len();
        let mut root_of = vec![None; rd.zero_space().dim()];
        for (i, r) in rd.roots().iter().enumerate() {
            root_of.extend(std::iter::repeat_n(Some(i), r.multiplicity()));
        }
        let mut w = Matrix::zeros(n, n);
        for (j, (_, v)) in basis.iter().enumerate() {
            for i in 0..n {
                w[(i, j)] = v[i].clone();
            }
        }
        let to_weight = w.inverse().expect("square").expect("weight basis spans 𝔤");
        Self {
            basis,
            root_of,
            to_weight,
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Weight-basis coordinates of a vector given in 𝔤-coordinates.
    pub fn coords(&self, x: &[Rational]) -> Vector {
        self.to_weight.mul_vec(x).expect("vector of 𝔤")
    }

    /// Reassembles the 𝔤-vector from the weight coordinates kept by `keep`.
    pub fn part(&self, w: &[Rational], keep: impl Fn(usize) -> bool) -> Vector {
        let n = self.len();
        let mut out = vec![Rational::zero(); n];
        for (k, (_, b)) in self.basis.iter().enumerate() {
            if keep(k) && !w[k].is_zero() {
                for i in 0..n {
                    out[i] += &w[k] * &b[i];
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct GraphMapEntry {
    /// The root `α ∈ Σ_𝔲` (index into the root list).
    pub alpha: usize,
    /// Index of `X_{−α}` in the weight basis.
    pub basis_vector_index: usize,
    pub y: Vector,
    pub d_alpha: Vector,
    /// `(β, X_β)` for roots `β` of 𝔲 with `X_β ≠ 0`.
    pub u_components: Vec<(usize, Vector)>,
}

#[derive(Debug, Clone)]
pub struct GraphMapData {
    pub entries: Vec<GraphMapEntry>,
}

/// For each `α ∈ Σ_𝔲` and each basis vector `X_{−α}` of `𝔤^{−α}`, the element
/// `Y = X_{−α} + (𝔩-part) + Σ_β X_β ∈ 𝔥` and its reductions.
pub fn graph_map(
    z: &SphericalSpace,
    ss: &StructureSplitting,
) -> Result<GraphMapData, CompressionError> {
    let rd = &z.rd;
    let frame = WeightFrame::new(rd);
    let n = frame.len();
    let q = &ss.q;

    let in_u: Vec<bool> = (0..rd.roots().len())
        .map(|i| q.sigma_u.iter().any(|&(j, _)| j == i))
        .collect();
    let in_u_bar: Vec<bool> = (0..rd.roots().len())
        .map(|i| {
            let neg = rd.root(i).covector.neg();
            rd.root_index(&neg).is_some_and(|j| in_u[j])
        })
        .collect();
    let is_u = |k: usize| frame.root_of[k].is_some_and(|i| in_u[i]);
    let is_u_bar = |k: usize| frame.root_of[k].is_some_and(|i| in_u_bar[i]);
    let is_l = |k: usize| !is_u(k) && !is_u_bar(k);

    let h_weight: Vec<Vector> = z.h.basis().iter().map(|h| frame.coords(h)).collect();
    let u_bar_idx: Vec<usize> = (0..n).filter(|&k| is_u_bar(k)).collect();
    let mut m = Matrix::zeros(u_bar_idx.len(), h_weight.len());
    for (r, &k) in u_bar_idx.iter().enumerate() {
        for (c, hw) in h_weight.iter().enumerate() {
            m[(r, c)] = hw[k].clone();
        }
    }

    let l_cap_h = ss.q.l_n.sum(&ss.d_h)?;
    if l_cap_h != ss.h_cap_l {
        return Err(CompressionError::LocalStructureViolated(
            "𝔩 ∩ 𝔥 differs from 𝔩_n ⊕ 𝔡_H".into(),
        ));
    }

    let mut entries = Vec::new();
    for &(alpha, _) in &q.sigma_u {
        let neg = rd
            .root_index(&rd.root(alpha).covector.neg())
            .ok_or_else(|| CompressionError::LocalStructureViolated("−α is not a root".into()))?;
        for k in (0..n).filter(|&k| frame.root_of[k] == Some(neg)) {
            let target: Vector = u_bar_idx
                .iter()
                .map(|&j| {
                    if j == k {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            let c = m.solve(&target)?.ok_or_else(|| {
                CompressionError::LocalStructureViolated(format!(
                    "no element of 𝔥 has 𝔲̄-component equal to weight vector {k}"
                ))
            })?;
            let y =
                z.h.basis()
                    .iter()
                    .zip(&c)
                    .fold(vec![Rational::zero(); n], |mut acc, (b, ci)| {
                        for i in 0..n {
                            acc[i] += ci * &b[i];
                        }
                        acc
                    });
            let w = frame.coords(&y);
            let l_part = frame.part(&w, is_l);
            let d_alpha = Subspace::project_within(&l_part, &ss.d_h_perp, &l_cap_h)?;
            let mut u_components = Vec::new();
            for &(beta, _) in &q.sigma_u {
                let x_beta = frame.part(&w, |j| frame.root_of[j] == Some(beta));
                if !is_zero_vector(&x_beta) {
                    u_components.push((beta, x_beta));
                }
            }
            // Reassembly check: Y = X_{−α} + 𝔩-part + Σ X_β.
            let mut back = frame.basis[k].1.clone();
            for (bi, li) in back.iter_mut().zip(&l_part) {
                *bi += li;
            }
            for (_, xb) in &u_components {
                for (bi, xi) in back.iter_mut().zip(xb) {
                    *bi += xi;
                }
            }
            if back != y || !z.h.contains_vector(&y) {
                return Err(CompressionError::LocalStructureViolated(
                    "graph element does not reassemble".into(),
                ));
            }
            entries.push(GraphMapEntry {
                alpha,
                basis_vector_index: k,
                y,
                d_alpha,
                u_components,
            });
        }
    }
    Ok(GraphMapData { entries })
}

/// `α|𝔞_Z` when `D_α ≠ 0` and `(α + β)|𝔞_Z` when `X_β ≠ 0`; zeros dropped,
/// deduplicated and sorted.
pub fn monoid_generators(rd: &RootDatum, a_z: &Subspace, gm: &GraphMapData) -> Vec<Covector> {
    let mut out = Vec::new();
    for e in &gm.entries {
        let alpha = &rd.root(e.alpha).covector;
        if !is_zero_vector(&e.d_alpha) {
            out.push(rd.restrict(alpha, a_z).expect("𝔞_Z ⊆ 𝔞"));
        }
        for (beta, _) in &e.u_components {
            let sum = alpha.add(&rd.root(*beta).covector);
            out.push(rd.restrict(&sum, a_z).expect("𝔞_Z ⊆ 𝔞"));
        }
    }
    out.retain(|c| !c.is_zero());
    out.sort();
    out.dedup();
    out
}
