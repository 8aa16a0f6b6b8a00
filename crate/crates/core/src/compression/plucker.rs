use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use crate::exactalg::{Matrix, Rational, Subspace, Vector};
use crate::liecore::{Covector, RootDatum};
use crate::polycone::{support_cone, Cone};
use crate::spherical::{SphericalSpace, StructureSplitting};

use super::graph::WeightFrame;
use super::CompressionError;

/// Largest exterior power expanded by the oracle.
pub const PLUCKER_BOUND: u128 = 1_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Plücker coordinates of a subspace in the weight basis, grouped by the
/// restriction of their weight to 𝔞_Z. Zero coordinates are omitted.
fn plucker(
    frame: &WeightFrame,
    basis: &[Vector],
    restrict: &dyn Fn(&Covector) -> Covector,
) -> BTreeMap<Covector, BTreeMap<Vec<usize>, Rational>> {
    let n = frame.len();
    let d = basis.len();
    let coeffs: Vec<Vector> = basis.iter().map(|b| frame.coords(b)).collect();
    let mut out: BTreeMap<Covector, BTreeMap<Vec<usize>, Rational>> = BTreeMap::new();
    for cols in (0..n).combinations(d) {
        let mut m = Matrix::zeros(d, d);
        for (i, c) in coeffs.iter().enumerate() {
            for (j, &k) in cols.iter().enumerate() {
                m[(i, j)] = c[k].clone();
            }
        }
        let det = m.determinant().expect("square");
        if det.is_zero() {
            continue;
        }
        let rank = frame.basis[0].0.len();
        let weight = cols
            .iter()
            .fold(Covector::zero(rank), |acc, &k| acc.add(&frame.basis[k].0));
        out.entry(restrict(&weight)).or_default().insert(cols, det);
    }
    out
}

/// Whether two Plücker vectors (sparse maps) are nonzero multiples.
fn proportional(x: &BTreeMap<Vec<usize>, Rational>, y: &BTreeMap<Vec<usize>, Rational>) -> bool {
    if x.is_empty() || x.len() != y.len() || !x.keys().eq(y.keys()) {
        return false;
    }
    let (k0, x0) = x.iter().next().expect("nonempty");
    let ratio = &y[k0] / x0;
    x.iter().all(|(k, v)| y[k] == v * &ratio)
}

/// Compression cone computed from the weights of `⋀^d 𝔥` inside `⋀^d 𝔤`.
pub fn plucker_oracle(
    z: &SphericalSpace,
    ss: &StructureSplitting,
    h_lim: &Subspace,
) -> Result<Cone, CompressionError> {
    let rd: &RootDatum = &z.rd;
    let frame = WeightFrame::new(rd);
    let n = frame.len();
    let d = z.h.dim();
    let size = binomial(n, d);
    if size > PLUCKER_BOUND {
        return Err(CompressionError::ExteriorPowerTooLarge {
            size,
            bound: PLUCKER_BOUND,
        });
    }
    let restrict = |c: &Covector| rd.restrict(c, &ss.a_z).expect("𝔞_Z ⊆ 𝔞");

    // μ₀ = −2ρ_𝔲|𝔞_Z, with multiplicities (weight of ⋀^top 𝔲̄).
    let mu0 = restrict(&ss.q.two_rho_u(rd).neg());

    let wedge = plucker(&frame, z.h.basis(), &restrict);
    let lim = plucker(&frame, h_lim.basis(), &restrict);
    let leading = wedge
        .get(&mu0)
        .ok_or(CompressionError::LimitingWedgeVanished)?;
    let lim_leading = lim.get(&mu0);
    if lim.len() != 1 || lim_leading.is_none_or(|l| !proportional(l, leading)) {
        return Err(CompressionError::LimitingWedgeMismatch);
    }

    let lambda: Vec<Vector> = wedge.keys().map(|mu| mu.sub(&mu0).0).collect();
    Ok(support_cone(ss.a_z.dim(), &lambda)?)
}
