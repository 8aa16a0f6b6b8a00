//! Incremental double description with an explicit lineality space.

use num_traits::{Signed, Zero};

use crate::exactalg::{dot, primitive_integer, Matrix, Rational, Vector};

/// Generators of `{x : ⟨a, x⟩ ≤ 0 for all a in rows}`: a basis of the
/// lineality space and the extreme rays modulo it (not yet canonical).
pub(crate) fn generators_of(dim: usize, rows: &[Vector]) -> (Vec<Vector>, Vec<Vector>) {
    let mut lineality: Vec<Vector> = (0..dim)
        .map(|i| {
            let mut e = vec![Rational::zero(); dim];
            e[i] = Rational::from_integer(1.into());
            e
        })
        .collect();
    let mut rays: Vec<Vector> = Vec::new();
    let mut processed: Vec<&Vector> = Vec::new();

    for a in rows {
        if let Some(k) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.swap_remove(k);
            if dot(a, &l0).is_positive() {
                l0 = l0.iter().map(|x| -x).collect();
            }
            let a_l0 = dot(a, &l0);
            let shift = |v: &Vector| -> Vector {
                let c = dot(a, v) / &a_l0;
                v.iter().zip(&l0).map(|(x, y)| x - &c * y).collect()
            };
            lineality = lineality.iter().map(shift).collect();
            rays = rays.iter().map(shift).collect();
            rays.push(l0);
        } else {
            let values: Vec<Rational> = rays.iter().map(|r| dot(a, r)).collect();
            let zero_sets: Vec<Vec<bool>> = rays
                .iter()
                .map(|r| processed.iter().map(|b| dot(b, r).is_zero()).collect())
                .collect();
            let face_rank = dim - lineality.len();
            let mut next = Vec::new();
            for (i, r) in rays.iter().enumerate() {
                if !values[i].is_positive() {
                    next.push(r.clone());
                }
            }
            for p in (0..rays.len()).filter(|&i| values[i].is_positive()) {
                for n in (0..rays.len()).filter(|&i| values[i].is_negative()) {
                    let common: Vec<Vector> = processed
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| zero_sets[p][j] && zero_sets[n][j])
                        .map(|(_, b)| (*b).clone())
                        .collect();
                    if !adjacent(dim, &common, face_rank) {
                        continue;
                    }
                    let combo: Vector = rays[n]
                        .iter()
                        .zip(&rays[p])
                        .map(|(x, y)| &values[p] * x - &values[n] * y)
                        .collect();
                    next.push(combo);
                }
            }
            rays = next;
        }
        processed.push(a);
        lineality = lineality.iter().map(|v| primitive(v)).collect();
        rays = rays.iter().map(|v| primitive(v)).collect();
        rays.sort();
        rays.dedup();
    }
    (lineality, rays)
}

/// Primitive integer representative of a ray, as a rational vector.
pub(crate) fn primitive(v: &[Rational]) -> Vector {
    primitive_integer(v)
        .into_iter()
        .map(Rational::from_integer)
        .collect()
}

/// Two extreme rays span a 2-face iff the constraints tight at both have rank
/// `dim − dim L − 2`.
fn adjacent(dim: usize, common: &[Vector], face_rank: usize) -> bool {
    let rank = if common.is_empty() {
        0
    } else {
        Matrix::from_rows(dim, common)
            .expect("rows of length dim")
            .rank()
    };
    face_rank >= 2 && rank == face_rank - 2
}
