//! Classical matrix realizations with built-in split Cartan subspaces.
//!
//! Basis conventions (`Eᵢⱼ` = matrix unit, indices from 0):
//!
//! * `sl(n)`: `Hᵢ = Eᵢᵢ − Eᵢ₊₁,ᵢ₊₁` for `i < n−1`, then `Eᵢⱼ` (`i ≠ j`) in
//!   row-major order. 𝔞 = span of the `Hᵢ`.
//! * `so(p,q)` (form `diag(1ᵖ, −1^q)`): first `Eᵢ,ₚ₊ⱼ + Eₚ₊ⱼ,ᵢ` for
//!   `i < p, j < q` in row-major order, then `Eᵢⱼ − Eⱼᵢ` for `i < j < p`,
//!   then the same inside the last `q` indices. 𝔞 = span of the entries with
//!   `i = j < min(p,q)`.
//! * `sp(2n)` (form `[[0, I], [−I, 0]]`): `Eᵢⱼ − Eₙ₊ⱼ,ₙ₊ᵢ` for all `i, j`
//!   in row-major order, then `Eᵢ,ₙ₊ⱼ + Eⱼ,ₙ₊ᵢ` for `i ≤ j` (just `Eᵢ,ₙ₊ᵢ` when
//!   `i = j`), then `Eₙ₊ᵢ,ⱼ + Eₙ₊ⱼ,ᵢ` for `i ≤ j`. 𝔞 = span of the
//!   `Eᵢᵢ − Eₙ₊ᵢ,ₙ₊ᵢ`.
//! * products: block-diagonal, factor bases concatenated in order.
//!
//! Every family also carries a regular element of 𝔞 (the positivity seed)
//! whose positive system is the "upper triangular" one.

use std::sync::Arc;

use num_traits::One;

use crate::exactalg::{Matrix, Rational, Vector};

use super::algebra::{block_diagonal_bases, embed_block};
use super::{LieAlgebraRealization, LieError, RootDatum};

/// A realization shipped together with its split Cartan subspace and seed.
#[derive(Debug, Clone)]
pub struct NamedAlgebra {
    pub name: String,
    pub basis: Vec<Matrix>,
    pub cartan: Vec<Matrix>,
    /// Regular element of 𝔞, in coordinates of `cartan`.
    pub seed: Vector,
    /// Matrix sizes of the block-diagonal factors (a single entry for simple families).
    pub blocks: Vec<usize>,
}

impl NamedAlgebra {
    pub fn realize(&self) -> Result<LieAlgebraRealization, LieError> {
        LieAlgebraRealization::build(self.basis.clone())
    }

    /// Realizes the algebra and builds its root datum from the built-in
    /// Cartan subspace and seed.
    pub fn root_datum(&self) -> Result<RootDatum, LieError> {
        let g = Arc::new(self.realize()?);
        let a = g.span(&cartan_coords(&g, &self.cartan)?);
        RootDatum::new(g, a, &self.seed)
    }
}

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Rational::one();
    m
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub fn sl(n: usize) -> Result<NamedAlgebra, LieError> {
    if n < 2 {
        return Err(LieError::BadFamily(format!("sl({n}) needs n ≥ 2")));
    }
    let mut basis = Vec::new();
    let mut cartan = Vec::new();
    for i in 0..n - 1 {
        let h = unit(n, i, i).sub(&unit(n, i + 1, i + 1));
        cartan.push(h.clone());
        basis.push(h);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit(n, i, j));
            }
        }
    }
    // ρ-like seed: diagonal entries n−1, n−3, …, 1−n.
    let seed = (1..n).map(|i| int((i * (n - i)) as i64)).collect();
    Ok(NamedAlgebra {
        name: format!("sl({n})"),
        basis,
        cartan,
        seed,
        blocks: vec![n],
    })
}

pub fn so(p: usize, q: usize) -> Result<NamedAlgebra, LieError> {
    let n = p + q;
    if n < 2 {
        return Err(LieError::BadFamily(format!("so({p},{q}) needs p + q ≥ 2")));
    }
    let r = p.min(q);
    let mut basis = Vec::new();
    let mut cartan = Vec::new();
    for i in 0..p {
        for j in 0..q {
            let m = unit(n, i, p + j).add(&unit(n, p + j, i));
            if i == j && i < r {
                cartan.push(m.clone());
            }
            basis.push(m);
        }
    }
    for i in 0..p {
        for j in i + 1..p {
            basis.push(unit(n, i, j).sub(&unit(n, j, i)));
        }
    }
    for i in p..n {
        for j in i + 1..n {
            basis.push(unit(n, i, j).sub(&unit(n, j, i)));
        }
    }
    let seed = (0..r).map(|i| int((r - i) as i64)).collect();
    Ok(NamedAlgebra {
        name: format!("so({p},{q})"),
        basis,
        cartan,
        seed,
        blocks: vec![n],
    })
}

/// `sp(2n, ℝ)`; `n` is half the matrix size.
pub fn sp(n: usize) -> Result<NamedAlgebra, LieError> {
    if n < 1 {
        return Err(LieError::BadFamily("sp(2n) needs n ≥ 1".into()));
    }
    let size = 2 * n;
    let mut basis = Vec::new();
    let mut cartan = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let m = unit(size, i, j).sub(&unit(size, n + j, n + i));
            if i == j {
                cartan.push(m.clone());
            }
            basis.push(m);
        }
    }
    for i in 0..n {
        for j in i..n {
            basis.push(if i == j {
                unit(size, i, n + i)
            } else {
                unit(size, i, n + j).add(&unit(size, j, n + i))
            });
        }
    }
    for i in 0..n {
        for j in i..n {
            basis.push(if i == j {
                unit(size, n + i, i)
            } else {
                unit(size, n + i, j).add(&unit(size, n + j, i))
            });
        }
    }
    let seed = (0..n).map(|i| int((n - i) as i64)).collect();
    Ok(NamedAlgebra {
        name: format!("sp({size})"),
        basis,
        cartan,
        seed,
        blocks: vec![size],
    })
}

/// Block-diagonal product of families. Seeds are concatenated.
pub fn product(factors: &[NamedAlgebra]) -> Result<NamedAlgebra, LieError> {
    if factors.is_empty() {
        return Err(LieError::BadFamily(
            "product needs at least one factor".into(),
        ));
    }
    let total: usize = factors.iter().map(|f| f.blocks.iter().sum::<usize>()).sum();
    let basis = block_diagonal_bases(&factors.iter().map(|f| f.basis.clone()).collect::<Vec<_>>());
    let mut cartan = Vec::new();
    let mut seed = Vec::new();
    let mut blocks = Vec::new();
    let mut offset = 0;
    for f in factors {
        for c in &f.cartan {
            cartan.push(embed_block(c, offset, total));
        }
        seed.extend(f.seed.iter().cloned());
        blocks.extend(f.blocks.iter().copied());
        offset += f.blocks.iter().sum::<usize>();
    }
    let name = factors
        .iter()
        .map(|f| f.name.as_str())
        .collect::<Vec<_>>()
        .join(" x ");
    Ok(NamedAlgebra {
        name,
        basis,
        cartan,
        seed,
        blocks,
    })
}

/// Diagonal `{(X, X, …)}` inside a product of identical factors, as matrices.
pub fn diagonal_subalgebra(factors: &[NamedAlgebra]) -> Result<Vec<Matrix>, LieError> {
    let first = factors
        .first()
        .ok_or_else(|| LieError::BadFamily("diagonal needs at least one factor".into()))?;
    if factors.iter().any(|f| f.basis != first.basis) {
        return Err(LieError::BadFamily(
            "diagonal subalgebra needs identical factors".into(),
        ));
    }
    let size: usize = first.blocks.iter().sum();
    let total = size * factors.len();
    Ok(first
        .basis
        .iter()
        .map(|b| {
            (0..factors.len()).fold(Matrix::zeros(total, total), |acc, k| {
                acc.add(&embed_block(b, k * size, total))
            })
        })
        .collect())
}

/// Fixed points of an involution on 𝔤, as coordinate vectors.
///
/// * [`InvolutionKind::Conjugation`]: `σ(X) = J X J⁻¹`.
/// * [`InvolutionKind::Form`]: `σ(X) = −J Xᵀ J⁻¹` (so the fixed points
///   preserve the bilinear form `J`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionKind {
    Conjugation,
    Form,
}

pub fn involution_fixed_points(
    g: &LieAlgebraRealization,
    j: &Matrix,
    kind: InvolutionKind,
) -> Result<Vec<Vector>, LieError> {
    let n = g.matrix_size();
    if j.rows() != n || j.cols() != n {
        return Err(LieError::BadMatrixShape {
            index: 0,
            expected: n,
        });
    }
    let j_inv = j.inverse()?.ok_or(LieError::SingularInvolution)?;
    let d = g.dim();
    let mut sigma = Matrix::zeros(d, d);
    for (col, b) in g.basis().iter().enumerate() {
        let image = match kind {
            InvolutionKind::Conjugation => j.mul(b)?.mul(&j_inv)?,
            InvolutionKind::Form => j
                .mul(&b.transpose())?
                .mul(&j_inv)?
                .scaled(&-Rational::one()),
        };
        let c = g
            .coords_of(&image)
            .ok_or(LieError::InvolutionLeavesAlgebra)?;
        for row in 0..d {
            sigma[(row, col)] = c[row].clone();
        }
    }
    if sigma.mul(&sigma)? != Matrix::identity(d) {
        return Err(LieError::NotAnInvolution);
    }
    let fixed = crate::exactalg::Subspace::kernel(&sigma.sub(&Matrix::identity(d)));
    Ok(fixed.basis().to_vec())
}

/// Coordinates (in the algebra basis) of each Cartan matrix.
pub fn cartan_coords(
    g: &LieAlgebraRealization,
    cartan: &[Matrix],
) -> Result<Vec<Vector>, LieError> {
    cartan
        .iter()
        .enumerate()
        .map(|(i, c)| {
            g.coords_of(c)
                .ok_or(LieError::CartanOutsideAlgebra { index: i })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_dimensions() {
        assert_eq!(sl(2).unwrap().realize().unwrap().dim(), 3);
        assert_eq!(sl(3).unwrap().realize().unwrap().dim(), 8);
        assert_eq!(so(2, 1).unwrap().realize().unwrap().dim(), 3);
        assert_eq!(so(2, 2).unwrap().realize().unwrap().dim(), 6);
        assert_eq!(sp(1).unwrap().realize().unwrap().dim(), 3);
        assert_eq!(sp(2).unwrap().realize().unwrap().dim(), 10);
        let p = product(&[sl(2).unwrap(), sl(2).unwrap()]).unwrap();
        assert_eq!(p.realize().unwrap().dim(), 6);
        assert_eq!(p.cartan.len(), 2);
    }

    #[test]
    fn diagonal_of_product() {
        let f = [sl(2).unwrap(), sl(2).unwrap()];
        let p = product(&f).unwrap();
        let g = p.realize().unwrap();
        let diag = diagonal_subalgebra(&f).unwrap();
        let coords: Vec<Vector> = diag.iter().map(|m| g.coords_of(m).unwrap()).collect();
        assert!(g.is_subalgebra(&g.span(&coords)));
        assert!(diagonal_subalgebra(&[sl(2).unwrap(), sl(3).unwrap()]).is_err());
    }

    #[test]
    fn so21_as_fixed_points_in_sl3() {
        let g = sl(3).unwrap().realize().unwrap();
        let j = Matrix::diagonal(&[int(1), int(1), int(-1)]);
        let h = involution_fixed_points(&g, &j, InvolutionKind::Form).unwrap();
        assert_eq!(h.len(), 3);
        assert!(g.is_subalgebra(&g.span(&h)));
        let conj = involution_fixed_points(&g, &j, InvolutionKind::Conjugation).unwrap();
        assert_eq!(conj.len(), 4);
    }

    #[test]
    fn bad_family_parameters() {
        assert!(sl(1).is_err());
        assert!(sp(0).is_err());
        assert!(product(&[]).is_err());
    }
}
