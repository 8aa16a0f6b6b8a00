use num_traits::{One, Zero};

use crate::exactalg::{Matrix, Rational, Subspace, Vector};

use super::LieError;

/// A real matrix Lie algebra given by an ordered basis of `n×n` rational
/// matrices, with the Cartan involution `θ(X) = −Xᵀ` and the inner product
/// `⟨X, Y⟩ = Tr(X Yᵀ)`.
///
/// Elements are handled as coordinate vectors with respect to the basis.
#[derive(Debug, Clone)]
pub struct LieAlgebraRealization {
    matrix_size: usize,
    basis: Vec<Matrix>,
    /// `structure[i][j]` = coordinates of `[bᵢ, bⱼ]`.
    structure: Vec<Vec<Vector>>,
    /// Column `j` holds the coordinates of `θ(bⱼ)`.
    theta: Matrix,
    gram: Matrix,
    coord_positions: Vec<usize>,
    coord_inverse: Matrix,
}

impl LieAlgebraRealization {
    /// Validates and builds a realization: square matrices of equal size,
    /// linearly independent, closed under the commutator, θ-stable, Jacobi.
    pub fn build(basis: Vec<Matrix>) -> Result<Self, LieError> {
        let n = basis.first().map(Matrix::rows).unwrap_or(0);
        for (i, b) in basis.iter().enumerate() {
            if !b.is_square() || b.rows() != n {
                return Err(LieError::BadMatrixShape {
                    index: i,
                    expected: n,
                });
            }
        }
        let dim = basis.len();
        let flat: Vec<Vector> = basis.iter().map(|b| b.entries().to_vec()).collect();
        let stacked = Matrix::from_rows(n * n, &flat)?;
        let (_, pivots) = stacked.rref_with_pivots();
        if pivots.len() < dim {
            return Err(LieError::DependentBasis);
        }
        let mut restricted = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for (k, &p) in pivots.iter().enumerate() {
                restricted[(i, k)] = flat[i][p].clone();
            }
        }
        let coord_inverse = restricted
            .inverse()?
            .expect("pivot columns of an independent family give an invertible block");

        let mut g = Self {
            matrix_size: n,
            basis,
            structure: Vec::new(),
            theta: Matrix::zeros(dim, dim),
            gram: Matrix::zeros(dim, dim),
            coord_positions: pivots,
            coord_inverse,
        };

        g.structure = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let c = g.basis[i].commutator(&g.basis[j]);
                        g.coords_of(&c)
                            .ok_or(LieError::NotClosed { left: i, right: j })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;

        for j in 0..dim {
            let t = g.basis[j].transpose().scaled(&-Rational::one());
            let c = g
                .coords_of(&t)
                .ok_or(LieError::NotThetaStable { index: j })?;
            for (i, ci) in c.into_iter().enumerate() {
                g.theta[(i, j)] = ci;
            }
        }

        for i in 0..dim {
            for j in 0..dim {
                let v = g.basis[i]
                    .entries()
                    .iter()
                    .zip(g.basis[j].entries())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                g.gram[(i, j)] = v;
            }
        }
        if dim > 0 && !g.gram.is_symmetric_positive_definite() {
            return Err(LieError::GramNotPositive);
        }
        g.check_jacobi()?;
        g.check_theta_automorphism()?;
        Ok(g)
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let d = self.dim();
        let e = |i: usize| unit(d, i);
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let a = self.bracket(&e(i), &self.bracket(&e(j), &e(k)));
                    let b = self.bracket(&e(j), &self.bracket(&e(k), &e(i)));
                    let c = self.bracket(&e(k), &self.bracket(&e(i), &e(j)));
                    if (0..d).any(|t| !(&a[t] + &b[t] + &c[t]).is_zero()) {
                        return Err(LieError::JacobiFails { triple: (i, j, k) });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_theta_automorphism(&self) -> Result<(), LieError> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.apply_theta(&self.structure[i][j]);
                let rhs = self.bracket(&self.theta.column(i), &self.theta.column(j));
                if lhs != rhs {
                    return Err(LieError::ThetaNotAutomorphism { left: i, right: j });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Structure constants: coordinates of `[bᵢ, bⱼ]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[Rational] {
        &self.structure[i][j]
    }

    /// Coordinates of a matrix in the basis, `None` if it lies outside 𝔤.
    pub fn coords_of(&self, m: &Matrix) -> Option<Vector> {
        if m.rows() != self.matrix_size || m.cols() != self.matrix_size {
            return None;
        }
        let entries = m.entries();
        let picked: Vector = self
            .coord_positions
            .iter()
            .map(|&p| entries[p].clone())
            .collect();
        let d = self.dim();
        let c: Vector = (0..d)
            .map(|k| {
                picked
                    .iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (i, x)| {
                        acc + x * &self.coord_inverse[(i, k)]
                    })
            })
            .collect();
        (self.to_matrix(&c) == *m).then_some(c)
    }

    pub fn to_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.matrix_size;
        let mut m = Matrix::zeros(n, n);
        for (c, b) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scaled(c));
            }
        }
        m
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, s) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !s.is_zero() {
                        *o += &c * s;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)` acting on coordinate column vectors.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let col = self.bracket(x, &unit(d, j));
            for i in 0..d {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn apply_theta(&self, x: &[Rational]) -> Vector {
        self.theta.mul_vec(x).expect("coordinate vector of 𝔤")
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        crate::exactalg::dot(x, &self.gram.mul_vec(y).expect("coordinate vector of 𝔤"))
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn span(&self, vectors: &[Vector]) -> Subspace {
        Subspace::span(self.dim(), vectors).expect("coordinate vectors of 𝔤")
    }

    fn eigenspace_of_theta(&self, sign: i64) -> Subspace {
        let d = self.dim();
        let shift = Matrix::identity(d).scaled(&Rational::from_integer(sign.into()));
        Subspace::kernel(&self.theta.sub(&shift))
    }

    /// 𝔰: the −1 eigenspace of θ (symmetric matrices in 𝔤).
    pub fn s_space(&self) -> Subspace {
        self.eigenspace_of_theta(-1)
    }

    /// 𝔨: the +1 eigenspace of θ (antisymmetric matrices in 𝔤).
    pub fn k_space(&self) -> Subspace {
        self.eigenspace_of_theta(1)
    }

    /// `{X ∈ 𝔤 : [X, s] = 0 for all s ∈ S}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let d = self.dim();
        if s.is_zero() {
            return self.whole();
        }
        let mut rows = Vec::new();
        for b in s.basis() {
            rows.extend(self.ad(b).row_vectors());
        }
        // [X, b] = −ad(b)X, so the kernel of the stacked ad(b) is the centralizer.
        Subspace::kernel(&Matrix::from_rows(d, &rows).expect("square ad matrices"))
    }

    /// `{X ∈ 𝔤 : [X, h] ∈ H for all h ∈ H}`.
    pub fn normalizer(&self, h: &Subspace) -> Subspace {
        let d = self.dim();
        let ann = h.annihilator();
        if ann.is_zero() || h.is_zero() {
            return self.whole();
        }
        let ann_m = Matrix::from_rows(d, ann.basis()).expect("annihilator rows");
        let mut rows = Vec::new();
        for b in h.basis() {
            let m = ann_m.mul(&self.ad(b)).expect("square ad matrices");
            rows.extend(m.row_vectors());
        }
        Subspace::kernel(&Matrix::from_rows(d, &rows).expect("rows of length dim"))
    }

    /// Span of all `[a, b]` for `a ∈ A`, `b ∈ B`.
    pub fn bracket_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vs.push(self.bracket(x, y));
            }
        }
        self.span(&vs)
    }

    pub fn is_subalgebra(&self, h: &Subspace) -> bool {
        h.contains(&self.bracket_space(h, h)).unwrap_or(false)
    }

    /// Smallest ideal of `within` (a subalgebra) containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace, within: &Subspace) -> Subspace {
        let mut ideal = seed.clone();
        loop {
            let next = ideal
                .sum(&self.bracket_space(within, &ideal))
                .expect("same ambient");
            if next.dim() == ideal.dim() {
                return ideal;
            }
            ideal = next;
        }
    }

    /// Block-diagonal direct sum `𝔤₁ ⊕ 𝔤₂ ⊕ …` of realizations.
    pub fn direct_sum(factors: &[LieAlgebraRealization]) -> Result<Self, LieError> {
        Self::build(block_diagonal_bases(
            &factors.iter().map(|f| f.basis.clone()).collect::<Vec<_>>(),
        ))
    }
}

/// Embeds each factor's basis block-diagonally, factor by factor.
pub(crate) fn block_diagonal_bases(factors: &[Vec<Matrix>]) -> Vec<Matrix> {
    let sizes: Vec<usize> = factors
        .iter()
        .map(|f| f.first().map(Matrix::rows).unwrap_or(0))
        .collect();
    let total: usize = sizes.iter().sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for (f, &sz) in factors.iter().zip(&sizes) {
        for b in f {
            out.push(embed_block(b, offset, total));
        }
        offset += sz;
    }
    out
}

pub(crate) fn embed_block(b: &Matrix, offset: usize, total: usize) -> Matrix {
    let mut m = Matrix::zeros(total, total);
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m[(offset + i, offset + j)] = b[(i, j)].clone();
        }
    }
    m
}

pub(crate) fn unit(d: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); d];
    v[i] = Rational::one();
    v
}
