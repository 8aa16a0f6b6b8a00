use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::{dot, Rational, Vector};
use super::LinalgError;

/// Linear subspace of ℚⁿ in canonical form: its basis is the list of nonzero
/// rows of the reduced row-echelon form of any spanning set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_rref(&Matrix::identity(ambient_dim))
    }

    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(ambient_dim, vectors)?;
        Ok(Self::from_rref(&m))
    }

    /// Span of vectors already known to have the right length.
    pub(crate) fn span_unchecked(ambient_dim: usize, vectors: &[Vector]) -> Self {
        Self::span(ambient_dim, vectors).expect("vector length matches ambient dimension")
    }

    /// Right kernel of `m` as a subspace of ℚ^{cols}.
    pub fn kernel(m: &Matrix) -> Self {
        Self::span_unchecked(m.cols(), &m.kernel())
    }

    /// Image of this subspace under `map` (acting on column vectors).
    pub fn image(&self, map: &Matrix) -> Result<Self, LinalgError> {
        if map.cols() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: map.cols(),
            });
        }
        let imgs: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| map.mul_vec(b).expect("checked above"))
            .collect();
        Ok(Self::span_unchecked(map.rows(), &imgs))
    }

    fn from_rref(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Self, LinalgError> {
        self.check(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Self::span_unchecked(self.ambient_dim, &all))
    }

    /// Intersection via the kernel of the stacked system `Σ aᵢuᵢ − Σ bⱼvⱼ = 0`.
    pub fn intersect(&self, other: &Subspace) -> Result<Self, LinalgError> {
        self.check(other)?;
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        let n = self.ambient_dim;
        let mut stacked = Matrix::zeros(n, p + q);
        for (j, u) in self.basis.iter().enumerate() {
            for i in 0..n {
                stacked[(i, j)] = u[i].clone();
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..n {
                stacked[(i, p + j)] = -v[i].clone();
            }
        }
        let vectors: Vec<Vector> = stacked
            .kernel()
            .into_iter()
            .map(|k| {
                let mut x = vec![Rational::zero(); n];
                for (a, u) in k[..p].iter().zip(&self.basis) {
                    if a.is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        x[i] += a * &u[i];
                    }
                }
                x
            })
            .collect();
        Ok(Self::span_unchecked(n, &vectors))
    }

    /// `true` iff `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && self.coords(v).is_some()
    }

    /// Coordinates of `v` with respect to the canonical basis, or `None` when
    /// `v` is not in the subspace. With an RREF basis the coordinates are just
    /// the entries of `v` at the pivot columns.
    pub fn coords(&self, v: &[Rational]) -> Option<Vector> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.combine(&c);
        (back.as_slice() == v).then_some(c)
    }

    /// `Σ cᵢ bᵢ` over the canonical basis.
    pub fn combine(&self, coeffs: &[Rational]) -> Vector {
        let mut x = vec![Rational::zero(); self.ambient_dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.ambient_dim {
                if !b[i].is_zero() {
                    x[i] += c * &b[i];
                }
            }
        }
        x
    }

    /// `{x : xᵀ·gram·u = 0 for all u in self}`.
    pub fn orth_complement(&self, gram: &Matrix) -> Result<Self, LinalgError> {
        if !gram.is_square() {
            return Err(LinalgError::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if gram.rows() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: gram.rows(),
            });
        }
        if self.is_zero() {
            return Ok(Self::full(self.ambient_dim));
        }
        let rows: Vec<Vector> = self
            .basis
            .iter()
            .map(|u| gram.mul_vec(u).expect("square gram of matching size"))
            .collect();
        let m = Matrix::from_rows(self.ambient_dim, &rows)?;
        Ok(Self::kernel(&m))
    }

    /// Annihilator with respect to the standard dot product.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient_dim);
        }
        let m = Matrix::from_rows(self.ambient_dim, &self.basis).expect("basis rows");
        Self::kernel(&m)
    }

    /// The `onto`-component of `x` in the decomposition ambient = `onto ⊕ along`.
    pub fn project(
        x: &[Rational],
        onto: &Subspace,
        along: &Subspace,
    ) -> Result<Vector, LinalgError> {
        onto.check(along)?;
        if x.len() != onto.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: onto.ambient_dim,
                found: x.len(),
            });
        }
        if onto.dim() + along.dim() != onto.ambient_dim || !onto.sum(along)?.is_full() {
            return Err(LinalgError::NotDirectSum);
        }
        Ok(Self::project_unchecked(x, onto, along))
    }

    /// Projection onto `onto` along `along` where `x ∈ onto ⊕ along` but the
    /// sum need not be the whole ambient space. Errors if `x` is outside the sum
    /// or the sum is not direct.
    pub fn project_within(
        x: &[Rational],
        onto: &Subspace,
        along: &Subspace,
    ) -> Result<Vector, LinalgError> {
        onto.check(along)?;
        if !onto.intersect(along)?.is_zero() {
            return Err(LinalgError::NotDirectSum);
        }
        let total = onto.sum(along)?;
        if !total.contains_vector(x) {
            return Err(LinalgError::NotContained);
        }
        Ok(Self::project_unchecked(x, onto, along))
    }

    fn project_unchecked(x: &[Rational], onto: &Subspace, along: &Subspace) -> Vector {
        let n = onto.ambient_dim;
        let (p, q) = (onto.dim(), along.dim());
        let mut m = Matrix::zeros(n, p + q);
        for (j, u) in onto.basis.iter().chain(&along.basis).enumerate() {
            for i in 0..n {
                m[(i, j)] = u[i].clone();
            }
        }
        let c = m
            .solve(x)
            .expect("sizes match")
            .expect("x lies in onto ⊕ along");
        onto.combine(&c[..p])
    }

    /// Orthogonal projection onto `self` with respect to `gram`.
    pub fn orthogonal_projection(
        &self,
        x: &[Rational],
        gram: &Matrix,
    ) -> Result<Vector, LinalgError> {
        let perp = self.orth_complement(gram)?;
        Self::project(x, self, &perp)
    }

    /// Gram matrix of the canonical basis under `gram`.
    pub fn restricted_gram(&self, gram: &Matrix) -> Matrix {
        let d = self.dim();
        let gb: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| gram.mul_vec(b).expect("matching gram"))
            .collect();
        let mut out = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                out[(i, j)] = dot(&self.basis[i], &gb[j]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn e(n: usize, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    }

    #[test]
    fn sum_of_axes() {
        let u = Subspace::span(3, &[e(3, 0)]).unwrap();
        let v = Subspace::span(3, &[e(3, 1)]).unwrap();
        assert_eq!(
            u.sum(&v).unwrap(),
            Subspace::span(3, &[e(3, 0), e(3, 1)]).unwrap()
        );
    }

    #[test]
    fn intersect_hand_example() {
        let u = Subspace::span(3, &[vec![q(1), q(1), q(0)], e(3, 2)]).unwrap();
        let v = Subspace::span(3, &[e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(
            u.intersect(&v).unwrap(),
            Subspace::span(3, &[e(3, 2)]).unwrap()
        );
    }

    #[test]
    fn whole_space_contains_everything() {
        let w = Subspace::full(4);
        let any = Subspace::span(4, &[vec![q(1), q(-2), q(3), q(5)]]).unwrap();
        assert!(w.contains(&any).unwrap());
        assert!(!any.contains(&w).unwrap());
    }

    #[test]
    fn mismatched_dimensions_error() {
        let u = Subspace::zero(2);
        let v = Subspace::zero(3);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
    }

    #[test]
    fn orth_complement_examples() {
        let n = 4;
        let u = Subspace::span(n, &[e(n, 0)]).unwrap();
        let c = u.orth_complement(&Matrix::identity(n)).unwrap();
        assert_eq!(c, Subspace::span(n, &[e(n, 1), e(n, 2), e(n, 3)]).unwrap());
        assert_eq!(
            Subspace::zero(n)
                .orth_complement(&Matrix::identity(n))
                .unwrap(),
            Subspace::full(n)
        );

        let u = Subspace::span(2, &[vec![q(1), q(1)]]).unwrap();
        let g = Matrix::diagonal(&[q(1), q(2)]);
        let c = u.orth_complement(&g).unwrap();
        assert_eq!(c, Subspace::span(2, &[vec![q(-2), q(1)]]).unwrap());
        assert!(u.orth_complement(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn project_examples() {
        let onto = Subspace::span(2, &[e(2, 0)]).unwrap();
        let along = Subspace::span(2, &[e(2, 1)]).unwrap();
        let x = vec![q(1), q(1)];
        assert_eq!(Subspace::project(&x, &onto, &along).unwrap(), e(2, 0));
        assert_eq!(Subspace::project(&e(2, 0), &onto, &along).unwrap(), e(2, 0));
        assert_eq!(
            Subspace::project(&x, &onto, &onto),
            Err(LinalgError::NotDirectSum)
        );
    }

    #[test]
    fn coords_read_off_pivots() {
        let s = Subspace::span(3, &[vec![q(2), q(4), q(0)], e(3, 2)]).unwrap();
        let v = vec![q(3), q(6), q(-1)];
        assert_eq!(s.coords(&v).unwrap(), vec![q(3), q(-1)]);
        assert!(s.coords(&e(3, 1)).is_none());
    }
}
