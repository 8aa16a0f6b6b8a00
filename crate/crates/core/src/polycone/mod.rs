//! Exact rational polyhedral cones carried in both generator and inequality
//! form.
//!
//! Conventions: inequalities read `⟨a, x⟩ ≤ 0`, and the dual of `C` is
//! `C* = {y : ⟨y, x⟩ ≤ 0 for all x ∈ C}`. A cone is stored canonically as
//!
//! * a lineality basis (reduced echelon rows, scaled to primitive integers)
//!   and the extreme rays of `C ∩ L^⊥` (primitive integers, sorted);
//! * the same data for `C*`.
//!
//! The inequality list of `C` is the generator list of `C*`, so equal cones
//! have equal representations.

mod dd;
pub mod fm;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactalg::{dot, Matrix, Rational, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("vector of length {found} in a cone of ambient dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Description {
    lineality: Vec<Vector>,
    rays: Vec<Vector>,
}

impl Description {
    fn canonical(dim: usize, lineality: &[Vector], rays: &[Vector]) -> Self {
        let l = Subspace::span(dim, lineality).expect("vectors of length dim");
        let lineality: Vec<Vector> = l.basis().iter().map(|b| dd::primitive(b)).collect();
        let mut rays: Vec<Vector> = rays
            .iter()
            .map(|r| {
                let perp = sub_projection(r, &l);
                dd::primitive(&perp)
            })
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        rays.sort();
        rays.dedup();
        Self { lineality, rays }
    }

    fn vectors(&self) -> Vec<Vector> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|x| -x).collect());
        }
        out
    }
}

/// `r` minus its standard-orthogonal projection onto `l`.
fn sub_projection(r: &[Rational], l: &Subspace) -> Vector {
    if l.is_zero() {
        return r.to_vec();
    }
    let onto_perp = l.annihilator();
    Subspace::project(r, &onto_perp, l).expect("L ⊕ L^⊥ is the whole space")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    dim: usize,
    primal: Description,
    dual: Description,
}

impl Cone {
    fn check(dim: usize, vs: &[Vector]) -> Result<(), ConeError> {
        match vs.iter().find(|v| v.len() != dim) {
            Some(v) => Err(ConeError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            }),
            None => Ok(()),
        }
    }

    /// `{x : ⟨a, x⟩ ≤ 0 for every a}`.
    pub fn from_inequalities(dim: usize, inequalities: &[Vector]) -> Result<Self, ConeError> {
        Self::check(dim, inequalities)?;
        let (l, r) = dd::generators_of(dim, inequalities);
        let primal = Description::canonical(dim, &l, &r);
        let (dl, dr) = dd::generators_of(dim, &primal.vectors());
        let dual = Description::canonical(dim, &dl, &dr);
        Ok(Self { dim, primal, dual })
    }

    /// The conic hull of the given vectors (`{0}` for an empty list).
    pub fn from_generators(dim: usize, generators: &[Vector]) -> Result<Self, ConeError> {
        Self::check(dim, generators)?;
        Ok(Self::from_inequalities(dim, generators)?.dual())
    }

    pub fn full(dim: usize) -> Self {
        Self::from_inequalities(dim, &[]).expect("no inequalities")
    }

    pub fn zero(dim: usize) -> Self {
        Self::full(dim).dual()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dual(&self) -> Self {
        Self {
            dim: self.dim,
            primal: self.dual.clone(),
            dual: self.primal.clone(),
        }
    }

    /// Reduced generating set: the rays, then `±` each lineality vector.
    pub fn generators(&self) -> Vec<Vector> {
        self.primal.vectors()
    }

    /// Reduced inequality system `⟨a, x⟩ ≤ 0`; equalities appear as `±a`.
    pub fn inequalities(&self) -> Vec<Vector> {
        self.dual.vectors()
    }

    /// Extreme rays of `C ∩ L^⊥`.
    pub fn rays(&self) -> &[Vector] {
        &self.primal.rays
    }

    pub fn lineality_basis(&self) -> &[Vector] {
        &self.primal.lineality
    }

    /// The edge `C ∩ −C`.
    pub fn edge(&self) -> Subspace {
        Subspace::span(self.dim, &self.primal.lineality).expect("vectors of length dim")
    }

    pub fn is_sharp(&self) -> bool {
        self.primal.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.primal.lineality.is_empty() && self.primal.rays.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.primal.lineality.len() == self.dim
    }

    /// Dimension of the linear span of the cone.
    pub fn span_dim(&self) -> usize {
        let gens = self.generators();
        if gens.is_empty() {
            0
        } else {
            Matrix::from_rows(self.dim, &gens)
                .expect("vectors of length dim")
                .rank()
        }
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.inequalities().iter().all(|a| !dot(a, x).is_positive())
    }

    /// Whether `x` satisfies every inequality strictly.
    pub fn strictly_contains_point(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.inequalities().iter().all(|a| dot(a, x).is_negative())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Cone) -> bool {
        self.dim == other.dim && other.generators().iter().all(|g| self.contains_point(g))
    }

    pub fn equals(&self, other: &Cone) -> bool {
        self.contains(other) && other.contains(self)
    }

    pub fn intersection(&self, other: &Cone) -> Result<Cone, ConeError> {
        if self.dim != other.dim {
            return Err(ConeError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut ineqs = self.inequalities();
        ineqs.extend(other.inequalities());
        Cone::from_inequalities(self.dim, &ineqs)
    }

    /// Image under `map` (a `target × ambient` matrix).
    pub fn linear_image(&self, map: &Matrix) -> Result<Cone, ConeError> {
        if map.cols() != self.dim {
            return Err(ConeError::DimensionMismatch {
                expected: self.dim,
                found: map.cols(),
            });
        }
        let images: Vec<Vector> = self
            .generators()
            .iter()
            .map(|g| map.mul_vec(g).expect("columns match"))
            .collect();
        Cone::from_generators(map.rows(), &images)
    }

    /// A point in the relative interior (sum of the rays and of the lineality
    /// basis), with a flag telling whether the cone is full-dimensional.
    /// `None` for the zero cone.
    pub fn interior_point(&self) -> Option<(Vector, bool)> {
        if self.is_zero() {
            return None;
        }
        let mut x = vec![Rational::zero(); self.dim];
        for v in self.primal.rays.iter().chain(&self.primal.lineality) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += vi;
            }
        }
        Some((x, self.span_dim() == self.dim))
    }
}

/// `{X : ν(X) ≤ 0 for every nonzero ν in the set}`.
pub fn support_cone(dim: usize, weights: &[Vector]) -> Result<Cone, ConeError> {
    let nonzero: Vec<Vector> = weights
        .iter()
        .filter(|w| w.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    Cone::from_inequalities(dim, &nonzero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect()
    }

    #[test]
    fn half_line() {
        let c = Cone::from_inequalities(1, &[v(&[1])]).unwrap();
        assert_eq!(c.generators(), vec![v(&[-1])]);
        assert!(c.is_sharp());
        assert_eq!(c.interior_point(), Some((v(&[-1]), true)));
        let d = c.dual();
        assert_eq!(d.generators(), vec![v(&[1])]);
    }

    #[test]
    fn full_plane() {
        let c = Cone::from_inequalities(2, &[]).unwrap();
        let mut gens = c.generators();
        gens.sort();
        let mut expected = vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])];
        expected.sort();
        assert_eq!(gens, expected);
        assert!(c.edge().is_full());
        assert!(c.dual().is_zero());
        assert!(Cone::zero(2).dual().is_full());
    }

    #[test]
    fn wedge_vertex_enumeration() {
        let c = Cone::from_inequalities(2, &[v(&[1, 1]), v(&[1, -1])]).unwrap();
        assert_eq!(c.rays(), &[v(&[-1, -1]), v(&[-1, 1])]);
        assert!(c.contains_point(&v(&[-5, 2])));
        assert!(!c.contains_point(&v(&[1, 0])));
    }

    #[test]
    fn half_plane_edge() {
        let c = Cone::from_inequalities(2, &[v(&[1, 0])]).unwrap();
        assert_eq!(c.edge().basis(), &[v(&[0, 1])]);
        assert_eq!(c.rays(), &[v(&[-1, 0])]);
    }

    #[test]
    fn containment_and_equality() {
        let ray = Cone::from_generators(1, &[v(&[-1])]).unwrap();
        let half = Cone::from_inequalities(1, &[v(&[1])]).unwrap();
        assert!(half.contains(&ray));
        assert!(!ray.contains(&Cone::full(1)));
        let q1 = Cone::from_inequalities(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let q2 = Cone::from_inequalities(2, &[v(&[2, 0]), v(&[0, 3]), v(&[1, 1])]).unwrap();
        assert!(q1.equals(&q2));
        assert_eq!(q1, q2);
    }

    #[test]
    fn linear_images() {
        let q = Cone::from_inequalities(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let map = Matrix::from_rows(2, &[vec![half.clone(), -half]]).unwrap();
        assert!(q.linear_image(&map).unwrap().is_full());
        assert_eq!(q.linear_image(&Matrix::identity(2)).unwrap(), q);
        assert!(q.linear_image(&Matrix::zeros(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn interior_points() {
        let q = Cone::from_inequalities(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(q.interior_point(), Some((v(&[-1, -1]), true)));
        assert_eq!(Cone::zero(3).interior_point(), None);
        let line = Cone::from_generators(2, &[v(&[1, 1]), v(&[-1, -1])]).unwrap();
        let (_, full) = line.interior_point().unwrap();
        assert!(!full);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c =
            Cone::from_generators(2, &[v(&[1, 0]), v(&[1, 1]), v(&[0, 1]), v(&[3, 1])]).unwrap();
        assert_eq!(c.rays(), &[v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(c.inequalities().len(), 2);
    }

    #[test]
    fn mismatched_dimensions() {
        assert!(matches!(
            Cone::from_inequalities(2, &[v(&[1])]),
            Err(ConeError::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn support_cone_ignores_zero() {
        assert!(support_cone(2, &[v(&[0, 0])]).unwrap().is_full());
        let c = support_cone(1, &[v(&[0]), v(&[4])]).unwrap();
        assert_eq!(c.generators(), vec![v(&[-1])]);
    }

    #[test]
    fn three_dimensional_pyramid() {
        // Cone over a square.
        let gens = [
            v(&[1, 1, 1]),
            v(&[1, -1, 1]),
            v(&[-1, 1, 1]),
            v(&[-1, -1, 1]),
        ];
        let c = Cone::from_generators(3, &gens).unwrap();
        assert_eq!(c.rays().len(), 4);
        assert_eq!(c.inequalities().len(), 4);
        assert_eq!(c.dual().dual(), c);
    }
}
