use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::exactalg::{dot, Matrix, Rational, Subspace, Vector};

use super::eigen::rational_eigenvalues;
use super::{LieAlgebraRealization, LieError};

/// Upper bound on the number of Weyl group elements enumerated.
pub const WEYL_SAFETY_BOUND: usize = 10_000_000;

/// A rational linear functional on 𝔞, stored as its values on the canonical
/// basis of 𝔞 (or of a subspace of 𝔞 after restriction).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Covector(pub Vec<Rational>);

impl Covector {
    pub fn zero(n: usize) -> Self {
        Covector(vec![Rational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Covector) -> Covector {
        Covector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Covector) -> Covector {
        Covector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Covector {
        Covector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Covector {
        Covector(self.0.iter().map(|a| a * c).collect())
    }

    /// Pairing with a coordinate vector in the same basis.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.0, x)
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub covector: Covector,
    pub space: Subspace,
}

impl Root {
    pub fn multiplicity(&self) -> usize {
        self.space.dim()
    }
}

/// Restricted root decomposition `𝔤 = 𝔪 ⊕ 𝔞 ⊕ ⊕_α 𝔤^α` with a chosen
/// positive system.
#[derive(Debug, Clone)]
pub struct RootDatum {
    g: Arc<LieAlgebraRealization>,
    a: Subspace,
    roots: Vec<Root>,
    index: HashMap<Covector, usize>,
    zero_space: Subspace,
    m_space: Subspace,
    positive: Vec<bool>,
    simple: Vec<usize>,
    /// Inverse of the gram matrix of 𝔞, used for the dual inner product.
    a_gram_inv: Matrix,
    /// Simple-reflection word relating this positive system to the one the
    /// datum was first built with.
    word: Vec<usize>,
}

impl RootDatum {
    /// Simultaneous `ad(𝔞)` eigenspace decomposition. `seed` is a regular
    /// element of 𝔞 in coordinates of the canonical basis of `a`;
    /// `Σ⁺ = {α : α(seed) > 0}`.
    pub fn new(
        g: Arc<LieAlgebraRealization>,
        a: Subspace,
        seed: &[Rational],
    ) -> Result<Self, LieError> {
        if a.ambient_dim() != g.dim() {
            return Err(LieError::Linalg(
                crate::exactalg::LinalgError::DimensionMismatch {
                    expected: g.dim(),
                    found: a.ambient_dim(),
                },
            ));
        }
        let s = g.s_space();
        if !s.contains(&a)? {
            return Err(LieError::CartanNotSymmetric);
        }
        if !g.bracket_space(&a, &a).is_zero() {
            return Err(LieError::CartanNotAbelian);
        }
        let centralizer = g.centralizer(&a);
        if centralizer.intersect(&s)? != a {
            return Err(LieError::CartanNotMaximal);
        }
        if seed.len() != a.dim() {
            return Err(LieError::SeedLength {
                expected: a.dim(),
                found: seed.len(),
            });
        }

        let mut pieces: Vec<(Vec<Rational>, Subspace)> = vec![(Vec::new(), g.whole())];
        for h in a.basis() {
            let op = g.ad(h);
            let eigenvalues =
                rational_eigenvalues(&op, g.gram()).ok_or(LieError::NotSplitAdapted)?;
            let eigenspaces: Vec<(Rational, Subspace)> = eigenvalues
                .into_iter()
                .map(|lam| {
                    let shifted = op.sub(&Matrix::identity(g.dim()).scaled(&lam));
                    (lam, Subspace::kernel(&shifted))
                })
                .collect();
            let mut next = Vec::new();
            for (label, w) in &pieces {
                for (lam, e) in &eigenspaces {
                    let part = w.intersect(e)?;
                    if !part.is_zero() {
                        let mut l = label.clone();
                        l.push(lam.clone());
                        next.push((l, part));
                    }
                }
            }
            pieces = next;
        }
        let total: usize = pieces.iter().map(|(_, w)| w.dim()).sum();
        if total != g.dim() {
            return Err(LieError::NotSplitAdapted);
        }

        let mut zero_space = Subspace::zero(g.dim());
        let mut roots = Vec::new();
        for (label, w) in pieces {
            let c = Covector(label);
            if c.is_zero() {
                zero_space = w;
            } else {
                roots.push(Root {
                    covector: c,
                    space: w,
                });
            }
        }
        roots.sort_by(|x, y| x.covector.cmp(&y.covector));

        let mut positive = Vec::with_capacity(roots.len());
        for r in &roots {
            let v = r.covector.eval(seed);
            if v.is_zero() {
                return Err(LieError::SeedVanishes(r.covector.to_string()));
            }
            positive.push(v.is_positive());
        }

        let m_space = zero_space.intersect(&g.k_space())?;
        let a_gram_inv = a
            .restricted_gram(g.gram())
            .inverse()?
            .expect("gram of 𝔞 is positive definite");
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.covector.clone(), i))
            .collect();
        let mut rd = Self {
            g,
            a,
            roots,
            index,
            zero_space,
            m_space,
            positive,
            simple: Vec::new(),
            a_gram_inv,
            word: Vec::new(),
        };
        rd.simple = rd.compute_simple();
        Ok(rd)
    }

    fn compute_simple(&self) -> Vec<usize> {
        let pos: Vec<usize> = self.positive_roots().collect();
        let sums: HashSet<Covector> = pos
            .iter()
            .flat_map(|&i| pos.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.roots[i].covector.add(&self.roots[j].covector))
            .collect();
        pos.into_iter()
            .filter(|&i| !sums.contains(&self.roots[i].covector))
            .collect()
    }

    pub fn algebra(&self) -> &Arc<LieAlgebraRealization> {
        &self.g
    }

    pub fn a_space(&self) -> &Subspace {
        &self.a
    }

    pub fn rank(&self) -> usize {
        self.a.dim()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn root_index(&self, c: &Covector) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive[i]
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(|&i| self.positive[i])
    }

    pub fn negative_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(|&i| !self.positive[i])
    }

    /// Indices (into [`roots`](Self::roots)) of the simple roots, in root order.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn zero_space(&self) -> &Subspace {
        &self.zero_space
    }

    pub fn m_space(&self) -> &Subspace {
        &self.m_space
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Coordinates of an element of 𝔞 (given in 𝔤-coordinates) in the
    /// canonical basis of 𝔞.
    pub fn a_coords(&self, x: &[Rational]) -> Option<Vector> {
        self.a.coords(x)
    }

    /// `α(X)` for `X ∈ 𝔞` in 𝔤-coordinates.
    pub fn evaluate(&self, c: &Covector, x: &[Rational]) -> Option<Rational> {
        self.a_coords(x).map(|ax| c.eval(&ax))
    }

    /// Values of `c` on the canonical basis of a subspace of 𝔞.
    pub fn restrict(&self, c: &Covector, sub: &Subspace) -> Option<Covector> {
        sub.basis()
            .iter()
            .map(|b| self.evaluate(c, b))
            .collect::<Option<Vec<_>>>()
            .map(Covector)
    }

    /// Dual inner product `(α, β)` induced by the gram form on 𝔞.
    pub fn pairing(&self, x: &Covector, y: &Covector) -> Rational {
        dot(&x.0, &self.a_gram_inv.mul_vec(&y.0).expect("covector on 𝔞"))
    }

    pub fn reflect(&self, root: &Covector, x: &Covector) -> Covector {
        let two = Rational::from_integer(2.into());
        let c = two * self.pairing(x, root) / self.pairing(root, root);
        x.sub(&root.scale(&c))
    }

    /// Simple reflections as permutations of root indices.
    pub fn simple_reflections(&self) -> Result<Vec<Vec<usize>>, LieError> {
        self.simple
            .iter()
            .map(|&s| {
                let alpha = &self.roots[s].covector;
                self.roots
                    .iter()
                    .map(|r| {
                        let image = self.reflect(alpha, &r.covector);
                        self.root_index(&image)
                            .ok_or_else(|| LieError::NotRootSystem(image.to_string()))
                    })
                    .collect()
            })
            .collect()
    }

    /// Expansion of a covector in the simple roots (`None` outside their span).
    pub fn simple_coordinates(&self, c: &Covector) -> Option<Vector> {
        let r = self.rank();
        let k = self.simple.len();
        let mut m = Matrix::zeros(r, k);
        for (j, &s) in self.simple.iter().enumerate() {
            for i in 0..r {
                m[(i, j)] = self.roots[s].covector.0[i].clone();
            }
        }
        m.solve(&c.0).ok().flatten()
    }

    /// `𝔭 = 𝔪 ⊕ 𝔞 ⊕ ⊕_{α ∈ Σ⁺} 𝔤^α`.
    pub fn minimal_parabolic(&self) -> Subspace {
        self.positive_roots()
            .fold(self.zero_space.clone(), |acc, i| {
                acc.sum(&self.roots[i].space).expect("same ambient")
            })
    }

    /// Basis of 𝔤 made of `ad(𝔞)` weight vectors: the canonical basis of
    /// 𝔪 ⊕ 𝔞 (weight 0) followed by each root space in root order.
    pub fn weight_basis(&self) -> Vec<(Covector, Vector)> {
        let r = self.rank();
        let mut out: Vec<(Covector, Vector)> = self
            .zero_space
            .basis()
            .iter()
            .map(|b| (Covector::zero(r), b.clone()))
            .collect();
        for root in &self.roots {
            for b in root.space.basis() {
                out.push((root.covector.clone(), b.clone()));
            }
        }
        out
    }

    fn with_positive(&self, positive: Vec<bool>, word: Vec<usize>) -> Self {
        let mut rd = self.clone();
        rd.positive = positive;
        rd.word = word;
        rd.simple = rd.compute_simple();
        rd
    }

    /// All positive systems `w(Σ⁺)`, `w` in the restricted Weyl group, in
    /// shortlex order of simple-reflection words (identity first).
    pub fn weyl_twists(&self) -> Result<Vec<RootDatum>, LieError> {
        let gens = self.simple_reflections()?;
        let n = self.roots.len();
        let identity: Vec<usize> = (0..n).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
        let mut frontier = vec![(identity, Vec::<usize>::new())];
        let mut out = Vec::new();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (perm, word) in frontier {
                let mut pos = vec![false; n];
                for i in self.positive_roots() {
                    pos[perm[i]] = true;
                }
                out.push(self.with_positive(pos, word.clone()));
                for (gi, s) in gens.iter().enumerate() {
                    let composed: Vec<usize> = (0..n).map(|j| perm[s[j]]).collect();
                    if seen.insert(composed.clone()) {
                        if seen.len() > WEYL_SAFETY_BOUND {
                            return Err(LieError::WeylTooLarge(WEYL_SAFETY_BOUND));
                        }
                        let mut w = word.clone();
                        w.push(gi);
                        next.push((composed, w));
                    }
                }
            }
            frontier = next;
        }
        Ok(out)
    }
}
