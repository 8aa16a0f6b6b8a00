use num_traits::Zero;

use crate::exactalg::{Rational, Subspace};

use super::roots::{Covector, RootDatum};
use super::LieError;

/// A standard parabolic `𝔮 = 𝔩 ⊕ 𝔲 ⊇ 𝔭` together with the pieces of its
/// Levi factor.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    /// Positions in [`RootDatum::simple_roots`] of the marked simple roots.
    pub marked_simple: Vec<usize>,
    pub q: Subspace,
    pub l: Subspace,
    pub u: Subspace,
    pub u_bar: Subspace,
    /// `[𝔩, 𝔩]`.
    pub l_derived: Subspace,
    pub l_n: Subspace,
    pub l_c: Subspace,
    pub z_l: Subspace,
    pub z_l_np: Subspace,
    pub z_l_cp: Subspace,
    /// Roots of 𝔲 (indices into [`RootDatum::roots`]) with multiplicities.
    pub sigma_u: Vec<(usize, usize)>,
}

impl ParabolicData {
    /// `𝔡 = 𝔷(𝔩) + 𝔩_c`.
    pub fn d(&self) -> Subspace {
        self.z_l.sum(&self.l_c).expect("same ambient")
    }

    /// `2ρ_𝔲 = Σ_{α ∈ Σ_𝔲} (dim 𝔤^α) α`.
    pub fn two_rho_u(&self, rd: &RootDatum) -> Covector {
        self.sigma_u
            .iter()
            .fold(Covector::zero(rd.rank()), |acc, &(i, m)| {
                acc.add(
                    &rd.root(i)
                        .covector
                        .scale(&Rational::from_integer((m as i64).into())),
                )
            })
    }
}

impl RootDatum {
    /// Whether root `i` lies in the span of the marked simple roots.
    pub fn supported_in(&self, i: usize, marked: &[usize]) -> bool {
        let coords = self
            .simple_coordinates(&self.root(i).covector)
            .expect("roots lie in the span of the simple roots");
        coords
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || marked.contains(&k))
    }

    /// The standard parabolic attached to a subset of simple roots, given as
    /// positions in [`simple_roots`](Self::simple_roots).
    pub fn standard_parabolic(&self, marked: &[usize]) -> Result<ParabolicData, LieError> {
        let n_simple = self.simple_roots().len();
        if let Some(&bad) = marked.iter().find(|&&k| k >= n_simple) {
            return Err(LieError::BadMarkedRoot(bad));
        }
        let mut marked_simple = marked.to_vec();
        marked_simple.sort_unstable();
        marked_simple.dedup();

        let g = self.algebra().clone();
        let dim = g.dim();
        let mut l = self.zero_space().clone();
        let mut u = Subspace::zero(dim);
        let mut u_bar = Subspace::zero(dim);
        let mut sigma_u = Vec::new();
        for (i, root) in self.roots().iter().enumerate() {
            if self.supported_in(i, &marked_simple) {
                l = l.sum(&root.space)?;
            } else if self.is_positive(i) {
                u = u.sum(&root.space)?;
                sigma_u.push((i, root.multiplicity()));
            } else {
                u_bar = u_bar.sum(&root.space)?;
            }
        }
        let q = l.sum(&u)?;

        let l_derived = g.bracket_space(&l, &l);
        let l_n = g.ideal_closure(&l_derived.intersect(&g.s_space())?, &l_derived);
        let l_c = g.centralizer(&l_n).intersect(&l_derived)?;
        let z_l = g.centralizer(&l).intersect(&l)?;
        let z_l_np = z_l.intersect(&g.s_space())?;
        let z_l_cp = z_l.intersect(&g.k_space())?;
        Ok(ParabolicData {
            marked_simple,
            q,
            l,
            u,
            u_bar,
            l_derived,
            l_n,
            l_c,
            z_l,
            z_l_np,
            z_l_cp,
            sigma_u,
        })
    }
}
