//! Shared fixtures and seeded fuzz generators for the integration targets.
#![allow(dead_code)]

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use realspherical::cli::analyze::Analysis;
use realspherical::cli::{analyze, catalog, AnalyzeOptions};
use realspherical::exactalg::{dot, Matrix, Rational, Subspace, Vector};
use realspherical::polycone::{fm, support_cone, Cone, ConeError};

pub fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}

pub fn analyze_fixture(name: &str, skip_numeric: bool) -> Analysis {
    let desc = catalog::fixture(name).expect("known fixture").parse();
    let mut opts = AnalyzeOptions::from_description(&desc);
    opts.skip_numeric = skip_numeric;
    analyze(&desc, &opts).expect("fixture analyzes")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Vector {
    (0..dim)
        .map(|_| int(rng.gen_range(-bound..=bound)))
        .collect()
}

pub fn random_vectors(
    rng: &mut ChaCha8Rng,
    dim: usize,
    max_count: usize,
    bound: i64,
) -> Vec<Vector> {
    let n = rng.gen_range(0..=max_count);
    (0..n).map(|_| random_vector(rng, dim, bound)).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `extra` plus points on and just off the boundary of the hull of `gens`.
pub fn probe_points(gens: &[Vector], extra: &[Vector]) -> Vec<Vector> {
    let mut pts: Vec<Vector> = extra.to_vec();
    for (i, g) in gens.iter().enumerate() {
        pts.push(g.clone());
        pts.push(g.iter().map(|x| -x).collect());
        if let Some(h) = gens.get(i + 1) {
            pts.push(add(g, h));
            pts.push(sub(g, h));
        }
    }
    pts
}

/// H-form membership of the double-description cone agrees with the
/// Fourier–Motzkin conic-hull oracle, for `gens` read as generators and for
/// `ineqs` read as inequalities.
pub fn dd_agrees_with_fm(
    dim: usize,
    gens: &[Vector],
    ineqs: &[Vector],
    extra: &[Vector],
) -> Result<(), String> {
    let c = Cone::from_generators(dim, gens).map_err(|e| e.to_string())?;
    for x in probe_points(gens, extra) {
        if c.contains_point(&x) != fm::conic_hull_contains(gens, &x) {
            return Err(format!(
                "generators {gens:?}: membership of {x:?} disagrees"
            ));
        }
    }
    let c = Cone::from_inequalities(dim, ineqs).map_err(|e| e.to_string())?;
    let hull = c.generators();
    for x in probe_points(&hull, extra) {
        let by_h = ineqs.iter().all(|a| !dot(a, &x).is_positive());
        if by_h != fm::conic_hull_contains(&hull, &x) {
            return Err(format!(
                "inequalities {ineqs:?}: membership of {x:?} disagrees"
            ));
        }
    }
    Ok(())
}

pub fn dual_is_involution(dim: usize, gens: &[Vector]) -> Result<(), String> {
    let c = Cone::from_generators(dim, gens).map_err(|e| e.to_string())?;
    if c.dual().dual() != c {
        return Err(format!("dual(dual) differs for generators {gens:?}"));
    }
    Ok(())
}

pub fn edge_is_equality_kernel(dim: usize, ineqs: &[Vector]) -> Result<(), String> {
    let c = Cone::from_inequalities(dim, ineqs).map_err(|e| e.to_string())?;
    let kernel_of = |rows: &[Vector]| {
        Subspace::kernel(&Matrix::from_rows(dim, rows).expect("rows of length dim"))
    };
    let edge = c.edge();
    if edge != kernel_of(ineqs) || edge != kernel_of(&c.inequalities()) {
        return Err(format!("edge is not the equality kernel for {ineqs:?}"));
    }
    Ok(())
}

/// `support_cone(Λ ∪ Λ′) = support_cone(Λ) ∩ support_cone(Λ′)`.
pub fn support_union_law(dim: usize, a: &[Vector], b: &[Vector]) -> Result<(), String> {
    let both: Vec<Vector> = a.iter().chain(b).cloned().collect();
    let err = |e: ConeError| e.to_string();
    let lhs = support_cone(dim, &both).map_err(err)?;
    let rhs = support_cone(dim, a)
        .map_err(err)?
        .intersection(&support_cone(dim, b).map_err(err)?)
        .map_err(err)?;
    if lhs != rhs {
        return Err(format!(
            "support cones of {a:?} and {b:?} violate the union law"
        ));
    }
    Ok(())
}
