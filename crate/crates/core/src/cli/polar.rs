//! Polar decomposition on the one-sheeted hyperboloid `x² + y² − z² = 1`,
//! viewed as `SL(2,ℝ)/SO(1,1)`.
//!
//! A point `(x, y, z)` is the matrix `[[y, x − z], [x + z, −y]]`, so the base
//! point `(1, 0, 0)` is `E + F` and `G` acts by conjugation. Every point is
//! written as `Ad(k a w)(E + F)` with `k ∈ SO(2)`, `a = exp(sH)`, `s ≤ 0`, and
//! `w ∈ {1, [[0, 1], [−1, 0]]}`.

use nalgebra::Matrix2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// Half-width of the sampling box for `(x, y)`.
const BOX: f64 = 10.0;

fn point_matrix(p: [f64; 3]) -> Matrix2<f64> {
    let [x, y, z] = p;
    Matrix2::new(y, x - z, x + z, -y)
}

fn rotation(theta: f64) -> Matrix2<f64> {
    let (s, c) = theta.sin_cos();
    Matrix2::new(c, -s, s, c)
}

fn flip() -> Matrix2<f64> {
    Matrix2::new(0.0, 1.0, -1.0, 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub theta: f64,
    /// `a = exp(sH)`, always `s ≤ 0`.
    pub s: f64,
    pub flipped: bool,
    pub residual: f64,
}

impl Decomposition {
    pub fn group_element(&self) -> Matrix2<f64> {
        let a = Matrix2::new(self.s.exp(), 0.0, 0.0, (-self.s).exp());
        let g = rotation(self.theta) * a;
        if self.flipped {
            g * flip()
        } else {
            g
        }
    }
}

/// `k·a·w` sending the base point to `p`, or `None` if `p` needs the flip and
/// it is not allowed. The residual is measured, not assumed.
pub fn decompose(p: [f64; 3], with_w: bool) -> Option<Decomposition> {
    let [x, y, z] = p;
    let phi = y.atan2(x);
    // Ad(exp(sH))(E + F) = (cosh 2s, 0, −sinh 2s), and Ad(k_θ) rotates the
    // (x, y)-plane by −2θ. With the flip the base point becomes −(E + F).
    let (theta, s, flipped) = if z >= 0.0 {
        (-phi / 2.0, -z.asinh() / 2.0, false)
    } else if with_w {
        (-(phi + std::f64::consts::PI) / 2.0, z.asinh() / 2.0, true)
    } else {
        return None;
    };
    let mut d = Decomposition {
        theta,
        s,
        flipped,
        residual: 0.0,
    };
    let g = d.group_element();
    let g_inv = g.try_inverse().expect("SL(2) element");
    let image = g * point_matrix([1.0, 0.0, 0.0]) * g_inv;
    d.residual = (image - point_matrix(p)).norm();
    Some(d)
}

/// Seeded rejection sample of the hyperboloid with `|x|, |y| ≤ 10`.
pub fn sample_hyperboloid(samples: usize, seed: u64) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let x: f64 = rng.gen_range(-BOX..=BOX);
        let y: f64 = rng.gen_range(-BOX..=BOX);
        let r2 = x * x + y * y;
        if r2 < 1.0 {
            continue;
        }
        let z = (r2 - 1.0).sqrt();
        out.push([x, y, if rng.gen_bool(0.5) { z } else { -z }]);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolarSummary {
    pub samples: usize,
    pub seed: u64,
    pub with_w: bool,
    pub decomposed: usize,
    pub coverage: f64,
    pub max_residual: f64,
    pub flips_used: usize,
}

pub fn hyperboloid_polar_demo(samples: usize, seed: u64, with_w: bool) -> PolarSummary {
    let points = sample_hyperboloid(samples, seed);
    let mut decomposed = 0;
    let mut flips_used = 0;
    let mut max_residual: f64 = 0.0;
    for p in &points {
        if let Some(d) = decompose(*p, with_w) {
            max_residual = max_residual.max(d.residual);
            if d.residual < RESIDUAL_TOLERANCE {
                decomposed += 1;
                flips_used += usize::from(d.flipped);
            }
        }
    }
    PolarSummary {
        samples,
        seed,
        with_w,
        decomposed,
        coverage: decomposed as f64 / samples.max(1) as f64,
        max_residual,
        flips_used,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_lie_on_hyperboloid() {
        for [x, y, z] in sample_hyperboloid(200, 1) {
            assert!((x * x + y * y - z * z - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn cosh_sinh_points_need_no_rotation() {
        let s: f64 = 0.7;
        let d = decompose([s.cosh(), 0.0, s.sinh()], false).unwrap();
        assert_eq!(d.theta, 0.0);
        assert!(!d.flipped);
        assert!(d.s <= 0.0);
        assert!(d.residual < 1e-12);
        let base = decompose([1.0, 0.0, 0.0], false).unwrap();
        assert_eq!(base.residual, 0.0);
    }

    #[test]
    fn lower_half_needs_the_flip() {
        let p = [2.0f64, 1.0, -2.0];
        assert!(decompose(p, false).is_none());
        let d = decompose(p, true).unwrap();
        assert!(d.flipped);
        assert!(d.residual < 1e-12);
    }

    #[test]
    fn coverage() {
        let with = hyperboloid_polar_demo(1000, 3, true);
        assert_eq!(with.decomposed, 1000);
        let without = hyperboloid_polar_demo(1000, 3, false);
        assert!(without.decomposed < 1000);
    }
}
