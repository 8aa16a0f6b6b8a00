//! Floating-point check that `e^{t ad X}·𝔥 → 𝔥_lim` in the Grassmannian
//! exactly for `X` in the interior of the compression cone.

use nalgebra::{DMatrix, DVector};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::compression::{CompressionReport, WeightFrame};
use crate::exactalg::{dot, Matrix, Rational, Subspace, Vector};
use crate::spherical::{SphericalSpace, StructureSplitting};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassError {
    #[error("degeneration direction is zero")]
    ZeroDirection,
    #[error("degeneration direction is not in 𝔞_Z")]
    NotInAZ,
    #[error("empty time schedule")]
    EmptySchedule,
    #[error("at least one sample is required")]
    NoSamples,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub converged: f64,
    pub diverged: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            converged: 1e-8,
            diverged: 1e-3,
        }
    }
}

/// `t = 0, 1, …, t_max`.
pub fn default_schedule(t_max: u32) -> Vec<f64> {
    (0..=t_max).map(f64::from).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Converged,
    Diverged,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Converged => "converged",
            Verdict::Diverged => "diverged",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    /// Direction in 𝔤-coordinates (exact, not normalized).
    pub x: Vector,
    pub times: Vec<f64>,
    pub distances: Vec<f64>,
    pub verdict: Verdict,
    /// Largest `‖QᵀQ − I‖` seen during orthonormalization.
    pub orthonormality_residual: f64,
}

impl Trajectory {
    /// Largest distance over times in `[from, to]`.
    pub fn max_distance_on(&self, from: f64, to: f64) -> f64 {
        self.window(from, to).fold(0.0, f64::max)
    }

    /// Smallest distance over times in `[from, to]`.
    pub fn min_distance_on(&self, from: f64, to: f64) -> f64 {
        self.window(from, to).fold(f64::INFINITY, f64::min)
    }

    fn window(&self, from: f64, to: f64) -> impl Iterator<Item = f64> + '_ {
        self.times
            .iter()
            .zip(&self.distances)
            .filter(move |(t, _)| **t >= from && **t <= to)
            .map(|(_, d)| *d)
    }
}

/// Precomputed float data shared by all trajectories of one space.
pub struct Degenerator {
    frame: WeightFrame,
    /// Weight-basis coordinates of an 𝔥 basis.
    h_weight: Vec<Vector>,
    /// Weight basis vectors mapped into gram-orthonormal coordinates.
    frame_orth: DMatrix<f64>,
    lim_projector: DMatrix<f64>,
    a_z: Subspace,
    gram: Matrix,
    rd_a: Subspace,
}

fn to_f(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn projector(columns: &DMatrix<f64>) -> (DMatrix<f64>, f64) {
    let d = columns.ncols();
    if d == 0 {
        let n = columns.nrows();
        return (DMatrix::zeros(n, n), 0.0);
    }
    let q = columns.clone().qr().q();
    let residual = (q.transpose() * &q - DMatrix::identity(d, d)).norm();
    (&q * q.transpose(), residual)
}

impl Degenerator {
    pub fn new(z: &SphericalSpace, ss: &StructureSplitting, h_lim: &Subspace) -> Self {
        let frame = WeightFrame::new(&z.rd);
        let n = frame.len();
        let gram = z.g.gram().clone();
        let g_f = DMatrix::from_fn(n, n, |i, j| to_f(&gram[(i, j)]));
        let l = g_f.cholesky().expect("gram is positive definite").l();
        let lt = l.transpose();
        let w_f = DMatrix::from_fn(n, n, |i, j| to_f(&frame.basis[j].1[i]));
        let frame_orth = &lt * w_f;
        let lim_cols = DMatrix::from_fn(n, h_lim.dim(), |i, j| to_f(&h_lim.basis()[j][i]));
        let (lim_projector, _) = projector(&(&lt * lim_cols));
        let h_weight = z.h.basis().iter().map(|h| frame.coords(h)).collect();
        Self {
            frame,
            h_weight,
            frame_orth,
            lim_projector,
            a_z: ss.a_z.clone(),
            gram,
            rd_a: z.rd.a_space().clone(),
        }
    }

    /// Trajectory of `e^{t ad X}·𝔥` for `X ∈ 𝔞_Z` in 𝔤-coordinates.
    pub fn degenerate(
        &self,
        x: &[Rational],
        times: &[f64],
        thresholds: Thresholds,
    ) -> Result<Trajectory, GrassError> {
        if times.is_empty() {
            return Err(GrassError::EmptySchedule);
        }
        if x.iter().all(Zero::is_zero) {
            return Err(GrassError::ZeroDirection);
        }
        if !self.a_z.contains_vector(x) {
            return Err(GrassError::NotInAZ);
        }
        let n = self.frame.len();
        let norm = to_f(&dot(x, &self.gram.mul_vec(x).expect("vector of 𝔤"))).sqrt();
        let ax = self.rd_a.coords(x).expect("𝔞_Z ⊆ 𝔞");
        let lambda: Vec<Rational> = self.frame.basis.iter().map(|(w, _)| w.eval(&ax)).collect();
        let rate: Vec<f64> = lambda.iter().map(|l| to_f(l) / norm).collect();

        // Columns sorted by decreasing weight; the echelon form then gives every
        // vector a distinct dominant term.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| lambda[j].cmp(&lambda[i]));
        let d = self.h_weight.len();
        let mut m = Matrix::zeros(d, n);
        for (r, hw) in self.h_weight.iter().enumerate() {
            for (c, &k) in order.iter().enumerate() {
                m[(r, c)] = hw[k].clone();
            }
        }
        let rows: Vec<Vec<(usize, f64)>> = m
            .rref()
            .row_vectors()
            .into_iter()
            .take(d)
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (order[c], to_f(v)))
                    .collect()
            })
            .collect();

        let mut distances = Vec::with_capacity(times.len());
        let mut residual: f64 = 0.0;
        for &t in times {
            let mut cols = DMatrix::zeros(n, d);
            for (j, row) in rows.iter().enumerate() {
                let top = row
                    .iter()
                    .map(|&(k, _)| t * rate[k])
                    .fold(f64::NEG_INFINITY, f64::max);
                let mut w = DVector::zeros(n);
                for &(k, c) in row {
                    w[k] = c * (t * rate[k] - top).exp();
                }
                cols.set_column(j, &(&self.frame_orth * w));
            }
            let (p, res) = projector(&cols);
            residual = residual.max(res);
            distances.push((p - &self.lim_projector).norm());
        }
        let verdict = classify(&distances, thresholds);
        Ok(Trajectory {
            x: x.to_vec(),
            times: times.to_vec(),
            distances,
            verdict,
            orthonormality_residual: residual,
        })
    }
}

fn classify(distances: &[f64], thr: Thresholds) -> Verdict {
    let n = distances.len();
    let tail = &distances[(3 * n / 4).min(n - 1)..];
    let last = *distances.last().expect("nonempty");
    let monotone = tail.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    if last < thr.converged && monotone {
        Verdict::Converged
    } else if tail.iter().all(|&x| x > thr.diverged) {
        Verdict::Diverged
    } else {
        Verdict::Inconclusive
    }
}

#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub interior: Vec<Trajectory>,
    pub exterior: Vec<Trajectory>,
    /// No point of 𝔞_Z lies outside the cone.
    pub exterior_vacuous: bool,
    pub interior_ok: bool,
    pub exterior_ok: bool,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.interior_ok && self.exterior_ok
    }
}

fn random_unit_box(rng: &mut ChaCha8Rng, r: usize) -> Vector {
    (0..r)
        .map(|_| Rational::new(rng.gen_range(-1000..=1000).into(), 1000.into()))
        .collect()
}

fn l1(v: &[Rational]) -> Rational {
    v.iter().fold(Rational::zero(), |acc, x| acc + x.abs())
}

/// Interior points (canonical point first, then `samples` seeded perturbations)
/// and `samples` exterior points of the cone, in 𝔞_Z-coordinates.
pub fn sample_points(
    report: &CompressionReport,
    samples: usize,
    seed: u64,
) -> (Vec<Vector>, Vec<Vector>) {
    let r = report.rank;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<&Vector> = report.monoid_generators.iter().map(|c| &c.0).collect();
    let Some((x0, _)) = report.cone.interior_point() else {
        return (Vec::new(), Vec::new());
    };
    // Perturbations of size ε keep every generator below ¾ of its value at x0.
    let eps = if gens.is_empty() {
        Rational::new(1.into(), 4.into())
    } else {
        let min_val = gens
            .iter()
            .map(|g| dot(g, &x0).abs())
            .min()
            .expect("nonempty");
        let max_l1 = gens.iter().map(|g| l1(g)).max().expect("nonempty");
        min_val / max_l1 / Rational::from_integer(4.into())
    };
    let mut interior = vec![x0.clone()];
    while interior.len() < samples + 1 {
        let u = random_unit_box(&mut rng, r);
        let x: Vector = x0.iter().zip(&u).map(|(a, b)| a + &eps * b).collect();
        if x.iter().any(|v| !v.is_zero()) && gens.iter().all(|g| dot(g, &x).is_negative()) {
            interior.push(x);
        }
    }
    let mut exterior = Vec::new();
    if !gens.is_empty() {
        let mut k = 0;
        while exterior.len() < samples {
            let mu = gens[k % gens.len()];
            k += 1;
            let norm2 = dot(mu, mu);
            let eps = &norm2 / l1(mu) / Rational::from_integer(4.into());
            let u = random_unit_box(&mut rng, r);
            let x: Vector = mu.iter().zip(&u).map(|(a, b)| a + &eps * b).collect();
            if dot(mu, &x) * Rational::from_integer(4.into())
                >= &norm2 * Rational::from_integer(3.into())
            {
                exterior.push(x);
            }
        }
    }
    (interior, exterior)
}

/// Interior samples must converge and exterior samples (some generator
/// strictly positive) must diverge.
pub fn verify_cone(
    z: &SphericalSpace,
    ss: &StructureSplitting,
    report: &CompressionReport,
    samples: usize,
    seed: u64,
    times: &[f64],
    thresholds: Thresholds,
) -> Result<VerifySummary, GrassError> {
    if samples == 0 {
        return Err(GrassError::NoSamples);
    }
    let deg = Degenerator::new(z, ss, &report.h_lim);
    let (inner, outer) = sample_points(report, samples, seed);
    let run = |pts: &[Vector]| -> Result<Vec<Trajectory>, GrassError> {
        pts.iter()
            .map(|p| deg.degenerate(&ss.a_z.combine(p), times, thresholds))
            .collect()
    };
    let interior = run(&inner)?;
    let exterior = run(&outer)?;
    let exterior_vacuous = report.monoid_generators.is_empty();
    let interior_ok =
        !interior.is_empty() && interior.iter().all(|t| t.verdict == Verdict::Converged);
    let exterior_ok = exterior.iter().all(|t| t.verdict == Verdict::Diverged);
    Ok(VerifySummary {
        interior,
        exterior,
        exterior_vacuous,
        interior_ok,
        exterior_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compression::compression_cone;
    use crate::liecore::families::sl;
    use crate::spherical::find_open_parabolic;

    fn v(xs: &[i64]) -> Vector {
        xs.iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect()
    }

    fn setup(h: &[i64]) -> (SphericalSpace, StructureSplitting, CompressionReport) {
        let rd0 = sl(2).unwrap().root_datum().unwrap();
        let h = rd0.algebra().span(&[v(h)]);
        let z = find_open_parabolic(h, &rd0).unwrap();
        let ss = z.adapted_parabolic().unwrap();
        let rep = compression_cone(&z, &ss).unwrap();
        (z, ss, rep)
    }

    #[test]
    fn hyperboloid_closed_form() {
        let (z, ss, rep) = setup(&[0, 1, 1]);
        let deg = Degenerator::new(&z, &ss, &rep.h_lim);
        let times = default_schedule(50);
        let neg = deg
            .degenerate(&v(&[-1, 0, 0]), &times, Thresholds::default())
            .unwrap();
        assert_eq!(neg.verdict, Verdict::Converged);
        // Line through e^{-√2 t}E + e^{√2 t}F against span{F}; E and F are unit
        // vectors in the trace form, so distance = √2·sin(angle).
        let t: f64 = 0.3;
        let s = 2f64.sqrt();
        let one = deg
            .degenerate(&v(&[-1, 0, 0]), &[t], Thresholds::default())
            .unwrap();
        let (a, b) = ((-s * t).exp(), (s * t).exp());
        let sin = a / (a * a + b * b).sqrt();
        assert!((one.distances[0] - 2f64.sqrt() * sin).abs() < 1e-12);
        let pos = deg
            .degenerate(&v(&[1, 0, 0]), &times, Thresholds::default())
            .unwrap();
        assert_eq!(pos.verdict, Verdict::Diverged);
        assert!(neg.orthonormality_residual < 1e-10);
    }

    #[test]
    fn horospherical_is_constant() {
        let (z, ss, rep) = setup(&[0, 1, 0]);
        let deg = Degenerator::new(&z, &ss, &rep.h_lim);
        for x in [v(&[1, 0, 0]), v(&[-3, 0, 0])] {
            let tr = deg
                .degenerate(&x, &default_schedule(50), Thresholds::default())
                .unwrap();
            assert!(tr.distances.iter().all(|&d| d < 1e-14));
            assert_eq!(tr.verdict, Verdict::Converged);
        }
    }

    #[test]
    fn rejects_bad_directions() {
        let (z, ss, rep) = setup(&[0, 1, 1]);
        let deg = Degenerator::new(&z, &ss, &rep.h_lim);
        let times = default_schedule(5);
        assert_eq!(
            deg.degenerate(&v(&[0, 0, 0]), &times, Thresholds::default())
                .unwrap_err(),
            GrassError::ZeroDirection
        );
        assert_eq!(
            deg.degenerate(&v(&[0, 1, 0]), &times, Thresholds::default())
                .unwrap_err(),
            GrassError::NotInAZ
        );
        assert_eq!(
            deg.degenerate(&v(&[1, 0, 0]), &[], Thresholds::default())
                .unwrap_err(),
            GrassError::EmptySchedule
        );
    }

    #[test]
    fn hyperboloid_samples() {
        let (z, ss, rep) = setup(&[0, 1, 1]);
        let s = verify_cone(
            &z,
            &ss,
            &rep,
            5,
            7,
            &default_schedule(50),
            Thresholds::default(),
        )
        .unwrap();
        assert_eq!(s.interior.len(), 6);
        assert_eq!(s.exterior.len(), 5);
        assert!(s.passed());
    }

    #[test]
    fn horospherical_samples_have_no_exterior() {
        let (z, ss, rep) = setup(&[0, 1, 0]);
        let s = verify_cone(
            &z,
            &ss,
            &rep,
            5,
            7,
            &default_schedule(50),
            Thresholds::default(),
        )
        .unwrap();
        assert!(s.exterior_vacuous);
        assert!(s.exterior.is_empty());
        assert!(s.passed());
    }

    #[test]
    fn classification() {
        let thr = Thresholds::default();
        assert_eq!(classify(&[1.0, 0.5, 0.0, 0.0], thr), Verdict::Converged);
        assert_eq!(classify(&[1.0, 1.0, 1.0, 1.0], thr), Verdict::Diverged);
        assert_eq!(
            classify(&[1.0, 0.5, 1e-4, 1e-5], thr),
            Verdict::Inconclusive
        );
    }
}
