use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::exactalg::{Matrix, Rational, Subspace};

/// Largest denominator tried when recognizing an eigenvalue as a rational.
const MAX_DENOMINATOR: i64 = 1_000_000;

/// Exact eigenvalues of an operator that is self-adjoint for the positive
/// definite `gram`, provided they are all rational.
///
/// Floating point only proposes candidates (via the symmetrized operator);
/// acceptance is exact: the candidate eigenspaces must fill the whole space.
/// Returns `None` when some eigenvalue is not recognized as rational.
pub fn rational_eigenvalues(op: &Matrix, gram: &Matrix) -> Option<Vec<Rational>> {
    let d = op.rows();
    if d == 0 {
        return Some(Vec::new());
    }
    let to_f = |m: &Matrix| {
        DMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            m[(i, j)].to_f64().unwrap_or(f64::NAN)
        })
    };
    let a = to_f(op);
    let chol = nalgebra::Cholesky::new(to_f(gram))?;
    let l = chol.l();
    let lt = l.transpose();
    let lt_inv = lt.clone().try_inverse()?;
    let s = &lt * &a * &lt_inv;
    let sym = (&s + s.transpose()) * 0.5;
    let eig = nalgebra::SymmetricEigen::new(sym);

    let mut candidates: Vec<Rational> = Vec::new();
    for &x in eig.eigenvalues.iter() {
        let r = recognize(x)?;
        if !candidates.contains(&r) {
            candidates.push(r);
        }
    }
    candidates.sort();

    let total: usize = candidates
        .iter()
        .map(|lam| {
            let shifted = op.sub(&Matrix::identity(d).scaled(lam));
            Subspace::kernel(&shifted).dim()
        })
        .sum();
    (total == d).then_some(candidates)
}

/// Best rational approximation by continued fractions, accepted only if it
/// matches to within floating-point noise.
fn recognize(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let tol = 1e-7 * (1.0 + x.abs());
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        if a.abs() > 1e12 {
            break;
        }
        let ai = a as i64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > MAX_DENOMINATOR {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if ((h1 as f64) / (k1 as f64) - x).abs() <= tol {
            return Some(Rational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = rest - a;
        if frac.abs() < 1e-15 {
            break;
        }
        rest = 1.0 / frac;
    }
    if k1 != 0 && ((h1 as f64) / (k1 as f64) - x).abs() <= tol {
        return Some(Rational::new(BigInt::from(h1), BigInt::from(k1)));
    }
    if x.abs() <= tol {
        return Some(Rational::zero());
    }
    None
}
