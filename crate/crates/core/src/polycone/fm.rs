//! Fourier–Motzkin elimination, kept as an independent membership oracle for
//! the double description code.

use num_traits::{Signed, Zero};

use crate::exactalg::{Matrix, Rational, Vector};

/// Whether `x` is a nonnegative combination of `generators`.
///
/// Solves `Gλ = x` exactly as `λ = λ₀ + Nμ` and then eliminates `μ` from
/// `λ₀ + Nμ ≥ 0` one variable at a time.
pub fn conic_hull_contains(generators: &[Vector], x: &[Rational]) -> bool {
    let dim = x.len();
    let m = generators.len();
    if m == 0 {
        return x.iter().all(Zero::is_zero);
    }
    let mut g = Matrix::zeros(dim, m);
    for (j, v) in generators.iter().enumerate() {
        for i in 0..dim {
            g[(i, j)] = v[i].clone();
        }
    }
    let Some(lambda0) = g.solve(x).expect("sizes match") else {
        return false;
    };
    let kernel = g.kernel();
    // Rows: (c, b) meaning c·μ ≤ b, from −λ₀ᵢ − Nᵢμ ≤ 0.
    let mut rows: Vec<(Vector, Rational)> = (0..m)
        .map(|i| {
            let c: Vector = kernel.iter().map(|k| -&k[i]).collect();
            (c, lambda0[i].clone())
        })
        .collect();
    for var in 0..kernel.len() {
        rows = eliminate(rows, var);
    }
    rows.iter().all(|(_, b)| !b.is_negative())
}

/// Eliminates variable `var` from a system of `c·μ ≤ b`.
fn eliminate(rows: Vec<(Vector, Rational)>, var: usize) -> Vec<(Vector, Rational)> {
    let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
    for row in rows {
        let c = row.0[var].clone();
        if c.is_positive() {
            pos.push(row);
        } else if c.is_negative() {
            neg.push(row);
        } else {
            keep.push(row);
        }
    }
    for (cp, bp) in &pos {
        for (cn, bn) in &neg {
            let sp = -&cn[var];
            let sn = cp[var].clone();
            let c: Vector = cp.iter().zip(cn).map(|(x, y)| &sp * x + &sn * y).collect();
            let b = &sp * bp + &sn * bn;
            keep.push((c, b));
        }
    }
    dedup_scaled(keep)
}

/// Drops rows that are positive multiples of an earlier row.
fn dedup_scaled(rows: Vec<(Vector, Rational)>) -> Vec<(Vector, Rational)> {
    let mut out: Vec<(Vector, Rational)> = Vec::new();
    for (c, b) in rows {
        let scale = c
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| x.abs())
            .unwrap_or_else(|| {
                if b.is_zero() {
                    Rational::from_integer(1.into())
                } else {
                    b.abs()
                }
            });
        let c: Vector = c.iter().map(|x| x / &scale).collect();
        let b = b / &scale;
        if c.iter().all(Zero::is_zero) && !b.is_negative() {
            continue;
        }
        if !out.iter().any(|(oc, ob)| *oc == c && *ob == b) {
            out.push((c, b));
        }
    }
    out
}
