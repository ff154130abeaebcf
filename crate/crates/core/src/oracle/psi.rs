//! Numerical symplecticity check of the map
//! `Ψ(x_1, y_1, …, x_N, y_N) = (√y_1 cos 2x_1, -√y_1 sin 2x_1, …)`
//! from `□^N(π) × Δ^N(1)` (open cube of side `π` times the open standard
//! simplex) onto slit discs.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::error::{Error, Result};

/// Default bound on `‖JᵀΩJ - Ω‖_∞`.
pub const JACOBIAN_TOL: f64 = 1e-7;
/// Central-difference step.
pub const STEP: f64 = 1e-6;
/// Distance kept from the boundary of the domain when sampling.
pub const MARGIN: f64 = 1e-2;

/// `Ψ` on interleaved coordinates `(x_1, y_1, x_2, y_2, …)`.
pub fn psi(p: &[f64]) -> Vec<f64> {
    p.chunks_exact(2)
        .flat_map(|c| {
            let (x, y) = (c[0], c[1]);
            let r = y.sqrt();
            [r * (2.0 * x).cos(), -r * (2.0 * x).sin()]
        })
        .collect()
}

/// Matrix of `Σ dx_j ∧ dy_j` on interleaved coordinates.
pub fn omega(n: usize) -> DMatrix<f64> {
    let mut o = DMatrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        o[(2 * j, 2 * j + 1)] = 1.0;
        o[(2 * j + 1, 2 * j)] = -1.0;
    }
    o
}

fn in_domain(p: &[f64]) -> bool {
    let xs_ok = p.iter().step_by(2).all(|&x| x > 0.0 && x < PI);
    let ys: Vec<f64> = p.iter().skip(1).step_by(2).copied().collect();
    xs_ok && ys.iter().all(|&y| y > 0.0) && ys.iter().sum::<f64>() < 1.0
}

/// Central-difference Jacobian of `Ψ` at `p`.
pub fn jacobian(p: &[f64], h: f64) -> Result<DMatrix<f64>> {
    let m = p.len();
    let mut j = DMatrix::zeros(m, m);
    for c in 0..m {
        let (mut plus, mut minus) = (p.to_vec(), p.to_vec());
        plus[c] += h;
        minus[c] -= h;
        if !in_domain(&plus) || !in_domain(&minus) {
            return Err(Error::DomainViolation(format!(
                "stencil around coordinate {c} of {p:?} leaves the domain"
            )));
        }
        let (fp, fm) = (psi(&plus), psi(&minus));
        for r in 0..m {
            j[(r, c)] = (fp[r] - fm[r]) / (2.0 * h);
        }
    }
    Ok(j)
}

/// `‖JᵀΩJ - Ω‖_∞` (max absolute entry) at `p`.
pub fn deviation_at(p: &[f64]) -> Result<f64> {
    if p.is_empty() || p.len() % 2 != 0 {
        return Err(Error::DimensionMismatch {
            expected: 2 * (p.len() / 2).max(1),
            got: p.len(),
        });
    }
    if !in_domain(p) {
        return Err(Error::DomainViolation(format!("{p:?}")));
    }
    let j = jacobian(p, STEP)?;
    let o = omega(p.len() / 2);
    Ok((j.transpose() * &o * &j - o).amax())
}

/// A point of the domain at distance at least [`MARGIN`] from its boundary.
pub fn sample_point<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = (0..=n).map(|_| rng.sample(Exp1)).collect();
    let total: f64 = e.iter().sum();
    let scale = 1.0 - (n as f64 + 1.0) * MARGIN;
    let mut p = Vec::with_capacity(2 * n);
    for ej in e.iter().take(n) {
        p.push(rng.random_range(MARGIN..PI - MARGIN));
        p.push(MARGIN + scale * ej / total);
    }
    p
}

/// Largest deviation of `Ψ` from being symplectic over `n_points` random points.
pub fn psi_symplectic_check(n: usize, n_points: usize, seed: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..n_points {
        worst = worst.max(deviation_at(&sample_point(n, &mut rng))?);
    }
    Ok(worst)
}
