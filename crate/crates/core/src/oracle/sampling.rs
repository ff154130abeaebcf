//! Random orbit points and their Gelfand-Tsetlin values.
//!
//! U(n) orbits are modelled by Hermitian matrices `Q diag(λ) Q*`, SO orbits
//! by real skew-symmetric matrices `Q L Qᵀ` with `L` the block matrix
//! `diag(L(λ_1), …, L(λ_n)[, 0])`, `L(a) = [[0, -a], [a, 0]]`.

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::diagram::{self, Diagram};
use crate::error::{Error, Result};
use crate::lie::{Family, Weight};
use crate::polytope::{self, Polytope};
use crate::rational::to_f64;

pub type C64 = Complex<f64>;

/// Default tolerance on polytope inequalities for sampled points.
pub const MEMBERSHIP_TOL: f64 = 1e-8;
/// Tolerance on recomputed spectra.
pub const SPECTRUM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum OrbitPoint {
    Hermitian(DMatrix<C64>),
    Skew(DMatrix<f64>),
}

impl OrbitPoint {
    pub fn size(&self) -> usize {
        match self {
            OrbitPoint::Hermitian(m) => m.nrows(),
            OrbitPoint::Skew(m) => m.nrows(),
        }
    }
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix, with the
/// phases of `R`'s diagonal moved into `Q`.
pub fn haar_unitary<R: Rng>(n: usize, rng: &mut R) -> DMatrix<C64> {
    let g = DMatrix::from_fn(n, n, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Haar-distributed special orthogonal matrix: QR of a real Gaussian matrix
/// with sign correction, then one column flipped if the determinant is `-1`.
pub fn haar_special_orthogonal<R: Rng>(m: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(m, m, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..m {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    q
}

/// `diag(λ_n, …, λ_1)` (U) or the block matrix of `λ` (SO): the point of the
/// orbit whose Gelfand-Tsetlin image is `V`.
pub fn distinguished_point(w: &Weight) -> OrbitPoint {
    let n = w.n();
    let l: Vec<f64> = w.entries().iter().map(to_f64).collect();
    match w.family() {
        Family::UnitaryU => OrbitPoint::Hermitian(DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                C64::new(l[n - 1 - i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })),
        _ => OrbitPoint::Skew(block_matrix(w)),
    }
}

fn block_matrix(w: &Weight) -> DMatrix<f64> {
    let m = w.group().matrix_size();
    let mut a = DMatrix::zeros(m, m);
    for (j, v) in w.entries().iter().enumerate() {
        let v = to_f64(v);
        a[(2 * j, 2 * j + 1)] = -v;
        a[(2 * j + 1, 2 * j)] = v;
    }
    a
}

/// Conjugates the diagonal (U) or block (SO) representative of `λ` by `q`.
pub fn conjugate(w: &Weight, q: &OrbitPoint) -> Result<OrbitPoint> {
    let m = w.group().matrix_size();
    if q.size() != m {
        return Err(Error::ShapeMismatch(format!(
            "expected a {m}x{m} matrix, got {0}x{0}",
            q.size()
        )));
    }
    match (w.family(), q) {
        (Family::UnitaryU, OrbitPoint::Hermitian(q)) => {
            let d = DMatrix::from_fn(m, m, |i, j| {
                if i == j {
                    C64::new(to_f64(w.lambda(i + 1)), 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            });
            Ok(OrbitPoint::Hermitian(q * d * q.adjoint()))
        }
        (Family::OddOrthogonal | Family::EvenOrthogonal, OrbitPoint::Skew(q)) => {
            Ok(OrbitPoint::Skew(q * block_matrix(w) * q.transpose()))
        }
        _ => Err(Error::ShapeMismatch(
            "conjugating matrix has the wrong kind for this family".into(),
        )),
    }
}

pub fn sample_orbit_point_with<R: Rng>(w: &Weight, rng: &mut R) -> OrbitPoint {
    let m = w.group().matrix_size();
    let q = match w.family() {
        Family::UnitaryU => OrbitPoint::Hermitian(haar_unitary(m, rng)),
        _ => OrbitPoint::Skew(haar_special_orthogonal(m, rng)),
    };
    conjugate(w, &q).expect("shape matches by construction")
}

pub fn sample_orbit_point(w: &Weight, seed: u64) -> Result<OrbitPoint> {
    crate::lie::r_of(w)?;
    Ok(sample_orbit_point_with(w, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Pfaffian of a real skew-symmetric matrix by skew Gaussian elimination
/// with partial pivoting.
pub fn pfaffian(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    if n % 2 == 1 {
        return 0.0;
    }
    let mut a = a.clone();
    let mut pf = 1.0;
    let mut k = 0;
    while k + 1 < n {
        let kp = (k + 1..n)
            .max_by(|&i, &j| a[(i, k)].abs().total_cmp(&a[(j, k)].abs()))
            .expect("non-empty");
        if kp != k + 1 {
            a.swap_rows(k + 1, kp);
            a.swap_columns(k + 1, kp);
            pf = -pf;
        }
        if a[(k + 1, k)] == 0.0 {
            return 0.0;
        }
        pf *= a[(k, k + 1)];
        for i in k + 2..n {
            let ti = a[(k, i)] / a[(k, k + 1)];
            for j in k + 2..n {
                let tj = a[(k, j)] / a[(k, k + 1)];
                let v = ti * a[(j, k + 1)] - a[(i, k + 1)] * tj;
                a[(i, j)] += v;
            }
        }
        k += 2;
    }
    pf
}

/// Descending spectrum of the Hermitian leading `l × l` block.
fn hermitian_levels(a: &DMatrix<C64>, l: usize) -> Vec<f64> {
    let sub = a.view((0, 0), (l, l)).into_owned();
    let mut ev: Vec<f64> = SymmetricEigen::new(sub).eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

/// The `⌊l/2⌋` values of the skew leading `l × l` block, the last one signed
/// by `(-1)^{l/2} Pf` for even `l`.
fn skew_levels(a: &DMatrix<f64>, l: usize) -> Vec<f64> {
    let sub = a.view((0, 0), (l, l)).into_owned();
    let herm = sub.map(|x| C64::new(0.0, x));
    let mut ev: Vec<f64> = SymmetricEigen::new(herm).eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev.truncate(l / 2);
    if l % 2 == 0 && l > 0 {
        let kk = l / 2;
        let pf = pfaffian(&sub);
        let sign = if kk % 2 == 0 { pf } else { -pf };
        if sign < 0.0 {
            ev[kk - 1] = -ev[kk - 1].abs();
        } else {
            ev[kk - 1] = ev[kk - 1].abs();
        }
    }
    ev
}

fn check_shape(w: &Weight, a: &OrbitPoint) -> Result<()> {
    let m = w.group().matrix_size();
    let ok_kind = matches!(
        (w.family(), a),
        (Family::UnitaryU, OrbitPoint::Hermitian(_))
            | (Family::OddOrthogonal | Family::EvenOrthogonal, OrbitPoint::Skew(_))
    );
    if !ok_kind {
        return Err(Error::ShapeMismatch(format!(
            "{} needs a {} matrix",
            w.group(),
            if w.family() == Family::UnitaryU { "Hermitian" } else { "skew-symmetric" }
        )));
    }
    let (r, c) = match a {
        OrbitPoint::Hermitian(m) => m.shape(),
        OrbitPoint::Skew(m) => m.shape(),
    };
    if (r, c) != (m, m) {
        return Err(Error::ShapeMismatch(format!("expected {m}x{m}, got {r}x{c}")));
    }
    Ok(())
}

fn values_on(d: &Diagram, a: &OrbitPoint, tol: f64) -> Result<Vec<f64>> {
    let m = a.size();
    let levels: Vec<Vec<f64>> = (0..=m)
        .map(|l| match a {
            OrbitPoint::Hermitian(h) => {
                if l == 0 { Vec::new() } else { hermitian_levels(h, l) }
            }
            OrbitPoint::Skew(s) => {
                if l < 2 { Vec::new() } else { skew_levels(s, l) }
            }
        })
        .collect();
    let mut out = vec![0.0; d.len()];
    for p in d.positions() {
        let value = levels[p.label.superscript][p.label.subscript - 1];
        match d.basis_index(p.cell) {
            Ok(i) => out[i] = value,
            Err(_) => {
                let expected = to_f64(&p.lo);
                if (value - expected).abs() > tol * (1.0 + expected.abs()) {
                    return Err(Error::ConstantMismatch {
                        label: p.label.to_string(),
                        expected,
                        got: value,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Gelfand-Tsetlin values of `a` on the boxes, in basis order. Constant
/// functions are checked against their known values and dropped.
pub fn gt_values(w: &Weight, a: &OrbitPoint) -> Result<Vec<f64>> {
    check_shape(w, a)?;
    values_on(&diagram::build_diagram(w)?, a, MEMBERSHIP_TOL)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub samples: usize,
    /// Smallest slack over all inequalities and samples (negative when some
    /// inequality is violated).
    pub max_violation: f64,
    pub seed: u64,
    pub tolerance: f64,
    pub pass: bool,
}

fn min_slack(p: &Polytope, x: &[f64]) -> f64 {
    let d = p.diagram();
    p.inequalities()
        .iter()
        .map(|q| {
            let lhs: f64 = q
                .coeffs
                .iter()
                .map(|(c, a)| to_f64(a) * x[d.basis_index(*c).expect("box")])
                .sum();
            to_f64(&q.rhs) - lhs
        })
        .fold(f64::INFINITY, f64::min)
}

/// Samples `n_samples` orbit points (sample `i` uses stream `i` of the seeded
/// generator) and reports the worst inequality violation of their
/// Gelfand-Tsetlin images.
pub fn montecarlo_membership(
    w: &Weight,
    n_samples: usize,
    tol: f64,
    seed: u64,
) -> Result<SampleReport> {
    let p = polytope::hrep(w)?;
    let worst = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let a = sample_orbit_point_with(w, &mut rng);
            let x = values_on(p.diagram(), &a, MEMBERSHIP_TOL.max(tol))?;
            Ok(min_slack(&p, &x))
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    let max_violation = if n_samples == 0 { 0.0 } else { worst };
    Ok(SampleReport {
        samples: n_samples,
        max_violation,
        seed,
        tolerance: tol,
        pass: max_violation >= -tol,
    })
}
