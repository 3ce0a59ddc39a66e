//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use super::{SpectraError, SymMatrix};

/// Sweeps stop once the off-diagonal Frobenius mass is below this fraction
/// of the matrix Frobenius norm.
pub const CONVERGENCE_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
/// Accepted results satisfy `residual <= RESIDUAL_TOL * (1 + max |entry|)`.
pub const RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// `max_i ||B v_i - lambda_i v_i||_inf` over the computed pairs.
    pub residual: f64,
    pub sweeps: usize,
}

fn off_diagonal_mass(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// All eigenvalues of a symmetric matrix, sorted descending.
pub fn eigen_symmetric(b: &SymMatrix) -> Result<EigenResult, SpectraError> {
    let n = b.order();
    let mut a = b.entries().to_vec();
    let mut v = SymMatrix::identity(n).entries().to_vec();
    let threshold = CONVERGENCE_TOL * b.frobenius_norm();

    let mut sweeps = 0;
    let mut off = off_diagonal_mass(&a, n);
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NoConvergence { sweeps, off_diagonal: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_mass(&a, n);
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a[i * n + i], i)).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));

    let residual = pairs
        .iter()
        .map(|&(lambda, col)| column_residual(b, &v, col, lambda))
        .fold(0.0, f64::max);
    let limit = RESIDUAL_TOL * (1.0 + b.max_abs_entry());
    if residual > limit {
        return Err(SpectraError::Residual { residual, limit });
    }

    Ok(EigenResult { values: pairs.into_iter().map(|(x, _)| x).collect(), residual, sweeps })
}

/// Annihilates `a[p][q]` with one plane rotation and accumulates it into `v`.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t^2 + 2 theta t - 1 = 0
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r != p && r != q {
            let arp = a[r * n + p];
            let arq = a[r * n + q];
            let new_rp = c * arp - s * arq;
            let new_rq = s * arp + c * arq;
            a[r * n + p] = new_rp;
            a[p * n + r] = new_rp;
            a[r * n + q] = new_rq;
            a[q * n + r] = new_rq;
        }
    }
    for r in 0..n {
        let vrp = v[r * n + p];
        let vrq = v[r * n + q];
        v[r * n + p] = c * vrp - s * vrq;
        v[r * n + q] = s * vrp + c * vrq;
    }
}

fn column_residual(b: &SymMatrix, v: &[f64], col: usize, lambda: f64) -> f64 {
    let n = b.order();
    (0..n)
        .map(|i| {
            let bv: f64 = (0..n).map(|k| b.get(i, k) * v[k * n + col]).sum();
            (bv - lambda * v[i * n + col]).abs()
        })
        .fold(0.0, f64::max)
}
