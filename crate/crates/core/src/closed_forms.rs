//! Analytic A-alpha spectra: complete graphs, strongly regular graphs and the
//! extremal families of the energy bounds.

use serde::Serialize;
use thiserror::Error;

/// `(value, multiplicity)` pairs, largest value first.
pub type ClosedSpectrum = Vec<(f64, usize)>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SrgError {
    #[error("infeasible parameters ({n}, {r}, {a}, {c}): {reason}")]
    Infeasible { n: u64, r: u64, a: u64, c: u64, reason: &'static str },
    #[error("alpha = {0} must lie in [0, 1)")]
    AlphaOutOfRange(f64),
    #[error("discriminant {0:e} is degenerate; the two non-principal eigenvalues coincide")]
    DegenerateDiscriminant(f64),
    #[error("multiplicity {value} is not an integer (off by {offset:e})")]
    NonIntegralMultiplicity { value: f64, offset: f64 },
}

/// Parameters `(n, r, a, c)` of a strongly regular graph: `n` vertices, degree
/// `r`, `a` common neighbours per adjacent pair, `c` per non-adjacent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: u64,
    pub r: u64,
    pub a: u64,
    pub c: u64,
}

impl SrgParams {
    pub fn new(n: u64, r: u64, a: u64, c: u64) -> Result<Self, SrgError> {
        let fail = |reason| Err(SrgError::Infeasible { n, r, a, c, reason });
        if n == 0 || r >= n {
            return fail("need 0 <= r < n");
        }
        if r >= 1 && a > r - 1 {
            return fail("need a <= r - 1");
        }
        if c > r {
            return fail("need c <= r");
        }
        // r (r - a - 1) = (n - r - 1) c, in integers
        let lhs = if r == 0 { 0 } else { r * (r - a - 1) };
        if lhs != (n - r - 1) * c {
            return fail("r(r - a - 1) != (n - r - 1) c");
        }
        Ok(Self { n, r, a, c })
    }

    pub fn edges(&self) -> f64 {
        (self.n * self.r) as f64 / 2.0
    }
}

/// Closed-form A-alpha spectrum of a strongly regular graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SrgSpectrum {
    pub params: SrgParams,
    pub alpha: f64,
    /// The principal eigenvalue `r`, multiplicity 1.
    pub r_eig: f64,
    /// Linear coefficient `2 r alpha + (1 - alpha)(a - c)`.
    pub linear: f64,
    /// Constant `(r - c)(1 - alpha)^2 - r alpha (1 - alpha)(a - c) - r^2 alpha^2`.
    pub constant: f64,
    /// `linear^2 + 4 constant`.
    pub discriminant: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub m1: usize,
    pub m2: usize,
}

/// Tolerance on the distance of the solved multiplicities to integers.
pub const MULTIPLICITY_TOL: f64 = 1e-6;
const DISCRIMINANT_FLOOR: f64 = 1e-12;

/// The non-principal eigenvalues solve `x^2 - B x - C = 0`; their
/// multiplicities come from `m1 + m2 = n - 1` and
/// `m1 theta1 + m2 theta2 = 2 alpha m - r`.
pub fn srg_alpha_spectrum(p: SrgParams, alpha: f64) -> Result<SrgSpectrum, SrgError> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(SrgError::AlphaOutOfRange(alpha));
    }
    let (n, r, a, c) = (p.n as f64, p.r as f64, p.a as f64, p.c as f64);
    let beta = 1.0 - alpha;
    let linear = 2.0 * r * alpha + beta * (a - c);
    let constant = (r - c) * beta * beta - r * alpha * beta * (a - c) - r * r * alpha * alpha;
    let discriminant = linear * linear + 4.0 * constant;
    if discriminant < DISCRIMINANT_FLOOR {
        return Err(SrgError::DegenerateDiscriminant(discriminant));
    }
    let root = discriminant.sqrt();
    let theta1 = (linear + root) / 2.0;
    let theta2 = (linear - root) / 2.0;

    let rest = 2.0 * alpha * p.edges() - r;
    let m1_real = (rest - (n - 1.0) * theta2) / (theta1 - theta2);
    let m2_real = (n - 1.0) - m1_real;
    let round = |x: f64| -> Result<usize, SrgError> {
        let k = x.round();
        let offset = (x - k).abs();
        if offset > MULTIPLICITY_TOL || k < 0.0 {
            return Err(SrgError::NonIntegralMultiplicity { value: x, offset });
        }
        Ok(k as usize)
    };
    let m1 = round(m1_real)?;
    let m2 = round(m2_real)?;

    Ok(SrgSpectrum { params: p, alpha, r_eig: r, linear, constant, discriminant, theta1, theta2, m1, m2 })
}

impl SrgSpectrum {
    pub fn as_multiset(&self) -> ClosedSpectrum {
        let mut out = vec![(self.r_eig, 1), (self.theta1, self.m1), (self.theta2, self.m2)];
        out.retain(|&(_, k)| k > 0);
        out.sort_by(|x, y| y.0.total_cmp(&x.0));
        out
    }
}

/// `K_n`: `n - 1` once and `alpha n - 1` with multiplicity `n - 1`.
pub fn complete_alpha_spectrum(n: usize, alpha: f64) -> ClosedSpectrum {
    if n <= 1 {
        return vec![(0.0, n)];
    }
    vec![((n - 1) as f64, 1), (alpha * n as f64 - 1.0, n - 1)]
}

/// `k K_2`: each edge contributes `{1, 2 alpha - 1}`.
pub fn matching_union_alpha_spectrum(k: usize, alpha: f64) -> ClosedSpectrum {
    vec![(1.0, k), (2.0 * alpha - 1.0, k)]
}

/// `K_{h,h}` on `n = 2h` vertices: `n/2`, `n(2 alpha - 1)/2`, and
/// `n alpha / 2` with multiplicity `n - 2`.
pub fn balanced_bipartite_alpha_spectrum(half: usize, alpha: f64) -> ClosedSpectrum {
    let n = 2.0 * half as f64;
    let mut out = vec![(n / 2.0, 1), (n * (2.0 * alpha - 1.0) / 2.0, 1), (n * alpha / 2.0, 2 * half - 2)];
    out.retain(|&(_, k)| k > 0);
    out.sort_by(|x, y| y.0.total_cmp(&x.0));
    out
}

/// Expands `(value, multiplicity)` pairs into a descending list.
pub fn expand(spec: &[(f64, usize)]) -> Vec<f64> {
    let mut out: Vec<f64> = spec.iter().flat_map(|&(v, k)| std::iter::repeat_n(v, k)).collect();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}
