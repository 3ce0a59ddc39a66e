//! Lower and upper bounds on the A-alpha energy, the auxiliary degree and
//! trace inequalities they rest on, and a per-graph report.
//!
//! Every bound takes the graph together with its already computed spectrum.
//! A bound whose hypotheses fail returns [`BoundError::Inapplicable`] instead
//! of a number, so sweeps never evaluate a bound outside its hypotheses.

mod report;
mod shape;

pub use report::{full_report, full_report_for, BoundKind, BoundRecord, BoundReport};
pub use shape::{classify_equality_shape, ShapeClass, SpectrumShape};

use thiserror::Error;

use crate::graph::Graph;
use crate::spectra::{SpectraError, Spectrum, SymMatrix};

/// Tolerance for `satisfied` and equality decisions.
pub const EQ_TOL: f64 = 1e-8;
/// Minimum margin demanded by strict bounds.
pub const STRICT_MARGIN: f64 = 1e-10;
/// Tolerance for the ordered-sum inequality.
pub const ORDERED_SUM_TOL: f64 = 1e-12;
/// Deviations at or below this count as zero when testing `s_n = 0`.
pub const ZERO_DEVIATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("inapplicable: {0}")]
    Inapplicable(&'static str),
    #[error("sequence is not sorted in descending order")]
    Unsorted,
    #[error("sequence has a negative entry")]
    Negative,
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

use BoundError::Inapplicable;

fn require(cond: bool, reason: &'static str) -> Result<(), BoundError> {
    if cond {
        Ok(())
    } else {
        Err(Inapplicable(reason))
    }
}

fn require_alpha_below_one(alpha: f64) -> Result<(), BoundError> {
    require((0.0..1.0).contains(&alpha), "alpha must lie in [0, 1)")
}

/// `y = alpha^2 M1 + (1 - alpha)^2 2m - 4 alpha^2 m^2 / n`, the sum of the
/// squared auxiliary eigenvalues.
pub fn moment_y(g: &Graph, alpha: f64) -> f64 {
    crate::spectra::moment_sums(g, alpha).eta_square
}

/// `c = m {alpha^2 n^3 + n^2 (2 - 4 alpha - alpha^2) + n (4 alpha - 2 - 2 alpha^2 m) + 4 alpha^2 m}`.
pub fn c_threshold(g: &Graph, alpha: f64) -> f64 {
    let n = g.order() as f64;
    let m = g.size() as f64;
    let a2 = alpha * alpha;
    m * (a2 * n.powi(3) + n * n * (2.0 - 4.0 * alpha - a2) + n * (4.0 * alpha - 2.0 - 2.0 * a2 * m) + 4.0 * a2 * m)
}

/// `(1 - alpha)^2 2m + (alpha^2 / 2)(Delta - delta)^2`, the degree-spread
/// lower estimate of `y` on connected graphs.
pub fn spread_term(g: &Graph, alpha: f64) -> f64 {
    let spread = (g.max_degree() - g.min_degree()) as f64;
    (1.0 - alpha).powi(2) * 2.0 * g.size() as f64 + alpha * alpha / 2.0 * spread * spread
}

/// A lower bound guarded by a premise on `s_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalBound {
    pub applicable: bool,
    pub bound: f64,
    /// The value `s_n` is compared against, if the premise has one.
    pub threshold: Option<f64>,
}

fn check_connected_basic(g: &Graph, sp: &Spectrum) -> Result<(), BoundError> {
    require_alpha_below_one(sp.alpha)?;
    require(g.is_connected(), "graph is disconnected")
}

/// `sqrt(2 y)`; the energy exceeds it on connected graphs with `n >= 2`,
/// `m >= 1`.
pub fn lower_bound_strict(g: &Graph, sp: &Spectrum) -> Result<f64, BoundError> {
    check_connected_basic(g, sp)?;
    require(g.order() >= 2 && g.size() >= 1, "needs n >= 2 and m >= 1")?;
    Ok((2.0 * moment_y(g, sp.alpha)).max(0.0).sqrt())
}

/// `2 sqrt(y n) sqrt(s_1 s_n) / (s_1 + s_n)`.
pub fn lower_bound_two_level(g: &Graph, sp: &Spectrum) -> Result<f64, BoundError> {
    require_alpha_below_one(sp.alpha)?;
    require(g.order() >= 2 && g.size() >= 1, "needs n >= 2 and m >= 1")?;
    let (s1, sn) = (sp.s_max(), sp.s_min());
    require(s1 + sn > 1e-12, "s_1 + s_n vanishes")?;
    let y = moment_y(g, sp.alpha).max(0.0);
    Ok(2.0 * (y * g.order() as f64).sqrt() * (s1 * sn).sqrt() / (s1 + sn))
}

fn threshold_corollary(
    g: &Graph,
    sp: &Spectrum,
    divisor: f64,
    factor: f64,
) -> Result<ConditionalBound, BoundError> {
    check_connected_basic(g, sp)?;
    require(g.order() >= 3 && g.size() >= 2, "needs n >= 3 and m >= 2")?;
    let c = c_threshold(g, sp.alpha);
    let bound = factor * (spread_term(g, sp.alpha) * g.order() as f64).sqrt();
    if c < 0.0 {
        return Ok(ConditionalBound { applicable: false, bound, threshold: None });
    }
    let threshold = c.sqrt() / divisor;
    let applicable = sp.s_min() >= threshold - EQ_TOL;
    Ok(ConditionalBound { applicable, bound, threshold: Some(threshold) })
}

/// If `s_n >= sqrt(c) / (2n)`:
/// `E >= (2 sqrt 2 / 3) sqrt(((1 - alpha)^2 2m + (alpha^2/2)(Delta - delta)^2) n)`.
pub fn lower_bound_threshold_cor1(g: &Graph, sp: &Spectrum) -> Result<ConditionalBound, BoundError> {
    let n = g.order() as f64;
    threshold_corollary(g, sp, 2.0 * n, 2.0 * 2f64.sqrt() / 3.0)
}

/// If `s_n >= sqrt(c) / n^3`:
/// `E > (2n / (1 + n^2)) sqrt(((1 - alpha)^2 2m + (alpha^2/2)(Delta - delta)^2) n)`.
pub fn lower_bound_threshold_cor2(g: &Graph, sp: &Spectrum) -> Result<ConditionalBound, BoundError> {
    let n = g.order() as f64;
    threshold_corollary(g, sp, n.powi(3), 2.0 * n / (1.0 + n * n))
}

/// If `s_n = 0`: `E >= y / s_1`.
pub fn lower_bound_sn_zero(g: &Graph, sp: &Spectrum) -> Result<ConditionalBound, BoundError> {
    check_connected_basic(g, sp)?;
    let s1 = sp.s_max();
    require(s1 > ZERO_DEVIATION_TOL, "all deviations vanish")?;
    let applicable = sp.s_min() <= ZERO_DEVIATION_TOL;
    Ok(ConditionalBound { applicable, bound: moment_y(g, sp.alpha) / s1, threshold: Some(0.0) })
}

/// Branch taken by the `s_n = 0` piecewise bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiecewiseBound {
    pub regular_branch: bool,
    pub bound: f64,
}

/// For `s_n = 0`: regular graphs give `E >= (1 - alpha) n`; otherwise
/// `E > ((1 - alpha)^2 2m + (alpha^2/2)(Delta - delta)^2) / (Delta - 2 alpha m / n)`.
pub fn lower_bound_piecewise(g: &Graph, sp: &Spectrum) -> Result<PiecewiseBound, BoundError> {
    check_connected_basic(g, sp)?;
    require(g.size() >= 1, "needs m >= 1")?;
    require(sp.s_min() <= ZERO_DEVIATION_TOL, "s_n is not zero")?;
    let alpha = sp.alpha;
    let n = g.order() as f64;
    if g.is_regular() {
        return Ok(PiecewiseBound { regular_branch: true, bound: (1.0 - alpha) * n });
    }
    let denom = g.max_degree() as f64 - sp.mean_shift;
    require(denom > 0.0, "Delta equals 2 alpha m / n")?;
    Ok(PiecewiseBound { regular_branch: false, bound: spread_term(g, alpha) / denom })
}

/// Connected `r`-regular graphs: `(1 - alpha) n` when `s_n = 0`, else
/// `2 (1 - alpha) n r sqrt(s_n) / (r + s_n)`.
pub fn lower_bound_regular(g: &Graph, sp: &Spectrum) -> Result<f64, BoundError> {
    check_connected_basic(g, sp)?;
    require(g.is_regular(), "graph is not regular")?;
    require(g.size() >= 1, "needs m >= 1")?;
    let alpha = sp.alpha;
    let n = g.order() as f64;
    let r = g.max_degree() as f64;
    let sn = sp.s_min();
    if sn <= ZERO_DEVIATION_TOL {
        Ok((1.0 - alpha) * n)
    } else {
        Ok(2.0 * (1.0 - alpha) * n * r * sn.sqrt() / (r + sn))
    }
}

/// `sqrt(y / n) + sqrt((n - 1)(y - y / n))`. Edgeless graphs meet it
/// trivially as `0 = 0`.
pub fn upper_bound_main(g: &Graph, sp: &Spectrum) -> Result<f64, BoundError> {
    require_alpha_below_one(sp.alpha)?;
    let n = g.order() as f64;
    let y = moment_y(g, sp.alpha).max(0.0);
    Ok((y / n).sqrt() + ((n - 1.0) * (y - y / n)).max(0.0).sqrt())
}

/// `n sqrt(2m (1 - alpha)^2 / n + (alpha^2 / 4)(Delta - delta)^2)`.
pub fn upper_bound_zagreb(g: &Graph, sp: &Spectrum) -> Result<f64, BoundError> {
    check_connected_basic(g, sp)?;
    let n = g.order() as f64;
    let spread = (g.max_degree() - g.min_degree()) as f64;
    let alpha = sp.alpha;
    Ok(n * (2.0 * g.size() as f64 * (1.0 - alpha).powi(2) / n + alpha * alpha / 4.0 * spread * spread).sqrt())
}

/// Regular graphs: `n (1 - alpha) sqrt(2m / n)`.
pub fn upper_bound_regular(g: &Graph, sp: &Spectrum) -> Result<f64, BoundError> {
    require_alpha_below_one(sp.alpha)?;
    require(g.is_regular(), "graph is not regular")?;
    let n = g.order() as f64;
    Ok(n * (1.0 - sp.alpha) * (2.0 * g.size() as f64 / n).sqrt())
}

/// Degree-sum bounds on the first Zagreb index of a connected graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZagrebBounds {
    /// `4 m^2 / n + (Delta - delta)^2 / 2`
    pub lower: f64,
    /// `m (2m / (n - 1) + n - 2)`
    pub upper_a: f64,
    /// `4 m^2 / n + (n / 4)(Delta - delta)^2`
    pub upper_b: f64,
}

pub fn zagreb_bounds(g: &Graph) -> Result<ZagrebBounds, BoundError> {
    require(g.order() >= 2, "needs n >= 2")?;
    require(g.is_connected(), "graph is disconnected")?;
    let n = g.order() as f64;
    let m = g.size() as f64;
    let spread = (g.max_degree() - g.min_degree()) as f64;
    let base = 4.0 * m * m / n;
    Ok(ZagrebBounds {
        lower: base + spread * spread / 2.0,
        upper_a: m * (2.0 * m / (n - 1.0) + n - 2.0),
        upper_b: base + n / 4.0 * spread * spread,
    })
}

/// Upper bound on the largest eigenvalue of a non-negative symmetric matrix
/// from its first two traces: `a/n + sqrt((n-1)/n (b - a^2/n))`.
pub fn trace_radius_bound(b: &SymMatrix) -> Result<f64, BoundError> {
    require(b.order() >= 3, "needs order >= 3")?;
    require(b.is_nonnegative(), "matrix has negative entries")?;
    let n = b.order() as f64;
    let a = b.trace();
    let sq = b.trace_of_square();
    Ok(a / n + ((n - 1.0) / n * (sq - a * a / n)).max(0.0).sqrt())
}

/// Checks `sum a_i (a_1 + a_n) >= sum a_i^2 + n a_1 a_n` for a descending
/// non-negative sequence.
pub fn ordered_sum_inequality(a: &[f64]) -> Result<bool, BoundError> {
    if a.iter().any(|&x| x < 0.0) {
        return Err(BoundError::Negative);
    }
    if a.windows(2).any(|w| w[0] < w[1]) {
        return Err(BoundError::Unsorted);
    }
    let (Some(&first), Some(&last)) = (a.first(), a.last()) else {
        return Ok(true);
    };
    let n = a.len() as f64;
    let lhs = a.iter().sum::<f64>() * (first + last);
    let rhs = a.iter().map(|x| x * x).sum::<f64>() + n * first * last;
    Ok(lhs >= rhs - ORDERED_SUM_TOL * (1.0 + rhs.abs()))
}

#[cfg(test)]
mod tests;
