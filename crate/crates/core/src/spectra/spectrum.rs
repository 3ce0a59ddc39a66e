use serde::Serialize;

use crate::graph::Graph;

use super::{build_alpha_matrix, eigen_symmetric, SpectraError};

/// Absolute tolerance for the trace and moment identities.
pub const IDENTITY_TOL: f64 = 1e-8;

/// The A-alpha spectrum of one graph at one alpha, with the derived
/// deviations and energy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub alpha: f64,
    pub order: usize,
    pub size: usize,
    /// Eigenvalues `p_1 >= ... >= p_n`.
    pub values: Vec<f64>,
    /// Mean eigenvalue `2 alpha m / n`.
    pub mean_shift: f64,
    /// `eta_i = p_i - 2 alpha m / n`, aligned with `values`.
    pub eta: Vec<f64>,
    /// `|eta_i|`, sorted descending.
    pub deviations: Vec<f64>,
    pub energy: f64,
}

impl Spectrum {
    /// Assembles a spectrum from eigenvalues of a graph with `order`
    /// vertices and `size` edges. `values` may be in any order.
    pub fn from_values(alpha: f64, order: usize, size: usize, mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let mean_shift = if order == 0 { 0.0 } else { 2.0 * alpha * size as f64 / order as f64 };
        let eta: Vec<f64> = values.iter().map(|p| p - mean_shift).collect();
        let mut deviations: Vec<f64> = eta.iter().map(|e| e.abs()).collect();
        deviations.sort_by(|a, b| b.total_cmp(a));
        let energy = eta.iter().map(|e| e.abs()).sum();
        Self { alpha, order, size, values, mean_shift, eta, deviations, energy }
    }

    pub fn radius(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn smallest(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// `s_1`, the largest deviation.
    pub fn s_max(&self) -> f64 {
        self.deviations.first().copied().unwrap_or(0.0)
    }

    /// `s_n`, the smallest deviation.
    pub fn s_min(&self) -> f64 {
        self.deviations.last().copied().unwrap_or(0.0)
    }

    /// `sum eta_i^2`.
    pub fn eta_square_sum(&self) -> f64 {
        self.eta.iter().map(|e| e * e).sum()
    }

    pub fn cluster_tol(&self) -> f64 {
        default_cluster_tol(&self.values)
    }

    pub fn distinct(&self) -> Vec<Cluster> {
        distinct_eigenvalues(&self.values, self.cluster_tol())
    }
}

/// Closed-form values of the three moment sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSums {
    /// `sum p_i = 2 alpha m`
    pub trace: f64,
    /// `sum p_i^2 = alpha^2 M1 + (1 - alpha)^2 2m`
    pub trace_of_square: f64,
    /// `sum eta_i^2 = alpha^2 M1 + (1 - alpha)^2 2m - 4 alpha^2 m^2 / n`
    pub eta_square: f64,
}

pub fn moment_sums(g: &Graph, alpha: f64) -> MomentSums {
    let n = g.order() as f64;
    let m = g.size() as f64;
    let m1 = g.zagreb() as f64;
    let trace_of_square = alpha * alpha * m1 + (1.0 - alpha).powi(2) * 2.0 * m;
    MomentSums {
        trace: 2.0 * alpha * m,
        trace_of_square,
        eta_square: trace_of_square - 4.0 * alpha * alpha * m * m / n,
    }
}

/// Computes the spectrum of `A_alpha(g)` and checks the moment identities
/// before returning it.
pub fn spectrum(g: &Graph, alpha: f64) -> Result<Spectrum, SpectraError> {
    let sp = unchecked_spectrum(g, alpha)?;
    let expected = moment_sums(g, alpha);
    let computed = [
        ("sum p_i = 2 alpha m", sp.values.iter().sum::<f64>(), expected.trace),
        ("sum p_i^2 = alpha^2 M1 + (1-alpha)^2 2m", sp.values.iter().map(|p| p * p).sum(), expected.trace_of_square),
        ("sum eta_i^2 = y", sp.eta_square_sum(), expected.eta_square),
    ];
    for (identity, computed, expected) in computed {
        if (computed - expected).abs() > IDENTITY_TOL {
            return Err(SpectraError::IdentityViolation { identity, computed, expected });
        }
    }
    Ok(sp)
}

/// The spectrum of `A_alpha(g)` without the moment identity checks.
pub fn unchecked_spectrum(g: &Graph, alpha: f64) -> Result<Spectrum, SpectraError> {
    let matrix = build_alpha_matrix(g, alpha)?;
    let eig = eigen_symmetric(&matrix)?;
    Ok(Spectrum::from_values(alpha, g.order(), g.size(), eig.values))
}

/// A-alpha energy straight from eigenvalues: `sum |p_i - mean|`.
pub fn energy_of(values: &[f64], mean_shift: f64) -> f64 {
    values.iter().map(|p| (p - mean_shift).abs()).sum()
}

/// The largest A-alpha eigenvalue. Never below the average degree `2m/n`.
pub fn spectral_radius(g: &Graph, alpha: f64) -> Result<f64, SpectraError> {
    let radius = spectrum(g, alpha)?.radius();
    let average = 2.0 * g.size() as f64 / g.order() as f64;
    if radius < average - IDENTITY_TOL {
        return Err(SpectraError::RadiusBelowAverageDegree { radius, average });
    }
    Ok(radius)
}

/// A run of numerically equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// `1e-8 * (1 + |p_1|)` for descending `values`.
pub fn default_cluster_tol(values: &[f64]) -> f64 {
    let scale = values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    1e-8 * (1.0 + scale)
}

/// Groups sorted (either direction) values into maximal runs whose
/// consecutive gaps are at most `tol`. Each cluster reports its mean.
pub fn distinct_eigenvalues(values: &[f64], tol: f64) -> Vec<Cluster> {
    let mut clusters: Vec<(f64, usize)> = Vec::new();
    let mut prev: Option<f64> = None;
    for &v in values {
        match (prev, clusters.last_mut()) {
            (Some(p), Some((sum, count))) if (v - p).abs() <= tol => {
                *sum += v;
                *count += 1;
            }
            _ => clusters.push((v, 1)),
        }
        prev = Some(v);
    }
    clusters
        .into_iter()
        .map(|(sum, count)| Cluster { value: sum / count as f64, multiplicity: count })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn gen(f: GraphFamily) -> Graph {
        f.generate().unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-10
    }

    #[test]
    fn k4_at_half() {
        let sp = spectrum(&gen(GraphFamily::Complete(4)), 0.5).unwrap();
        assert!(sp.values.iter().zip([3.0, 1.0, 1.0, 1.0]).all(|(a, b)| close(*a, b)));
        assert_eq!(sp.mean_shift, 1.5);
        assert!(sp.deviations.iter().zip([1.5, 0.5, 0.5, 0.5]).all(|(a, b)| close(*a, b)));
        assert!(close(sp.energy, 3.0));
    }

    #[test]
    fn triangle_energy() {
        let k3 = gen(GraphFamily::Complete(3));
        for alpha in [0.0, 0.25, 0.5, 0.9] {
            assert!(close(spectrum(&k3, alpha).unwrap().energy, 4.0 * (1.0 - alpha)));
        }
    }

    #[test]
    fn single_edge_closed_form() {
        let k2 = gen(GraphFamily::Complete(2));
        for alpha in [0.0, 0.3, 0.7] {
            let sp = spectrum(&k2, alpha).unwrap();
            assert!(close(sp.values[0], 1.0));
            assert!(close(sp.values[1], 2.0 * alpha - 1.0));
            assert!(close(sp.energy, 2.0 * (1.0 - alpha)));
        }
    }

    #[test]
    fn complete_graph_clusters() {
        let sp = spectrum(&gen(GraphFamily::Complete(5)), 0.3).unwrap();
        let c = sp.distinct();
        assert_eq!(c.len(), 2);
        assert!(close(c[0].value, 4.0) && c[0].multiplicity == 1);
        assert!(close(c[1].value, 0.5) && c[1].multiplicity == 4);
    }

    #[test]
    fn clustering_edge_cases() {
        let k2 = spectrum(&gen(GraphFamily::Complete(2)), 0.4).unwrap();
        assert_eq!(k2.distinct().len(), 2);
        let flat = distinct_eigenvalues(&[2.0; 5], 1e-8);
        assert_eq!(flat, vec![Cluster { value: 2.0, multiplicity: 5 }]);
        // chained gaps merge
        let chain = distinct_eigenvalues(&[1.0, 1.0 - 6e-9, 1.0 - 1.2e-8, 0.0], 1e-8);
        assert_eq!(chain.iter().map(|c| c.multiplicity).collect::<Vec<_>>(), vec![3, 1]);
        assert!(distinct_eigenvalues(&[], 1e-8).is_empty());
    }

    #[test]
    fn spectral_radius_examples() {
        for alpha in [0.0, 0.5, 0.9] {
            assert!(close(spectral_radius(&gen(GraphFamily::Cycle(5)), alpha).unwrap(), 2.0));
        }
        assert!(close(spectral_radius(&gen(GraphFamily::Petersen), 0.0).unwrap(), 3.0));
        let star = gen(GraphFamily::CompleteBipartite(1, 3));
        assert!(close(spectral_radius(&star, 0.0).unwrap(), 3f64.sqrt()));
    }

    #[test]
    fn isolated_vertex() {
        let sp = spectrum(&gen(GraphFamily::Empty(1)), 0.5).unwrap();
        assert_eq!(sp.values, vec![0.0]);
        assert_eq!(sp.energy, 0.0);
    }
}
