//! Classification of deviation sequences against the equality templates of
//! the energy lower bounds.

use serde::Serialize;

use crate::closed_forms::{balanced_bipartite_alpha_spectrum, complete_alpha_spectrum, expand};
use crate::graph::Graph;
use crate::spectra::{distinct_eigenvalues, Cluster, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ShapeClass {
    /// Every deviation equal and nonzero, not a perfect matching.
    TwoLevelEqual,
    CompleteGraph,
    /// Perfect matching `(n/2) K_2`; every deviation equal.
    MatchingUnion,
    /// `K_{n/2, n/2}`: `{n/2, n(2 alpha - 1)/2, [n alpha / 2]^(n-2)}`.
    BalancedBipartite,
    /// Eigenvalues among `2m/n`, `2m/n (2 alpha - 1)` and
    /// `2m alpha / n +- (1 - alpha)`, with a tight two-level bound.
    #[serde(rename = "FourValueCase_i")]
    FourValueCaseI,
    /// Eigenvalues `2m alpha / n +- h`, `2m alpha / n +- k` with
    /// `h > 2m/n (1 - alpha)`, `h > k`, and a tight two-level bound.
    #[serde(rename = "FourValueCase_ii")]
    FourValueCaseII,
    /// `{mean + h, mean - h, [mean]^(n-2)}` with `h > 2m/n (1 - alpha)`.
    ThreeValueZeroCase,
    None,
}

impl ShapeClass {
    pub fn name(self) -> &'static str {
        match self {
            Self::TwoLevelEqual => "TwoLevelEqual",
            Self::CompleteGraph => "CompleteGraph",
            Self::MatchingUnion => "MatchingUnion",
            Self::BalancedBipartite => "BalancedBipartite",
            Self::FourValueCaseI => "FourValueCase_i",
            Self::FourValueCaseII => "FourValueCase_ii",
            Self::ThreeValueZeroCase => "ThreeValueZeroCase",
            Self::None => "None",
        }
    }

    /// Shapes at which the two-level lower bound is attained.
    pub fn attains_two_level_bound(self) -> bool {
        matches!(
            self,
            Self::TwoLevelEqual | Self::CompleteGraph | Self::MatchingUnion | Self::FourValueCaseI | Self::FourValueCaseII
        )
    }

    /// Shapes at which the `s_n = 0` bound `y / s_1` is attained.
    pub fn attains_zero_deviation_bound(self) -> bool {
        matches!(self, Self::BalancedBipartite | Self::ThreeValueZeroCase)
    }
}

/// Deviation levels of a spectrum: `s_1 = ... = s_t = h >= ... >= s_n = k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumShape {
    pub clusters: Vec<Cluster>,
    /// Distinct deviation levels, descending.
    pub levels: Vec<Cluster>,
    pub h: f64,
    pub k: f64,
    pub t: usize,
    pub classification: ShapeClass,
}

impl SpectrumShape {
    pub fn is_two_level(&self) -> bool {
        self.levels.len() <= 2
    }
}

/// True when the descending lists agree entrywise within `tol`.
fn same_multiset(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

pub fn classify_equality_shape(sp: &Spectrum, g: &Graph) -> SpectrumShape {
    let tol = sp.cluster_tol();
    let clusters = distinct_eigenvalues(&sp.values, tol);
    let levels = distinct_eigenvalues(&sp.deviations, tol);
    let h = levels.first().map_or(0.0, |c| c.value);
    let k = levels.last().map_or(0.0, |c| c.value);
    let t = levels.first().map_or(0, |c| c.multiplicity);
    let classification = classify(sp, g, &levels, h, k, t, tol);
    SpectrumShape { clusters, levels, h, k, t, classification }
}

fn classify(sp: &Spectrum, g: &Graph, levels: &[Cluster], h: f64, k: f64, t: usize, tol: f64) -> ShapeClass {
    let n = g.order();
    let nf = n as f64;
    let alpha = sp.alpha;
    let avg = 2.0 * g.size() as f64 / nf;
    let shift = sp.mean_shift;

    if levels.len() > 2 || h <= tol {
        return ShapeClass::None;
    }

    if levels.len() == 1 {
        return if g.is_perfect_matching() { ShapeClass::MatchingUnion } else { ShapeClass::TwoLevelEqual };
    }

    if k <= tol {
        if n % 2 == 0 {
            let template = expand(&balanced_bipartite_alpha_spectrum(n / 2, alpha));
            if same_multiset(&sp.values, &template, tol) {
                return ShapeClass::BalancedBipartite;
            }
        }
        let above = sp.eta.iter().filter(|&&e| e > tol).count();
        let below = sp.eta.iter().filter(|&&e| e < -tol).count();
        if t == 2 && above == 1 && below == 1 && h > avg * (1.0 - alpha) + tol {
            return ShapeClass::ThreeValueZeroCase;
        }
        return ShapeClass::None;
    }

    // tight AM-GM step: sum s_i^2 = n s_1 s_n
    let y = sp.eta_square_sum();
    if (y - nf * h * k).abs() > tol * (1.0 + y) {
        return ShapeClass::None;
    }
    if same_multiset(&sp.values, &expand(&complete_alpha_spectrum(n, alpha)), tol) {
        return ShapeClass::CompleteGraph;
    }
    let case_i = [avg, avg * (2.0 * alpha - 1.0), avg * alpha + (1.0 - alpha), avg * alpha - (1.0 - alpha)];
    if sp.values.iter().all(|p| case_i.iter().any(|v| (p - v).abs() <= tol)) {
        return ShapeClass::FourValueCaseI;
    }
    let on_levels = sp.values.iter().all(|p| {
        [shift + h, shift - h, shift + k, shift - k].iter().any(|v| (p - v).abs() <= tol)
    });
    if on_levels && h > avg * (1.0 - alpha) + tol {
        return ShapeClass::FourValueCaseII;
    }
    ShapeClass::None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;
    use crate::spectra::spectrum;

    fn shape(f: GraphFamily, alpha: f64) -> SpectrumShape {
        let g = f.generate().unwrap();
        classify_equality_shape(&spectrum(&g, alpha).unwrap(), &g)
    }

    #[test]
    fn complete_graphs() {
        for n in 3..7 {
            for alpha in [0.0, 0.2, 0.7] {
                let s = shape(GraphFamily::Complete(n), alpha);
                assert_eq!(s.classification, ShapeClass::CompleteGraph, "K{n} at {alpha}");
                assert_eq!(s.t, 1);
                assert!((s.h - (n as f64 - 1.0) * (1.0 - alpha)).abs() < 1e-10);
                assert!((s.k - (1.0 - alpha)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn matchings() {
        for k in 1..4 {
            let s = shape(GraphFamily::MatchingUnion(k), 0.3);
            assert_eq!(s.classification, ShapeClass::MatchingUnion);
            assert_eq!(s.levels.len(), 1);
            assert_eq!(s.t, 2 * k);
        }
    }

    #[test]
    fn balanced_bipartite() {
        let s = shape(GraphFamily::CompleteBipartite(3, 3), 0.4);
        assert_eq!(s.classification, ShapeClass::BalancedBipartite);
        assert!(s.k.abs() < 1e-10);
        assert_eq!(s.t, 2);
        assert_eq!(shape(GraphFamily::Cycle(4), 0.0).classification, ShapeClass::BalancedBipartite);
    }

    #[test]
    fn star_is_three_value_zero_case_at_alpha_zero() {
        let s = shape(GraphFamily::CompleteBipartite(1, 3), 0.0);
        assert_eq!(s.classification, ShapeClass::ThreeValueZeroCase);
        assert!((s.h - 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn unstructured_graphs_are_unclassified() {
        assert_eq!(shape(GraphFamily::Path(4), 0.0).classification, ShapeClass::None);
        assert_eq!(shape(GraphFamily::Petersen, 0.3).classification, ShapeClass::None);
        assert_eq!(shape(GraphFamily::Empty(3), 0.3).classification, ShapeClass::None);
    }
}
