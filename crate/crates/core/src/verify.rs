//! Exhaustive checks of the spectral theorems over every labeled graph of
//! small order and a grid of alpha values.
//!
//! Graphs are enumerated by edge bitmask. Work is split into chunks of
//! consecutive masks that run in parallel; chunk results are merged in mask
//! order, so reports are identical for any worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{full_report_for, ordered_sum_inequality, zagreb_bounds, BoundReport, ShapeClass, EQ_TOL};
use crate::graph::{write_graph6, Graph};
use crate::round_sig;
use crate::spectra::{
    adjacency_matrix, eigen_symmetric, energy_of, moment_sums, signless_laplacian, unchecked_spectrum,
    SpectraError, Spectrum, IDENTITY_TOL,
};

pub const MAX_ORDER: usize = 7;
pub const DEFAULT_ORDER: usize = 6;
/// Violations, witnesses and boundary cases kept per theorem in a report.
pub const RECORD_LIMIT: usize = 50;
const CHUNK: u64 = 256;

pub fn default_alpha_grid() -> Vec<f64> {
    (0..10).map(|i| i as f64 / 10.0).collect()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("order {0} is below the minimum of 2")]
    OrderTooSmall(usize),
    #[error("alpha {0} is outside [0, 1)")]
    AlphaOutOfRange(f64),
    #[error("empty alpha grid")]
    EmptyGrid,
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error("graph {graph6} at alpha {alpha}: {source}")]
    Solver { graph6: String, alpha: f64, source: SpectraError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    MomentIdentities,
    SpectralRadiusSandwich,
    TwoDistinct,
    RegularThreePattern,
    LargestSimple,
    PsdHalf,
    EnergyMerging,
    AlphaOneDegree,
    OrderedSum,
    LowerStrict,
    LowerTwoLevel,
    LowerCor1,
    LowerCor2,
    LowerSnZero,
    LowerPiecewise,
    LowerRegular,
    UpperMain,
    UpperZagreb,
    UpperRegular,
    Zagreb,
    TraceRadius,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        Self::MomentIdentities,
        Self::SpectralRadiusSandwich,
        Self::TwoDistinct,
        Self::RegularThreePattern,
        Self::LargestSimple,
        Self::PsdHalf,
        Self::EnergyMerging,
        Self::AlphaOneDegree,
        Self::OrderedSum,
        Self::LowerStrict,
        Self::LowerTwoLevel,
        Self::LowerCor1,
        Self::LowerCor2,
        Self::LowerSnZero,
        Self::LowerPiecewise,
        Self::LowerRegular,
        Self::UpperMain,
        Self::UpperZagreb,
        Self::UpperRegular,
        Self::Zagreb,
        Self::TraceRadius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::MomentIdentities => "moment_identities",
            Self::SpectralRadiusSandwich => "spectral_radius_sandwich",
            Self::TwoDistinct => "two_distinct",
            Self::RegularThreePattern => "regular_three_pattern",
            Self::LargestSimple => "largest_simple",
            Self::PsdHalf => "psd_half",
            Self::EnergyMerging => "energy_merging",
            Self::AlphaOneDegree => "alpha_one_degree",
            Self::OrderedSum => "ordered_sum",
            Self::LowerStrict => "lower_strict",
            Self::LowerTwoLevel => "lower_two_level",
            Self::LowerCor1 => "lower_cor1",
            Self::LowerCor2 => "lower_cor2",
            Self::LowerSnZero => "lower_sn_zero",
            Self::LowerPiecewise => "lower_piecewise",
            Self::LowerRegular => "lower_regular",
            Self::UpperMain => "upper_main",
            Self::UpperZagreb => "upper_zagreb",
            Self::UpperRegular => "upper_regular",
            Self::Zagreb => "zagreb",
            Self::TraceRadius => "trace_radius",
        }
    }

    /// The [`BoundReport`] record checked by this theorem, if any.
    pub fn bound_name(self) -> Option<&'static str> {
        Some(match self {
            Self::LowerStrict => "lower_bound_strict",
            Self::LowerTwoLevel => "lower_bound_two_level",
            Self::LowerCor1 => "lower_bound_threshold_cor1",
            Self::LowerCor2 => "lower_bound_threshold_cor2",
            Self::LowerSnZero => "lower_bound_sn_zero",
            Self::LowerPiecewise => "lower_bound_piecewise",
            Self::LowerRegular => "lower_bound_regular",
            Self::UpperMain => "upper_bound_main",
            Self::UpperZagreb => "upper_bound_zagreb",
            Self::UpperRegular => "upper_bound_regular",
            Self::TraceRadius => "trace_radius",
            _ => return None,
        })
    }

    /// Checks that look at each graph once rather than once per alpha.
    fn per_graph(self) -> bool {
        matches!(self, Self::EnergyMerging | Self::AlphaOneDegree | Self::Zagreb)
    }

    fn connected_only(self) -> bool {
        !matches!(
            self,
            Self::MomentIdentities
                | Self::SpectralRadiusSandwich
                | Self::PsdHalf
                | Self::EnergyMerging
                | Self::AlphaOneDegree
                | Self::OrderedSum
                | Self::LowerTwoLevel
                | Self::UpperMain
                | Self::UpperRegular
                | Self::TraceRadius
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| VerifyError::UnknownTheorem(s.trim().to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n_max: usize,
    pub alpha_grid: Vec<f64>,
    pub connected_only: bool,
    /// Empty selects every registered theorem.
    pub theorems: Vec<TheoremId>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Per-theorem cap on stored records; `None` keeps everything.
    pub record_limit: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_max: DEFAULT_ORDER,
            alpha_grid: default_alpha_grid(),
            connected_only: false,
            theorems: Vec::new(),
            jobs: None,
            record_limit: Some(RECORD_LIMIT),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.n_max > MAX_ORDER {
            return Err(VerifyError::OrderTooLarge(self.n_max));
        }
        if self.n_max < 2 {
            return Err(VerifyError::OrderTooSmall(self.n_max));
        }
        if self.alpha_grid.is_empty() {
            return Err(VerifyError::EmptyGrid);
        }
        if let Some(&a) = self.alpha_grid.iter().find(|a| !(0.0..1.0).contains(*a)) {
            return Err(VerifyError::AlphaOutOfRange(a));
        }
        Ok(())
    }

    fn selected(&self) -> Vec<TheoremId> {
        let mut t = if self.theorems.is_empty() { TheoremId::ALL.to_vec() } else { self.theorems.clone() };
        t.sort();
        t.dedup();
        t
    }
}

/// A failed check. `measured` holds the quantities needed to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub alpha: Option<f64>,
    pub kind: &'static str,
    pub measured: BTreeMap<&'static str, f64>,
}

/// A graph (and alpha) at which a bound or characterization is attained.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub alpha: Option<f64>,
    pub classification: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub measured: BTreeMap<&'static str, f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct TheoremReport {
    pub graphs_tested: u64,
    pub applicable_count: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub equality_witness_count: u64,
    pub equality_witnesses: Vec<Witness>,
    /// Attained equalities outside the claimed extremal family that are
    /// whitelisted as known boundary cases, or ties with no named shape.
    pub boundary_case_count: u64,
    pub boundary_cases: Vec<Witness>,
    pub passed: bool,
}

fn push_capped<T>(list: &mut Vec<T>, count: &mut u64, item: T, limit: Option<usize>) {
    *count += 1;
    if limit.is_none_or(|l| list.len() < l) {
        list.push(item);
    }
}

impl TheoremReport {
    fn merge(&mut self, other: TheoremReport, limit: Option<usize>) {
        self.graphs_tested += other.graphs_tested;
        self.applicable_count += other.applicable_count;
        for (mine, count, theirs, their_count) in [
            (&mut self.equality_witnesses, &mut self.equality_witness_count, other.equality_witnesses, other.equality_witness_count),
            (&mut self.boundary_cases, &mut self.boundary_case_count, other.boundary_cases, other.boundary_case_count),
        ] {
            *count += their_count;
            let room = limit.map_or(usize::MAX, |l| l.saturating_sub(mine.len()));
            mine.extend(theirs.into_iter().take(room));
        }
        self.violation_count += other.violation_count;
        let room = limit.map_or(usize::MAX, |l| l.saturating_sub(self.violations.len()));
        self.violations.extend(other.violations.into_iter().take(room));
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n_max: usize,
    pub alpha_grid: Vec<f64>,
    pub connected_only: bool,
    pub graphs_enumerated: u64,
    pub total_violations: u64,
    pub passed: bool,
    pub theorems: BTreeMap<&'static str, TheoremReport>,
}

/// `2^(n(n-1)/2)`, the number of labeled graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Every labeled graph on `n` vertices in ascending edge-mask order,
/// optionally only the connected ones.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    if n > MAX_ORDER {
        return Err(VerifyError::OrderTooLarge(n));
    }
    if n < 2 {
        return Err(VerifyError::OrderTooSmall(n));
    }
    Ok((0..labeled_graph_count(n))
        .map(move |mask| Graph::from_edge_mask(n, mask).expect("mask below 2^pairs"))
        .filter(move |g| !connected_only || g.is_connected()))
}

/// One (graph, alpha) point, or one graph for the per-graph checks.
struct Case<'a> {
    g: &'a Graph,
    graph6: &'a str,
    alpha: Option<f64>,
    sp: Option<&'a Spectrum>,
    report: Option<&'a BoundReport>,
}

impl Case<'_> {
    fn shape(&self) -> ShapeClass {
        self.report.map_or(ShapeClass::None, |r| r.classification)
    }

    fn sp(&self) -> &Spectrum {
        self.sp.expect("per-alpha case carries a spectrum")
    }
}

struct Tally<'a> {
    report: TheoremReport,
    limit: Option<usize>,
    case: &'a Case<'a>,
}

fn measured<const N: usize>(values: [(&'static str, f64); N]) -> BTreeMap<&'static str, f64> {
    values.into_iter().map(|(k, v)| (k, round_sig(v))).collect()
}

impl Tally<'_> {
    fn violation(&mut self, kind: &'static str, values: BTreeMap<&'static str, f64>) {
        let v = Violation {
            graph6: self.case.graph6.to_string(),
            alpha: self.case.alpha,
            kind,
            measured: values,
        };
        push_capped(&mut self.report.violations, &mut self.report.violation_count, v, self.limit);
    }

    fn witness(&mut self, classification: &str, values: BTreeMap<&'static str, f64>) {
        let w = self.record(classification, values);
        push_capped(&mut self.report.equality_witnesses, &mut self.report.equality_witness_count, w, self.limit);
    }

    fn boundary(&mut self, classification: &str, values: BTreeMap<&'static str, f64>) {
        let w = self.record(classification, values);
        push_capped(&mut self.report.boundary_cases, &mut self.report.boundary_case_count, w, self.limit);
    }

    fn record(&self, classification: &str, values: BTreeMap<&'static str, f64>) -> Witness {
        Witness {
            graph6: self.case.graph6.to_string(),
            alpha: self.case.alpha,
            classification: classification.to_string(),
            measured: values,
        }
    }
}

/// What a bound claims about the graphs attaining it.
enum Equality {
    /// No characterization; ties are recorded for information only.
    Unclaimed,
    /// Ties must fall in `expected` (or the whitelisted `boundary`), and every
    /// `expected` case must tie.
    Family { expected: fn(&Case) -> bool, boundary: fn(&Case) -> bool },
}

fn never(_: &Case) -> bool {
    false
}

fn equality_claim(t: TheoremId) -> Equality {
    use Equality::Family;
    match t {
        // attaining sqrt(2y) needs exactly one positive and one negative eta
        TheoremId::LowerStrict => Family {
            expected: never,
            boundary: |c| {
                c.g.order() == 2 || matches!(c.shape(), ShapeClass::ThreeValueZeroCase | ShapeClass::BalancedBipartite)
            },
        },
        TheoremId::LowerTwoLevel => Family { expected: |c| c.shape().attains_two_level_bound(), boundary: never },
        TheoremId::LowerCor1 => Family { expected: |c| c.g.order() == 3 && c.g.is_complete(), boundary: never },
        TheoremId::LowerCor2 => Family { expected: never, boundary: never },
        TheoremId::LowerSnZero => Family { expected: |c| c.shape().attains_zero_deviation_bound(), boundary: never },
        TheoremId::LowerPiecewise => Family { expected: |c| c.g.is_balanced_complete_bipartite(), boundary: never },
        TheoremId::UpperMain | TheoremId::UpperRegular => {
            Family { expected: |c| c.g.is_perfect_matching(), boundary: |c| c.g.size() == 0 }
        }
        TheoremId::UpperZagreb => Family { expected: |c| c.g.order() == 2 && c.g.size() == 1, boundary: never },
        _ => Equality::Unclaimed,
    }
}

fn check_bound(t: TheoremId, tally: &mut Tally) {
    let case = tally.case;
    let report = case.report.expect("bound checks carry a report");
    let rec = report.get(t.bound_name().expect("bound theorem")).expect("every bound is reported");
    let Some(value) = rec.value else { return };
    tally.report.applicable_count += 1;
    let values = measured([("measured", rec.measured), ("bound", value)]);
    let shape = case.shape().name();

    match equality_claim(t) {
        Equality::Unclaimed => {
            if rec.violated() {
                tally.violation("bound_violated", values);
            } else if rec.tight {
                if case.shape() == ShapeClass::None {
                    tally.boundary(shape, values);
                } else {
                    tally.witness(shape, values);
                }
            }
        }
        Equality::Family { expected, boundary } => {
            let expected = expected(case);
            if rec.violated() {
                if rec.tight && boundary(case) {
                    tally.boundary(shape, values);
                } else {
                    tally.violation("bound_violated", values);
                }
            } else if rec.tight {
                if expected {
                    tally.witness(shape, values);
                } else if boundary(case) {
                    tally.boundary(shape, values);
                } else {
                    tally.violation("unexpected_equality", values);
                }
            } else if expected {
                tally.violation("missing_equality", values);
            }
        }
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= IDENTITY_TOL
}

fn check_case(t: TheoremId, tally: &mut Tally) -> Result<(), SpectraError> {
    let case = tally.case;
    let g = case.g;
    if t.bound_name().is_some() {
        check_bound(t, tally);
        return Ok(());
    }
    match t {
        TheoremId::MomentIdentities => {
            tally.report.applicable_count += 1;
            let sp = case.sp();
            let want = moment_sums(g, sp.alpha);
            let got = [
                sp.values.iter().sum::<f64>(),
                sp.values.iter().map(|p| p * p).sum(),
                sp.eta_square_sum(),
            ];
            let want = [want.trace, want.trace_of_square, want.eta_square];
            if got.iter().zip(&want).any(|(a, b)| !close(*a, *b)) {
                tally.violation(
                    "identity_violated",
                    measured([
                        ("sum_p", got[0]),
                        ("sum_p_squared", got[1]),
                        ("sum_eta_squared", got[2]),
                        ("expected_sum_p", want[0]),
                        ("expected_sum_p_squared", want[1]),
                        ("expected_sum_eta_squared", want[2]),
                    ]),
                );
            }
        }
        TheoremId::SpectralRadiusSandwich => {
            tally.report.applicable_count += 1;
            let p1 = case.sp().radius();
            let (lo, hi) = (g.min_degree() as f64, g.max_degree() as f64);
            let average = 2.0 * g.size() as f64 / g.order() as f64;
            let values = measured([("p1", p1), ("min_degree", lo), ("max_degree", hi)]);
            if p1 < lo - IDENTITY_TOL || p1 > hi + IDENTITY_TOL || p1 < average - IDENTITY_TOL {
                tally.violation("sandwich_violated", values);
            } else if g.is_connected() && (close(p1, hi) || close(p1, lo)) {
                if g.is_regular() {
                    tally.witness("Regular", values);
                } else {
                    tally.violation("unexpected_equality", values);
                }
            }
        }
        TheoremId::TwoDistinct => {
            tally.report.applicable_count += 1;
            let clusters = case.sp().distinct().len();
            let values = measured([("clusters", clusters as f64)]);
            match (clusters == 2, g.is_complete()) {
                (true, true) => tally.witness(ShapeClass::CompleteGraph.name(), values),
                (true, false) => tally.violation("false_positive", values),
                (false, true) => tally.violation("false_negative", values),
                (false, false) => {}
            }
        }
        TheoremId::RegularThreePattern => {
            if !g.is_regular() {
                return Ok(());
            }
            let sp = case.sp();
            let r = g.max_degree() as f64;
            let a = sp.alpha;
            let targets = [r, r * a + (1.0 - a), r * a - (1.0 - a)];
            let tol = sp.cluster_tol();
            let top_simple = sp.values.len() < 2 || sp.values[1] < r - tol;
            let fits = sp.values.iter().all(|p| targets.iter().any(|t| (p - t).abs() <= tol));
            if !(fits && top_simple) {
                return Ok(());
            }
            tally.report.applicable_count += 1;
            let values = measured([("r", r)]);
            if g.is_complete() {
                tally.witness(ShapeClass::CompleteGraph.name(), values);
            } else {
                tally.violation("non_complete_pattern", values);
            }
        }
        TheoremId::LargestSimple => {
            tally.report.applicable_count += 1;
            let top = case.sp().distinct()[0];
            if top.multiplicity != 1 {
                tally.violation("multiple_largest", measured([("p1", top.value), ("multiplicity", top.multiplicity as f64)]));
            }
        }
        TheoremId::PsdHalf => {
            let sp = case.sp();
            if sp.alpha < 0.5 {
                return Ok(());
            }
            tally.report.applicable_count += 1;
            if sp.smallest() < -IDENTITY_TOL {
                tally.violation("negative_eigenvalue", measured([("p_n", sp.smallest())]));
            }
        }
        TheoremId::OrderedSum => {
            tally.report.applicable_count += 1;
            if !matches!(ordered_sum_inequality(&case.sp().deviations), Ok(true)) {
                tally.violation("ordered_sum_failed", measured([("s_1", case.sp().s_max()), ("s_n", case.sp().s_min())]));
            }
        }
        TheoremId::EnergyMerging => {
            tally.report.applicable_count += 1;
            let n = g.order() as f64;
            let adjacency = eigen_symmetric(&adjacency_matrix(g))?.values;
            let adjacency_energy: f64 = adjacency.iter().map(|x| x.abs()).sum();
            let q = eigen_symmetric(&signless_laplacian(g))?.values;
            let half_qe = energy_of(&q, 2.0 * g.size() as f64 / n) / 2.0;
            let e0 = unchecked_spectrum(g, 0.0)?.energy;
            let e_half = unchecked_spectrum(g, 0.5)?.energy;
            if !close(e0, adjacency_energy) || !close(e_half, half_qe) {
                tally.violation(
                    "energy_mismatch",
                    measured([("e0", e0), ("adjacency_energy", adjacency_energy), ("e_half", e_half), ("half_qe", half_qe)]),
                );
            }
        }
        TheoremId::AlphaOneDegree => {
            tally.report.applicable_count += 1;
            let sp = unchecked_spectrum(g, 1.0)?;
            let mut degrees: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
            degrees.sort_by(|a, b| b.total_cmp(a));
            let worst = sp.values.iter().zip(&degrees).map(|(p, d)| (p - d).abs()).fold(0.0, f64::max);
            if worst > IDENTITY_TOL {
                tally.violation("degree_mismatch", measured([("max_deviation", worst)]));
            }
        }
        TheoremId::Zagreb => {
            let Ok(z) = zagreb_bounds(g) else { return Ok(()) };
            tally.report.applicable_count += 1;
            let m1 = g.zagreb() as f64;
            let values = measured([("m1", m1), ("lower", z.lower), ("upper_a", z.upper_a), ("upper_b", z.upper_b)]);
            if m1 < z.lower - EQ_TOL || m1 > z.upper_a.min(z.upper_b) + EQ_TOL {
                tally.violation("sandwich_violated", values);
                return Ok(());
            }
            let lower_tight = (m1 - z.lower).abs() <= EQ_TOL;
            let upper_tight = (m1 - z.upper_b).abs() <= EQ_TOL;
            match (lower_tight && upper_tight, g.is_regular()) {
                (true, true) => tally.witness("Regular", values),
                (true, false) => tally.violation("unexpected_equality", values),
                (false, true) => tally.violation("missing_equality", values),
                (false, false) if lower_tight || upper_tight => tally.boundary("NonRegular", values),
                (false, false) => {}
            }
        }
        _ => unreachable!("bound theorems are handled above"),
    }
    Ok(())
}

fn run_chunk(
    n: usize,
    masks: std::ops::Range<u64>,
    cfg: &SweepConfig,
    theorems: &[TheoremId],
) -> Result<(u64, Vec<TheoremReport>), VerifyError> {
    let mut reports = vec![TheoremReport::default(); theorems.len()];
    let needs_report = theorems.iter().any(|t| t.bound_name().is_some());
    let mut enumerated = 0;
    for mask in masks {
        let g = Graph::from_edge_mask(n, mask).expect("mask below 2^pairs");
        let connected = g.is_connected();
        if cfg.connected_only && !connected {
            continue;
        }
        enumerated += 1;
        let graph6 = write_graph6(&g).expect("small order");
        let in_scope = |t: &TheoremId| connected || !t.connected_only();

        let case = Case { g: &g, graph6: &graph6, alpha: None, sp: None, report: None };
        for (t, report) in theorems.iter().zip(reports.iter_mut()).filter(|(t, _)| t.per_graph() && in_scope(t)) {
            let mut tally = Tally { report: std::mem::take(report), limit: cfg.record_limit, case: &case };
            tally.report.graphs_tested += 1;
            let outcome = check_case(*t, &mut tally);
            *report = tally.report;
            outcome.map_err(|source| VerifyError::Solver { graph6: graph6.clone(), alpha: f64::NAN, source })?;
        }

        for &alpha in &cfg.alpha_grid {
            let solver = |source| VerifyError::Solver { graph6: graph6.clone(), alpha, source };
            let sp = unchecked_spectrum(&g, alpha).map_err(solver)?;
            let bound_report = if needs_report { Some(full_report_for(&g, &sp).map_err(solver)?) } else { None };
            let case = Case { g: &g, graph6: &graph6, alpha: Some(alpha), sp: Some(&sp), report: bound_report.as_ref() };
            for (t, report) in theorems.iter().zip(reports.iter_mut()).filter(|(t, _)| !t.per_graph() && in_scope(t)) {
                let mut tally = Tally { report: std::mem::take(report), limit: cfg.record_limit, case: &case };
                tally.report.graphs_tested += 1;
                let outcome = check_case(*t, &mut tally);
                *report = tally.report;
                outcome.map_err(solver)?;
            }
        }
    }
    Ok((enumerated, reports))
}

/// Runs every selected theorem over all graphs of order `2..=n_max`.
pub fn run_suite(cfg: &SweepConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    let theorems = cfg.selected();
    let sweep = || -> Result<(u64, Vec<TheoremReport>), VerifyError> {
        let mut total = 0;
        let mut merged = vec![TheoremReport::default(); theorems.len()];
        for n in 2..=cfg.n_max {
            let count = labeled_graph_count(n);
            let chunks: Vec<_> = (0..count.div_ceil(CHUNK))
                .into_par_iter()
                .map(|i| run_chunk(n, i * CHUNK..((i + 1) * CHUNK).min(count), cfg, &theorems))
                .collect();
            for chunk in chunks {
                let (enumerated, reports) = chunk?;
                total += enumerated;
                for (into, from) in merged.iter_mut().zip(reports) {
                    into.merge(from, cfg.record_limit);
                }
            }
        }
        Ok((total, merged))
    };

    let (graphs_enumerated, reports) = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| VerifyError::Pool(e.to_string()))?
            .install(sweep)?,
        None => sweep()?,
    };

    let mut total_violations = 0;
    let theorems: BTreeMap<_, _> = theorems
        .iter()
        .zip(reports)
        .map(|(t, mut r)| {
            r.passed = r.violation_count == 0;
            total_violations += r.violation_count;
            (t.name(), r)
        })
        .collect();
    Ok(VerificationReport {
        n_max: cfg.n_max,
        alpha_grid: cfg.alpha_grid.clone(),
        connected_only: cfg.connected_only,
        graphs_enumerated,
        total_violations,
        passed: total_violations == 0,
        theorems,
    })
}

/// Every case attaining the given theorem's bound or characterization,
/// tagged with its equality shape.
pub fn find_equality_witnesses(theorem: TheoremId, cfg: &SweepConfig) -> Result<Vec<Witness>, VerifyError> {
    let cfg = SweepConfig { theorems: vec![theorem], record_limit: None, ..cfg.clone() };
    let mut report = run_suite(&cfg)?;
    Ok(report.theorems.remove(theorem.name()).map(|r| r.equality_witnesses).unwrap_or_default())
}
