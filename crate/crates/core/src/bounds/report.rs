use serde::Serialize;

use crate::graph::{write_graph6, Graph};
use crate::spectra::{build_alpha_matrix, spectrum, SpectraError, Spectrum};

use super::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    /// Lower bound the quantity must exceed by more than [`STRICT_MARGIN`].
    StrictLower,
    Upper,
}

/// One bound evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: Option<f64>,
    /// The bounded quantity: the energy, except for the Zagreb records (`M1`)
    /// and `trace_radius` (`p_1`).
    pub measured: f64,
    pub applicable: bool,
    pub reason: Option<String>,
    pub satisfied: Option<bool>,
    /// `measured - value`.
    pub slack: Option<f64>,
    /// `|slack| <= EQ_TOL`.
    pub tight: bool,
    /// Tight, and the spectrum has one of the named equality shapes.
    pub equality: bool,
}

impl BoundRecord {
    fn new(name: &'static str, kind: BoundKind, measured: f64, value: Result<f64, BoundError>, confirmed: bool) -> Self {
        match value {
            Ok(value) => {
                let slack = measured - value;
                let satisfied = match kind {
                    BoundKind::Lower => slack >= -EQ_TOL,
                    BoundKind::StrictLower => slack > STRICT_MARGIN,
                    BoundKind::Upper => slack <= EQ_TOL,
                };
                let tight = slack.abs() <= EQ_TOL;
                Self {
                    name,
                    kind,
                    value: Some(value),
                    measured,
                    applicable: true,
                    reason: None,
                    satisfied: Some(satisfied),
                    slack: Some(slack),
                    tight,
                    equality: tight && confirmed,
                }
            }
            Err(e) => Self {
                name,
                kind,
                value: None,
                measured,
                applicable: false,
                reason: Some(e.to_string()),
                satisfied: None,
                slack: None,
                tight: false,
                equality: false,
            },
        }
    }

    /// Applicable and not satisfied.
    pub fn violated(&self) -> bool {
        self.satisfied == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub alpha: f64,
    pub y: f64,
    pub c: f64,
    pub energy: f64,
    pub classification: ShapeClass,
    pub bounds: Vec<BoundRecord>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundRecord> {
        self.bounds.iter().find(|b| b.name == name)
    }
}

fn conditional(b: Result<ConditionalBound, BoundError>, premise: &'static str) -> Result<f64, BoundError> {
    let b = b?;
    if b.applicable {
        Ok(b.bound)
    } else {
        Err(Inapplicable(premise))
    }
}

/// Computes the spectrum and evaluates every bound.
pub fn full_report(g: &Graph, alpha: f64) -> Result<BoundReport, SpectraError> {
    let sp = spectrum(g, alpha)?;
    full_report_for(g, &sp)
}

/// Evaluates every bound against an already computed spectrum.
pub fn full_report_for(g: &Graph, sp: &Spectrum) -> Result<BoundReport, SpectraError> {
    use BoundKind::*;
    let alpha = sp.alpha;
    let energy = sp.energy;
    let shape = classify_equality_shape(sp, g);
    let named = shape.classification != ShapeClass::None;
    let record = |name, kind, value| BoundRecord::new(name, kind, energy, value, named);

    let piecewise = lower_bound_piecewise(g, sp);
    let piecewise_kind = match &piecewise {
        Ok(p) if !p.regular_branch => StrictLower,
        _ => Lower,
    };

    let mut bounds = vec![
        record("lower_bound_strict", StrictLower, lower_bound_strict(g, sp)),
        record("lower_bound_two_level", Lower, lower_bound_two_level(g, sp)),
        record(
            "lower_bound_threshold_cor1",
            Lower,
            conditional(lower_bound_threshold_cor1(g, sp), "s_n below sqrt(c) / (2n)"),
        ),
        record(
            "lower_bound_threshold_cor2",
            StrictLower,
            conditional(lower_bound_threshold_cor2(g, sp), "s_n below sqrt(c) / n^3"),
        ),
        record("lower_bound_sn_zero", Lower, conditional(lower_bound_sn_zero(g, sp), "s_n is not zero")),
        record("lower_bound_piecewise", piecewise_kind, piecewise.map(|p| p.bound)),
        record("lower_bound_regular", Lower, lower_bound_regular(g, sp)),
        record("upper_bound_main", Upper, upper_bound_main(g, sp)),
        record("upper_bound_zagreb", Upper, upper_bound_zagreb(g, sp)),
        record("upper_bound_regular", Upper, upper_bound_regular(g, sp)),
    ];

    let m1 = g.zagreb() as f64;
    let zagreb = zagreb_bounds(g);
    bounds.push(BoundRecord::new("zagreb_lower", Lower, m1, zagreb.clone().map(|z| z.lower), true));
    bounds.push(BoundRecord::new("zagreb_upper_a", Upper, m1, zagreb.clone().map(|z| z.upper_a), true));
    bounds.push(BoundRecord::new("zagreb_upper_b", Upper, m1, zagreb.map(|z| z.upper_b), true));
    let trace = build_alpha_matrix(g, alpha)?;
    bounds.push(BoundRecord::new("trace_radius", Upper, sp.radius(), trace_radius_bound(&trace), true));

    Ok(BoundReport {
        graph6: write_graph6(g).unwrap_or_default(),
        order: g.order(),
        size: g.size(),
        alpha,
        y: moment_y(g, alpha),
        c: c_threshold(g, alpha),
        energy,
        classification: shape.classification,
        bounds,
    })
}
