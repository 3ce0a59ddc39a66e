//! Command-line front end. [`run`] parses arguments and writes output to the
//! given streams so the whole interface can be driven from tests.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::bounds::full_report_for;
use crate::closed_forms::{srg_alpha_spectrum, SrgError, SrgParams};
use crate::graph::{read_graph6_lines, write_graph6, Graph, GraphFamily};
use crate::round_sig;
use crate::spectra::{spectrum, Cluster, Spectrum};
use crate::verify::{run_suite, SweepConfig, TheoremId, VerificationReport, DEFAULT_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SRG_INFEASIBLE: i32 = 3;
pub const EXIT_SRG_DEGENERATE: i32 = 4;
pub const EXIT_SRG_NON_INTEGRAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "alphaspec", version, about = "A-alpha spectra, energies and energy bounds of simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues, deviations and energy per graph and alpha.
    Spectrum(GraphArgs),
    /// Closed-form spectrum of a strongly regular graph.
    Srg(SrgArgs),
    /// Every energy bound per graph and alpha.
    Bounds(GraphArgs),
    /// Exhaustive theorem checks over all small labeled graphs.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["gen", "input"]))]
struct GraphArgs {
    /// Generator spec: complete:n, bipartite:a:b, cycle:n, path:n, matching:k, petersen, empty:n
    #[arg(long)]
    gen: Option<GraphFamily>,
    /// graph6 file, one graph per line
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Comma-separated alpha values in [0, 1]
    #[arg(long, value_delimiter = ',', default_value = "0")]
    alpha: Vec<f64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct SrgArgs {
    n: u64,
    r: u64,
    a: u64,
    c: u64,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    alpha: Vec<f64>,
    /// Compare against the numeric spectrum of a constructible graph with these parameters
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    n_max: usize,
    /// Comma-separated alpha grid; defaults to 0, 0.1, ..., 0.9
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<f64>>,
    /// Comma-separated theorem ids; defaults to all
    #[arg(long, value_delimiter = ',')]
    theorems: Option<Vec<String>>,
    #[arg(long)]
    connected_only: bool,
    #[arg(long)]
    jobs: Option<usize>,
    /// Records kept per theorem and list; 0 keeps all
    #[arg(long, default_value_t = crate::verify::RECORD_LIMIT)]
    record_limit: usize,
    /// JSON report, or CSV of the violations
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// A failure that maps to an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Spectrum(a) => cmd_spectrum(&a, out),
        Command::Srg(a) => cmd_srg(&a, out, err),
        Command::Bounds(a) => cmd_bounds(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load_graphs(args: &GraphArgs) -> Result<Vec<(String, Graph)>, Failure> {
    if let Some(family) = args.gen {
        let g = family.generate().map_err(|e| Failure::usage(e.to_string()))?;
        return Ok(vec![(family.to_string(), g)]);
    }
    let path = args.input.as_ref().expect("clap enforces one source");
    let file = File::open(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let graphs = read_graph6_lines(BufReader::new(file))
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(graphs
        .into_iter()
        .map(|g| (write_graph6(&g).expect("parsed graphs re-encode"), g))
        .collect())
}

fn check_alphas(alphas: &[f64]) -> Result<(), Failure> {
    match alphas.iter().find(|a| !(0.0..=1.0).contains(*a)) {
        Some(a) => Err(Failure::usage(format!("alpha {a} is outside [0, 1]"))),
        None => Ok(()),
    }
}

/// Serializes with every float rounded to 12 significant digits.
fn rounded_json<T: Serialize>(value: &T) -> Value {
    let mut v = serde_json::to_value(value).expect("records serialize");
    round_value(&mut v);
    v
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64().map(round_sig).and_then(serde_json::Number::from_f64) {
                *n = x;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

fn num(x: f64) -> String {
    round_sig(x).to_string()
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn write_json(out: &mut dyn Write, doc: Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(&doc).expect("values serialize");
    writeln!(out, "{text}").map_err(|e| Failure::usage(e.to_string()))
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: Vec<Vec<String>>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Failure::usage(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    w.flush().map_err(|e| Failure::usage(e.to_string()))
}

fn join(values: &[f64]) -> String {
    values.iter().map(|&v| num(v)).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct SpectrumRecord<'a> {
    source: &'a str,
    graph6: String,
    alpha: f64,
    order: usize,
    size: usize,
    eigenvalues: &'a [f64],
    mean_shift: f64,
    eta: &'a [f64],
    deviations: &'a [f64],
    energy: f64,
    clusters: Vec<Cluster>,
}

fn computed(graphs: &[(String, Graph)], alphas: &[f64]) -> Result<Vec<(usize, Spectrum)>, Failure> {
    let mut out = Vec::new();
    for (i, (source, g)) in graphs.iter().enumerate() {
        for &alpha in alphas {
            let sp = spectrum(g, alpha).map_err(|e| Failure {
                code: EXIT_VIOLATIONS,
                message: format!("{source} at alpha {alpha}: {e}"),
            })?;
            out.push((i, sp));
        }
    }
    Ok(out)
}

fn cmd_spectrum(args: &GraphArgs, out: &mut dyn Write) -> CmdResult {
    check_alphas(&args.alpha)?;
    let graphs = load_graphs(args)?;
    let spectra = computed(&graphs, &args.alpha)?;
    let records: Vec<SpectrumRecord> = spectra
        .iter()
        .map(|(i, sp)| {
            let (source, g) = &graphs[*i];
            SpectrumRecord {
                source,
                graph6: write_graph6(g).expect("small graphs encode"),
                alpha: sp.alpha,
                order: sp.order,
                size: sp.size,
                eigenvalues: &sp.values,
                mean_shift: sp.mean_shift,
                eta: &sp.eta,
                deviations: &sp.deviations,
                energy: sp.energy,
                clusters: sp.distinct(),
            }
        })
        .collect();
    match args.format {
        Format::Json => write_json(out, rounded_json(&serde_json::json!({ "command": "spectrum", "records": records })))?,
        Format::Csv => {
            let rows = records
                .iter()
                .map(|r| {
                    let clusters = r
                        .clusters
                        .iter()
                        .map(|c| format!("{}^{}", num(c.value), c.multiplicity))
                        .collect::<Vec<_>>()
                        .join(" ");
                    vec![
                        r.source.to_string(),
                        r.graph6.clone(),
                        num(r.alpha),
                        r.order.to_string(),
                        r.size.to_string(),
                        num(r.energy),
                        num(r.mean_shift),
                        join(r.eigenvalues),
                        clusters,
                    ]
                })
                .collect();
            write_csv(
                out,
                &["source", "graph6", "alpha", "order", "size", "energy", "mean_shift", "eigenvalues", "clusters"],
                rows,
            )?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bounds(args: &GraphArgs, out: &mut dyn Write) -> CmdResult {
    check_alphas(&args.alpha)?;
    let graphs = load_graphs(args)?;
    let mut reports = Vec::new();
    for (i, sp) in computed(&graphs, &args.alpha)? {
        let (source, g) = &graphs[i];
        let report = full_report_for(g, &sp).map_err(|e| Failure::usage(format!("{source}: {e}")))?;
        reports.push((source.as_str(), report));
    }
    match args.format {
        Format::Json => {
            let records: Vec<Value> = reports
                .iter()
                .map(|(source, r)| {
                    let mut v = rounded_json(r);
                    v["source"] = Value::from(*source);
                    v
                })
                .collect();
            write_json(out, serde_json::json!({ "command": "bounds", "records": records }))?
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (source, r) in &reports {
                for b in &r.bounds {
                    rows.push(vec![
                        source.to_string(),
                        r.graph6.clone(),
                        num(r.alpha),
                        b.name.to_string(),
                        serde_json::to_value(b.kind).unwrap().as_str().unwrap_or_default().to_string(),
                        b.applicable.to_string(),
                        opt_num(b.value),
                        num(b.measured),
                        b.satisfied.map(|s| s.to_string()).unwrap_or_default(),
                        opt_num(b.slack),
                        b.equality.to_string(),
                        r.classification.name().to_string(),
                    ]);
                }
            }
            write_csv(
                out,
                &[
                    "source",
                    "graph6",
                    "alpha",
                    "bound",
                    "kind",
                    "applicable",
                    "value",
                    "measured",
                    "satisfied",
                    "slack",
                    "equality",
                    "classification",
                ],
                rows,
            )?
        }
    }
    Ok(EXIT_OK)
}

/// Graphs with known parameters that `--check` can build.
fn constructible(p: SrgParams) -> Option<GraphFamily> {
    match (p.n, p.r, p.a, p.c) {
        (5, 2, 0, 1) => Some(GraphFamily::Cycle(5)),
        (10, 3, 0, 1) => Some(GraphFamily::Petersen),
        (n, r, 0, c) if n % 2 == 0 && r == n / 2 && c == r => Some(GraphFamily::CompleteBipartite(n as usize / 2, n as usize / 2)),
        _ => None,
    }
}

#[derive(Serialize)]
struct SrgRecord {
    n: u64,
    r: u64,
    a: u64,
    c: u64,
    alpha: f64,
    eigenvalues: Vec<(f64, usize)>,
    discriminant: f64,
    check_deviation: Option<f64>,
}

fn srg_failure(e: SrgError) -> Failure {
    let code = match e {
        SrgError::Infeasible { .. } => EXIT_SRG_INFEASIBLE,
        SrgError::AlphaOutOfRange(_) => EXIT_USAGE,
        SrgError::DegenerateDiscriminant(_) => EXIT_SRG_DEGENERATE,
        SrgError::NonIntegralMultiplicity { .. } => EXIT_SRG_NON_INTEGRAL,
    };
    Failure { code, message: e.to_string() }
}

fn cmd_srg(args: &SrgArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let p = SrgParams::new(args.n, args.r, args.a, args.c).map_err(srg_failure)?;
    let graph = match (args.check, constructible(p)) {
        (true, Some(f)) => Some(f.generate().expect("fixture families generate")),
        (true, None) => {
            let _ = writeln!(err, "warning: no constructible graph with these parameters; skipping --check");
            None
        }
        (false, _) => None,
    };
    let mut records = Vec::new();
    for &alpha in &args.alpha {
        let s = srg_alpha_spectrum(p, alpha).map_err(srg_failure)?;
        let check_deviation = match &graph {
            Some(g) => {
                let numeric = spectrum(g, alpha).map_err(|e| Failure::usage(e.to_string()))?;
                let closed = crate::closed_forms::expand(&s.as_multiset());
                Some(numeric.values.iter().zip(&closed).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            }
            None => None,
        };
        records.push(SrgRecord {
            n: p.n,
            r: p.r,
            a: p.a,
            c: p.c,
            alpha,
            eigenvalues: s.as_multiset(),
            discriminant: s.discriminant,
            check_deviation,
        });
    }
    match args.format {
        Format::Json => write_json(out, rounded_json(&serde_json::json!({ "command": "srg", "records": records })))?,
        Format::Csv => {
            let rows = records
                .iter()
                .flat_map(|r| {
                    r.eigenvalues.iter().map(move |&(value, mult)| {
                        vec![
                            r.n.to_string(),
                            r.r.to_string(),
                            r.a.to_string(),
                            r.c.to_string(),
                            num(r.alpha),
                            num(value),
                            mult.to_string(),
                            opt_num(r.check_deviation),
                        ]
                    })
                })
                .collect();
            write_csv(out, &["n", "r", "a", "c", "alpha", "eigenvalue", "multiplicity", "check_deviation"], rows)?
        }
    }
    let failed = records.iter().any(|r| r.check_deviation.is_some_and(|d| d > 1e-8));
    Ok(if failed { EXIT_VIOLATIONS } else { EXIT_OK })
}

fn summary(report: &VerificationReport, err: &mut dyn Write) {
    let _ = writeln!(
        err,
        "{:<26} {:>9} {:>10} {:>10} {:>10} {:>9}  status",
        "theorem", "tested", "applicable", "violations", "witnesses", "boundary"
    );
    for (name, r) in &report.theorems {
        let _ = writeln!(
            err,
            "{:<26} {:>9} {:>10} {:>10} {:>10} {:>9}  {}",
            name,
            r.graphs_tested,
            r.applicable_count,
            r.violation_count,
            r.equality_witness_count,
            r.boundary_case_count,
            if r.passed { "pass" } else { "FAIL" }
        );
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let theorems = args
        .theorems
        .iter()
        .flatten()
        .map(|s| s.parse::<TheoremId>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let cfg = SweepConfig {
        n_max: args.n_max,
        alpha_grid: args.alpha.clone().unwrap_or_else(crate::verify::default_alpha_grid),
        connected_only: args.connected_only,
        theorems,
        jobs: args.jobs,
        record_limit: (args.record_limit > 0).then_some(args.record_limit),
    };
    if args.jobs == Some(0) {
        return Err(Failure::usage("--jobs must be positive"));
    }
    let report = run_suite(&cfg).map_err(|e| match e {
        crate::verify::VerifyError::Solver { .. } => Failure { code: EXIT_VIOLATIONS, message: e.to_string() },
        _ => Failure::usage(e.to_string()),
    })?;
    summary(&report, err);
    match args.format {
        Format::Json => write_json(out, rounded_json(&report))?,
        Format::Csv => {
            let rows = report
                .theorems
                .iter()
                .flat_map(|(name, r)| {
                    r.violations.iter().map(move |v| {
                        let measured =
                            v.measured.iter().map(|(k, x)| format!("{k}={}", num(*x))).collect::<Vec<_>>().join(" ");
                        vec![name.to_string(), v.graph6.clone(), opt_num(v.alpha), v.kind.to_string(), measured]
                    })
                })
                .collect();
            write_csv(out, &["theorem", "graph6", "alpha", "kind", "measured"], rows)?
        }
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_VIOLATIONS })
}
