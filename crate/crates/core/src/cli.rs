//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 index-domain error, 4 ordering mismatch. Numbers are emitted with 12
//! significant digits; `--bits` rescales entropic quantities by `1/ln 2` for
//! display only.

use std::fmt::Write as _;
use std::fs::File;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::experiments::{
    perturbation_study, reproduce_ordering, ExperimentError, Metric, MetricValues, OrderingResult,
    PerturbationRecord,
};
use crate::graph::io::{read_graph, GraphFormat, ParseError};
use crate::graph::{CatalogId, Graph};
use crate::indices::{
    centralization_report, CentralizationReport, Crossing, IndexError, ReportConfig,
    DEFAULT_K_GRID, DEFAULT_P_GRID,
};
use crate::verify::{run_verification, VerificationSummary, VerifyConfig};

pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "qtheil",
    version,
    about = "Spectral and degree-based centralization indices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every index for one graph.
    Report(ReportArgs),
    /// Rank the catalog by one metric and compare with the published order.
    Order(OrderArgs),
    /// Remove each vertex in turn and recompute the metrics.
    Perturb(PerturbArgs),
    /// Run the randomized invariant battery.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// A built-in seven-vertex graph.
    #[arg(long)]
    pub catalog: Option<CatalogId>,
    /// A graph file: `.json` is read as JSON, anything else as an edge list.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DisplayArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Md)]
    pub format: OutputFormat,
    /// Show entropic quantities in bits instead of nats.
    #[arg(long)]
    pub bits: bool,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Override the file format detected from the extension.
    #[arg(long, value_name = "edgelist|json")]
    pub input_format: Option<GraphFormat>,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_K_GRID)]
    pub k_grid: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_P_GRID)]
    pub p_grid: Vec<f64>,
    #[command(flatten)]
    pub display: DisplayArgs,
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    #[arg(long)]
    pub by: Metric,
    #[command(flatten)]
    pub display: DisplayArgs,
}

#[derive(Debug, Args)]
pub struct PerturbArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_name = "edgelist|json")]
    pub input_format: Option<GraphFormat>,
    #[command(flatten)]
    pub display: DisplayArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(3..=64))]
    pub n_max: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Md)]
    pub format: OutputFormat,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Experiment(#[from] ExperimentError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Index(_) | CliError::Experiment(_) => 3,
        }
    }
}

/// What one invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Report(args) => cmd_report(args),
        Command::Order(args) => cmd_order(args),
        Command::Perturb(args) => cmd_perturb(args),
        Command::Verify(args) => Ok(cmd_verify(args)),
    }
}

fn load(input: &InputArgs, format: Option<GraphFormat>) -> Result<(String, Graph), CliError> {
    if let Some(id) = input.catalog {
        return Ok((id.name().to_string(), id.graph()));
    }
    let path = input.file.clone().expect("clap enforces one input");
    let file = File::open(&path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let format = format.unwrap_or_else(|| GraphFormat::from_path(&path));
    let graph = read_graph(file, format).map_err(|source| CliError::Parse {
        path: path.clone(),
        source,
    })?;
    Ok((path.display().to_string(), graph))
}

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn format_num(x: f64) -> String {
    format!("{}", round_sig(x))
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_num).unwrap_or_default()
}

/// Serializes and rounds every non-integer number.
fn to_rounded_json<T: Serialize>(value: &T) -> String {
    fn walk(v: &mut Value) {
        match v {
            Value::Number(num) if num.is_f64() => {
                let x = round_sig(num.as_f64().expect("f64 number"));
                *v = serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number);
            }
            Value::Array(items) => items.iter_mut().for_each(walk),
            Value::Object(map) => map.values_mut().for_each(walk),
            _ => {}
        }
    }
    let mut v = serde_json::to_value(value).expect("report types serialize");
    walk(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

fn entropic_scale(bits: bool) -> f64 {
    if bits {
        std::f64::consts::LN_2.recip()
    } else {
        1.0
    }
}

fn unit(bits: bool) -> &'static str {
    if bits {
        "bits"
    } else {
        "nats"
    }
}

fn scale_report(r: &CentralizationReport, s: f64) -> CentralizationReport {
    let mut r = r.clone();
    r.degree_theil.iter_mut().for_each(|kv| kv.value *= s);
    r.generalized_theil.iter_mut().for_each(|pv| pv.value *= s);
    r.t_q *= s;
    r.neg_log_jain *= s;
    if let Some(v) = r.verdict.as_mut() {
        v.threshold *= s;
        v.t_q *= s;
    }
    r
}

/// `(quantity, parameter, value)` rows shared by the CSV and Markdown views.
fn report_rows(r: &CentralizationReport) -> Vec<(String, String, String)> {
    let row = |q: &str, p: String, v: String| (q.to_string(), p, v);
    let mut rows = vec![
        row("n", String::new(), r.n.to_string()),
        row("m", String::new(), r.m.to_string()),
        row("connected", String::new(), r.connected.to_string()),
    ];
    for kv in &r.degree_theil {
        rows.push(row("t_d", format_num(kv.k), format_num(kv.value)));
    }
    rows.push(row("t_q", String::new(), format_num(r.t_q)));
    for pv in &r.generalized_theil {
        rows.push(row("t_q_renyi", format_num(pv.p), format_num(pv.value)));
    }
    rows.push(row("c_d", String::new(), format_opt(r.c_d)));
    rows.push(row("c_b", String::new(), format_opt(r.c_b)));
    rows.push(row("jain", String::new(), format_num(r.jain)));
    rows.push(row(
        "neg_log_jain",
        String::new(),
        format_num(r.neg_log_jain),
    ));
    if let Some(v) = &r.verdict {
        rows.push(row("case", String::new(), v.case.name().to_string()));
        rows.push(row("threshold", String::new(), format_num(v.threshold)));
        rows.push(row(
            "max_degree_multiplicity",
            String::new(),
            v.max_degree_multiplicity.to_string(),
        ));
        rows.push(row(
            "sufficient_condition",
            String::new(),
            v.sufficient_condition_holds.to_string(),
        ));
        let crossing = match v.crossing_k {
            None => String::new(),
            Some(Crossing::At(k)) => format_num(k),
            Some(Crossing::Asymptotic) => "asymptotic".to_string(),
            Some(Crossing::AtKEqualsOne) => "at_k_equals_one".to_string(),
        };
        rows.push(row("crossing_k", String::new(), crossing));
    }
    rows
}

fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for r in rows {
        let _ = writeln!(out, "| {} |", r.join(" | "));
    }
    out
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

fn cmd_report(args: &ReportArgs) -> Result<Outcome, CliError> {
    let (label, g) = load(&args.input, args.input_format)?;
    let config = ReportConfig {
        k_grid: args.k_grid.clone(),
        p_grid: args.p_grid.clone(),
    };
    let report = centralization_report(&label, &g, &config)?;
    let shown = scale_report(&report, entropic_scale(args.display.bits));
    let rows: Vec<Vec<String>> = report_rows(&shown)
        .into_iter()
        .map(|(q, p, v)| vec![shown.label.clone(), q, p, v])
        .collect();
    let header = ["graph", "quantity", "parameter", "value"];
    let stdout = match args.display.format {
        OutputFormat::Json => to_rounded_json(&shown),
        OutputFormat::Csv => csv_table(&header, &rows),
        OutputFormat::Md => format!(
            "{}\nEntropic values in {}. Fingerprint {}.\n",
            markdown_table(&header, &rows),
            unit(args.display.bits),
            shown.fingerprint
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn is_entropic(metric: Metric) -> bool {
    matches!(metric, Metric::Td1 | Metric::Tq)
}

fn cmd_order(args: &OrderArgs) -> Result<Outcome, CliError> {
    let mut result: OrderingResult = reproduce_ordering(args.by)?;
    if is_entropic(args.by) {
        let s = entropic_scale(args.display.bits);
        result.ranked.iter_mut().for_each(|r| r.value *= s);
        for v in &mut result.violations {
            v.earlier.value *= s;
            v.later.value *= s;
        }
    }
    let rows: Vec<Vec<String>> = result
        .ranked
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let published = result
                .published_order
                .iter()
                .position(|&id| id == r.graph)
                .expect("catalog member");
            vec![
                (i + 1).to_string(),
                r.graph.to_string(),
                format_num(r.value),
                (published + 1).to_string(),
            ]
        })
        .collect();
    let header = ["rank", "graph", args.by.name(), "published_rank"];
    let verdict = if result.matches { "MATCH" } else { "MISMATCH" };
    let mut notes = String::new();
    for v in &result.violations {
        let _ = writeln!(notes, "violation at {v}");
    }
    let (stdout, stderr) = match args.display.format {
        OutputFormat::Json => (to_rounded_json(&result), format!("{verdict}\n{notes}")),
        OutputFormat::Csv => (csv_table(&header, &rows), format!("{verdict}\n{notes}")),
        OutputFormat::Md => (
            format!("{}\n{verdict}\n{notes}", markdown_table(&header, &rows)),
            String::new(),
        ),
    };
    Ok(Outcome {
        stdout,
        stderr,
        code: if result.matches { 0 } else { 4 },
    })
}

fn scale_values(v: &mut MetricValues, s: f64) {
    v.t_d1 = v.t_d1.map(|x| x * s);
    v.t_q = v.t_q.map(|x| x * s);
}

fn cmd_perturb(args: &PerturbArgs) -> Result<Outcome, CliError> {
    let (label, g) = load(&args.input, args.input_format)?;
    let mut records: Vec<PerturbationRecord> = perturbation_study(&label, &g)?;
    let s = entropic_scale(args.display.bits);
    for r in &mut records {
        scale_values(&mut r.before, s);
        scale_values(&mut r.after, s);
        scale_values(&mut r.delta, s);
    }
    let mut header = vec!["removed_vertex".to_string(), "disconnected".to_string()];
    for m in Metric::ALL {
        for stage in ["before", "after", "delta"] {
            header.push(format!("{}_{stage}", m.name()));
        }
    }
    let pick = |v: &MetricValues, m: Metric| match m {
        Metric::Cd => v.c_d,
        Metric::Cb => v.c_b,
        Metric::Td1 => v.t_d1,
        Metric::Tq => v.t_q,
    };
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let mut row = vec![r.removed_vertex.to_string(), r.disconnected.to_string()];
            for m in Metric::ALL {
                for v in [&r.before, &r.after, &r.delta] {
                    row.push(format_opt(pick(v, m)));
                }
            }
            row
        })
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let stdout = match args.display.format {
        OutputFormat::Json => to_rounded_json(&records),
        OutputFormat::Csv => csv_table(&header, &rows),
        OutputFormat::Md => format!(
            "{}\nBase graph {label}; entropic values in {}.\n",
            markdown_table(&header, &rows),
            unit(args.display.bits)
        ),
    };
    Ok(Outcome::ok(stdout))
}

fn render_summary(summary: &VerificationSummary, format: OutputFormat) -> String {
    let header = ["suite", "checked", "failed", "status"];
    let rows: Vec<Vec<String>> = summary
        .suites
        .iter()
        .map(|s| {
            vec![
                s.name.to_string(),
                s.checked.to_string(),
                s.failed.to_string(),
                if s.passed() { "pass" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    match format {
        OutputFormat::Json => to_rounded_json(summary),
        OutputFormat::Csv => csv_table(&header, &rows),
        OutputFormat::Md => {
            let mut out = markdown_table(&header, &rows);
            for s in summary.suites.iter().filter(|s| !s.passed()) {
                if let Some(f) = &s.first_failure {
                    let _ = writeln!(out, "\nfirst failure in {}: {f}", s.name);
                }
            }
            out
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let summary = run_verification(&VerifyConfig {
        trials: args.trials as usize,
        seed: args.seed,
        n_max: args.n_max as usize,
        inject_fault: args.inject_fault,
    });
    let passed = summary.all_passed();
    Outcome {
        stdout: render_summary(&summary, args.format),
        stderr: if passed {
            String::new()
        } else {
            "verification failed\n".to_string()
        },
        code: if passed { 0 } else { 1 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Outcome, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("qtheil").chain(args.iter().copied()))
            .expect("arguments parse");
        execute(&cli)
    }

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(format_num(std::f64::consts::PI), "3.14159265359");
        assert_eq!(format_num(1.0), "1");
        assert_eq!(format_num(-0.0), "0");
        assert_eq!(round_sig(0.1 + 0.2), 0.3);
    }

    #[test]
    fn report_formats_agree() {
        let json = run(&["report", "--catalog", "star", "--format", "json"]).unwrap();
        let csv = run(&["report", "--catalog", "star", "--format", "csv"]).unwrap();
        let v: Value = serde_json::from_str(&json.stdout).unwrap();
        let t_q = v["t_q"].as_f64().unwrap();
        assert!((t_q - 0.59612).abs() < 1e-5);
        assert!(csv
            .stdout
            .contains(&format!("star,t_q,,{}\n", format_num(t_q))));
    }

    #[test]
    fn bits_rescale_display_only() {
        let nats = run(&["report", "--catalog", "wheel", "--format", "json"]).unwrap();
        let bits = run(&["report", "--catalog", "wheel", "--format", "json", "--bits"]).unwrap();
        let a: Value = serde_json::from_str(&nats.stdout).unwrap();
        let b: Value = serde_json::from_str(&bits.stdout).unwrap();
        let ratio = b["t_q"].as_f64().unwrap() / a["t_q"].as_f64().unwrap();
        assert!((ratio - 1.0 / std::f64::consts::LN_2).abs() < 1e-10);
        assert_eq!(a["c_d"], b["c_d"]);
        assert_eq!(a["verdict"]["case"], b["verdict"]["case"]);
    }

    #[test]
    fn missing_file_is_exit_two() {
        let err = run(&["report", "--file", "/nonexistent/missing.txt"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn invalid_renyi_order_is_domain_error() {
        let err = run(&["report", "--catalog", "star", "--p-grid", "1"]).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn perturb_circle_degree_centralization() {
        let out = run(&["perturb", "--catalog", "circle", "--format", "json"]).unwrap();
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 7);
        for r in rows {
            assert_eq!(r["before"]["c_d"].as_f64(), Some(0.0));
            assert_eq!(r["after"]["c_d"].as_f64(), Some(0.1));
        }
    }

    #[test]
    fn clap_rejects_conflicting_inputs() {
        assert!(Cli::try_parse_from(["qtheil", "report"]).is_err());
        assert!(
            Cli::try_parse_from(["qtheil", "report", "--catalog", "star", "--file", "x"]).is_err()
        );
        assert!(Cli::try_parse_from(["qtheil", "verify", "--trials", "0"]).is_err());
    }
}
