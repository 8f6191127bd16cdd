//! Command-line front end.
//!
//! Exit codes: 0 success (certified or degenerate for `certify`), 1 refuted,
//! 2 usage error, 3 inconclusive.

use std::ffi::OsString;
use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{certify_univalence, Method, UnivalenceReport, Verdict};
use crate::families::FamilySpec;
use crate::radii::{comparison_table, ComparisonRow};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

pub const MIN_TRACE_SAMPLES: usize = 16;
pub const MAX_SWEEP_DEGREE: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "univalent", version, about = "Extremal univalent polynomials: coefficients, boundary traces, certificates and Koebe radii")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Circle samples for minimum-modulus searches.
    #[arg(long, default_value_t = 4096, global = true, value_parser = clap::value_parser!(u64).range(64..))]
    pub grid: u64,
    /// Maximum interval-bisection depth.
    #[arg(long, default_value_t = 40, global = true, value_parser = clap::value_parser!(u32).range(1..=60))]
    pub max_depth: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients a_0..a_n.
    Coeffs(FamilyArgs),
    /// Sample the boundary curve p(e^{it}) for t in [0, 2 pi].
    Trace {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1024)]
        samples: usize,
    },
    /// Certify R_N' > 0 on (-1, 1).
    Certify { n: usize },
    /// Compare the P_N Koebe radius with the Suffridge polynomial S_{N,1}.
    Compare { n_max: usize },
    /// Certify every degree in a range (exploratory above 6).
    Sweep { from: usize, to: usize },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct FamilyArgs {
    /// The P_N family.
    #[arg(long, value_name = "N")]
    pub dss: Option<usize>,
    /// The Suffridge polynomial S_{n,j}.
    #[arg(long, num_args = 2, value_names = ["N", "J"])]
    pub suffridge: Option<Vec<usize>>,
}

impl FamilyArgs {
    fn spec(&self) -> FamilySpec {
        match (&self.dss, &self.suffridge) {
            (Some(n), _) => FamilySpec::Dss { n: *n },
            (None, Some(v)) => FamilySpec::Suffridge { n: v[0], j: v[1] },
            (None, None) => unreachable!("clap enforces one family"),
        }
    }
}

/// Plain-text rendering of a number: shortest round-trip digits, switching
/// to exponent notation outside `[1e-5, 1e16)`.
pub fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

struct Outcome {
    body: String,
    code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: EXIT_OK }
    }
}

#[derive(Serialize)]
struct CoeffsOut {
    family: FamilySpec,
    degree: usize,
    coefficients: Vec<f64>,
}

fn cmd_coeffs(spec: FamilySpec, format: Format) -> crate::Result<Outcome> {
    spec.validate()?;
    let p = spec.coeffs()?;
    let mut coefficients = p.coeffs().to_vec();
    coefficients.resize(spec.degree() + 1, 0.0);
    let body = match format {
        Format::Json => to_json(&CoeffsOut { family: spec, degree: spec.degree(), coefficients }),
        Format::Csv => {
            let mut s = String::from("k,coefficient\n");
            for (k, c) in coefficients.iter().enumerate() {
                writeln!(s, "{k},{}", fmt_num(*c)).unwrap();
            }
            s
        }
        Format::Text => {
            let parts: Vec<String> = coefficients.iter().map(|&c| fmt_num(c)).collect();
            parts.join(",") + "\n"
        }
    };
    Ok(Outcome::ok(body))
}

#[derive(Serialize)]
struct TracePoint {
    t: f64,
    re: f64,
    im: f64,
    abs: f64,
}

#[derive(Serialize)]
struct TraceOut {
    family: FamilySpec,
    samples: usize,
    points: Vec<TracePoint>,
}

fn cmd_trace(spec: FamilySpec, samples: usize, format: Format) -> crate::Result<Outcome> {
    spec.validate()?;
    if samples < MIN_TRACE_SAMPLES {
        return Err(Error::Usage(format!(
            "--samples must be at least {MIN_TRACE_SAMPLES}, got {samples}"
        )));
    }
    let p = spec.coeffs()?;
    let points: Vec<TracePoint> = (0..=samples)
        .map(|i| {
            let t = TAU * i as f64 / samples as f64;
            let w = p.eval_complex(Complex64::from_polar(1.0, t));
            TracePoint { t, re: w.re, im: w.im, abs: w.norm() }
        })
        .collect();
    let body = match format {
        Format::Json => to_json(&TraceOut { family: spec, samples, points }),
        Format::Csv | Format::Text => {
            let mut s = String::from("t,re,im,abs\n");
            for q in &points {
                writeln!(s, "{},{},{},{}", fmt_num(q.t), fmt_num(q.re), fmt_num(q.im), fmt_num(q.abs))
                    .unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Certified | Verdict::Degenerate => EXIT_OK,
        Verdict::Refuted => EXIT_REFUTED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn opt_num(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_certify(n: usize, max_depth: u32, format: Format) -> crate::Result<Outcome> {
    let report = certify_univalence(n, max_depth)?;
    let body = match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("n,method,verdict,margin,note\n");
            for m in &report.methods {
                writeln!(
                    s,
                    "{n},{},{},{},{}",
                    m.method.as_str(),
                    m.verdict.as_str(),
                    opt_num(m.margin),
                    csv_field(m.note.as_deref().unwrap_or(""))
                )
                .unwrap();
            }
            s
        }
        Format::Text => certify_text(&report),
    };
    Ok(Outcome { body, code: exit_code(report.verdict) })
}

fn certify_text(r: &UnivalenceReport) -> String {
    let mut s = format!("P_{}: {}", r.n, r.verdict.as_str());
    if r.exploratory {
        s.push_str(" (exploratory)");
    }
    s.push('\n');
    writeln!(s, "  koebe radius sqrt(R_N(-1)) = {}", fmt_num(r.koebe_radius)).unwrap();
    if let Some(note) = &r.note {
        writeln!(s, "  note: {note}").unwrap();
    }
    for m in &r.methods {
        write!(s, "  {}: {}", m.method.as_str(), m.verdict.as_str()).unwrap();
        if let Some(margin) = m.margin {
            write!(s, ", margin {}", fmt_num(margin)).unwrap();
        }
        if let Some(note) = &m.note {
            write!(s, " ({note})").unwrap();
        }
        s.push('\n');
    }
    s
}

const COMPARE_HEADER: &str = "n,dss_radius,suffridge_at_minus_one,suffridge_circle_min,winner,exploratory";

fn cmd_compare(n_max: usize, grid: usize, format: Format) -> crate::Result<Outcome> {
    let rows = comparison_table(n_max, grid)?;
    let body = match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = format!("{COMPARE_HEADER}\n");
            for r in &rows {
                writeln!(s, "{}", compare_csv_row(r)).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:>4}  {:>20}  {:>20}  {:>20}  {:>9}\n",
                "N", "P_N radius", "|S_N,1(-1)|", "S_N,1 circle min", "winner"
            );
            for r in &rows {
                writeln!(
                    s,
                    "{:>4}  {:>20}  {:>20}  {:>20}  {:>9}{}",
                    r.n,
                    fmt_num(r.dss_radius),
                    fmt_num(r.suffridge_at_minus_one),
                    fmt_num(r.suffridge_circle_min),
                    r.dimitrov_winner.as_str(),
                    if r.exploratory { "  exploratory" } else { "" }
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn compare_csv_row(r: &ComparisonRow) -> String {
    format!(
        "{},{},{},{},{},{}",
        r.n,
        fmt_num(r.dss_radius),
        fmt_num(r.suffridge_at_minus_one),
        fmt_num(r.suffridge_circle_min),
        r.dimitrov_winner.as_str(),
        r.exploratory
    )
}

#[derive(Serialize)]
struct MethodSummary {
    method: Method,
    verdict: Verdict,
}

#[derive(Serialize)]
struct SweepRow {
    n: usize,
    verdict: Verdict,
    exploratory: bool,
    koebe_radius: f64,
    methods: Vec<MethodSummary>,
    note: Option<String>,
}

const SWEEP_METHODS: [Method; 4] =
    [Method::Sturm, Method::IntervalBisection, Method::DiscriminantShift, Method::SquareCompletion];

fn cmd_sweep(from: usize, to: usize, max_depth: u32, format: Format) -> crate::Result<Outcome> {
    if !(2 <= from && from <= to && to <= MAX_SWEEP_DEGREE) {
        return Err(Error::Usage(format!(
            "sweep range must satisfy 2 <= from <= to <= {MAX_SWEEP_DEGREE}, got {from}..{to}"
        )));
    }
    let reports: Vec<UnivalenceReport> = (from..=to)
        .into_par_iter()
        .map(|n| certify_univalence(n, max_depth))
        .collect::<crate::Result<_>>()?;
    let rows: Vec<SweepRow> = reports
        .into_iter()
        .map(|r| SweepRow {
            n: r.n,
            verdict: r.verdict,
            exploratory: r.exploratory,
            koebe_radius: r.koebe_radius,
            methods: r
                .methods
                .iter()
                .map(|m| MethodSummary { method: m.method, verdict: m.verdict })
                .collect(),
            note: r.note,
        })
        .collect();
    let body = match format {
        Format::Json => to_json(&rows),
        Format::Csv | Format::Text => {
            let mut s = String::from("n,verdict,exploratory,koebe_radius");
            for m in SWEEP_METHODS {
                write!(s, ",{}", m.as_str()).unwrap();
            }
            s.push('\n');
            for r in &rows {
                write!(s, "{},{},{},{}", r.n, r.verdict.as_str(), r.exploratory, fmt_num(r.koebe_radius))
                    .unwrap();
                for m in SWEEP_METHODS {
                    let v = r.methods.iter().find(|x| x.method == m).map(|x| x.verdict.as_str());
                    write!(s, ",{}", v.unwrap_or("")).unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn dispatch(cli: &Cli) -> crate::Result<Outcome> {
    let grid = cli.grid as usize;
    match &cli.command {
        Command::Coeffs(f) => cmd_coeffs(f.spec(), cli.format),
        Command::Trace { family, samples } => cmd_trace(family.spec(), *samples, cli.format),
        Command::Certify { n } => cmd_certify(*n, cli.max_depth, cli.format),
        Command::Compare { n_max } => cmd_compare(*n_max, grid, cli.format),
        Command::Sweep { from, to } => cmd_sweep(*from, *to, cli.max_depth, cli.format),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reports go to `out` unless `--out` names a file;
/// diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, outcome.body.as_bytes()),
        None => out.write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}
