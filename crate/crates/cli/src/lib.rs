//! Command-line front end: builds families, runs verification suites and
//! emits deterministic JSON or CSV.

pub mod suites;


use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ggh_core::exact::format_rational;
use ggh_core::genfun;
use ggh_core::matching::{self, Graph, MultipartiteGraph};
use ggh_core::mehler_heine::MhConfig;
use ggh_core::presets;
use ggh_core::recurrence;
use ggh_core::spec::SpecDocument;
use ggh_core::{operator, Basis, Exec, Poly, Report, SystemSpec};

use suites::{GraphInput, Suite, SuiteConfig};

/// Exit code for a passing run.
pub const EXIT_OK: i32 = 0;
/// Exit code when a verification fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage or spec errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ggh", version, about = "Build and verify generalized Gould-Hopper polynomial systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    /// Monomials for continuous families, falling factorials for discrete ones.
    Natural,
    Monomial,
    Falling,
}

#[derive(Debug, Args)]
pub struct SpecSource {
    /// Spec document (JSON).
    #[arg(long, conflicts_with = "preset")]
    pub spec: Option<PathBuf>,
    /// Preset, e.g. "laguerre alpha=1/2".
    #[arg(long)]
    pub preset: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient table of P_n (or Q_n) for n <= n-max.
    Build {
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Natural)]
        basis: BasisArg,
        /// Divide by the leading constant of the second hypergeometric form.
        #[arg(long)]
        normalized: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Series order for generating-function checks.
        #[arg(long, default_value_t = 15)]
        order: usize,
        /// Tolerance on the final scaled-limit deviation.
        #[arg(long, default_value_t = 1e-2)]
        tol: f64,
        /// Part sizes of a complete multipartite graph, e.g. "2,2,1".
        #[arg(long)]
        parts: Option<String>,
        /// Path length (edges per path).
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Graph as "u v" lines, 0-indexed.
        #[arg(long, conflicts_with = "parts")]
        edge_list: Option<PathBuf>,
        #[arg(long, hide = true)]
        corrupt_loader: bool,
    },
    /// List presets and their spec documents.
    Presets {
        /// A preset name or full preset string.
        name: Option<String>,
    },
    /// Recurrence coefficients gamma_j(n) inside the band.
    Recurrence {
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Path-packing counts and the matching polynomial of a graph.
    Matching {
        #[arg(long)]
        parts: Option<String>,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, conflicts_with = "parts")]
        edge_list: Option<PathBuf>,
    },
}

/// A usage, input or I/O error; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for UsageError {
            fn from(e: $t) -> Self {
                UsageError(e.to_string())
            }
        }
    )*};
}

usage_from!(ggh_core::Error, io::Error, serde_json::Error, csv::Error);

type CliResult<T> = Result<T, UsageError>;

/// Loads the spec named by `--spec` or `--preset`.
pub fn load_spec(source: &SpecSource) -> CliResult<SystemSpec> {
    match (&source.spec, &source.preset) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok(SystemSpec::from_json(&text)?)
        }
        (None, Some(name)) => Ok(presets::resolve(name)?),
        _ => Err(UsageError("exactly one of --spec or --preset is required".into())),
    }
}

fn parse_parts(text: &str) -> CliResult<MultipartiteGraph> {
    let parts = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| UsageError(format!("parts: {p:?} is not a positive integer")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(MultipartiteGraph::new(parts)?)
}

fn load_graph(parts: Option<&str>, edge_list: Option<&Path>) -> CliResult<Option<GraphInput>> {
    match (parts, edge_list) {
        (Some(p), _) => Ok(Some(GraphInput::Multipartite(parse_parts(p)?))),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok(Some(GraphInput::EdgeList(Graph::parse_edge_list(&text, None)?)))
        }
        (None, None) => Ok(None),
    }
}

fn exec_for(jobs: Option<usize>) -> Exec {
    match jobs {
        Some(1) => Exec::Sequential,
        _ => Exec::Parallel,
    }
}

/// Runs a parsed command, writing to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut Vec<u8>) -> CliResult<i32> {
    if cli.jobs == Some(0) {
        return Err(UsageError("--jobs must be at least 1".into()));
    }
    #[cfg(feature = "parallel")]
    if let Some(n) = cli.jobs.filter(|&n| n > 1) {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| UsageError(e.to_string()))?;
        return pool.install(|| dispatch(cli, out));
    }
    dispatch(cli, out)
}

/// Parses arguments, runs, and writes to `--out` or stdout; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut buffer = Vec::new();
    let result = run(&cli, &mut buffer);
    let written = match &cli.out {
        Some(path) => fs::write(path, &buffer),
        None => io::stdout().write_all(&buffer),
    };
    match (result, written) {
        (Ok(code), Ok(())) => code,
        (Ok(_), Err(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        (Err(e), _) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let exec = exec_for(cli.jobs);
    match &cli.command {
        Command::Build {
            source,
            n_max,
            basis,
            normalized,
        } => {
            let spec = load_spec(source)?;
            cmd_build(&spec, *n_max, *basis, *normalized, cli.format, exec, out)
        }
        Command::Verify {
            suite,
            source,
            n_max,
            order,
            tol,
            parts,
            r,
            edge_list,
            corrupt_loader,
        } => {
            if !(*tol > 0.0) {
                return Err(UsageError("--tol must be positive".into()));
            }
            if *r == 0 {
                return Err(UsageError("--r must be positive".into()));
            }
            let cfg = SuiteConfig {
                n_max: *n_max,
                order: *order,
                mh: MhConfig {
                    tol: *tol,
                    ..MhConfig::default()
                },
                exec,
                corrupt_operator: *corrupt_loader,
            };
            let graph = load_graph(parts.as_deref(), edge_list.as_deref())?;
            let needs_spec = *suite != Suite::Matching;
            let spec = if needs_spec && (source.spec.is_some() || source.preset.is_some() || *suite != Suite::All) {
                Some(load_spec(source)?)
            } else {
                None
            };
            cmd_verify(*suite, spec.as_ref(), graph.as_ref(), *r, &cfg, cli.format, out)
        }
        Command::Presets { name } => cmd_presets(name.as_deref(), cli.format, out),
        Command::Recurrence { source, n_max } => {
            let spec = load_spec(source)?;
            cmd_recurrence(&spec, *n_max, cli.format, exec, out)
        }
        Command::Matching { parts, r, edge_list } => {
            if *r == 0 {
                return Err(UsageError("--r must be positive".into()));
            }
            let graph = load_graph(parts.as_deref(), edge_list.as_deref())?
                .ok_or_else(|| UsageError("one of --parts or --edge-list is required".into()))?;
            cmd_matching(&graph, *r, cli.format, exec, out)
        }
    }
}

fn coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

#[derive(Serialize)]
struct BuildRow {
    n: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct BuildOutput<'a> {
    spec: SpecDocument,
    basis: &'a str,
    normalized: bool,
    polynomials: Vec<BuildRow>,
}

pub fn cmd_build(
    spec: &SystemSpec,
    n_max: usize,
    basis: BasisArg,
    normalized: bool,
    format: Format,
    exec: Exec,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let family = operator::build_family(spec, n_max, exec);
    let target = match basis {
        BasisArg::Natural => spec.natural_basis(),
        BasisArg::Monomial => Basis::Monomial,
        BasisArg::Falling => Basis::FallingFactorial,
    };
    let mut rows = Vec::with_capacity(family.len());
    for (n, p) in family.iter().enumerate() {
        let p = if normalized {
            p.scale(&genfun::normalizing_constant(spec, n)?.recip())
        } else {
            p.clone()
        };
        rows.push(BuildRow {
            n,
            coeffs: coeff_strings(&p.to_basis(target)),
        });
    }
    let basis_name = match target {
        Basis::Monomial => "monomial",
        Basis::FallingFactorial => "falling",
    };
    match format {
        Format::Json => {
            let doc = BuildOutput {
                spec: spec.to_document(),
                basis: basis_name,
                normalized,
                polynomials: rows,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(&mut *out);
            let mut header = vec!["n".to_string()];
            header.extend((0..=n_max).map(|k| format!("c{k}")));
            w.write_record(&header)?;
            for row in rows {
                let mut record = vec![row.n.to_string()];
                record.extend(row.coeffs);
                record.resize(n_max + 2, "0".to_string());
                w.write_record(&record)?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    suite: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<SpecDocument>,
    passed: bool,
    reports: &'a [Report],
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value().expect("no skipped variants").get_name().to_string()
}

pub fn cmd_verify(
    suite: Suite,
    spec: Option<&SystemSpec>,
    graph: Option<&GraphInput>,
    r: usize,
    cfg: &SuiteConfig,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let mut reports = Vec::new();
    let spec_suites: &[Suite] = match suite {
        Suite::All => &Suite::SPEC_SUITES,
        Suite::Matching => &[],
        _ => std::slice::from_ref(&suite),
    };
    for s in spec_suites {
        match spec {
            Some(spec) => reports.extend(suites::run_spec_suite(*s, spec, cfg)),
            None => reports.push(Report::skipped(suite_name(*s), "no spec given")),
        }
    }
    if matches!(suite, Suite::All | Suite::Matching) {
        reports.extend(suites::matching(graph, r, cfg));
    }
    let passed = ggh_core::report::all_passed(&reports);
    match format {
        Format::Json => {
            let doc = VerifyOutput {
                suite: &suite_name(suite),
                spec: spec.map(SystemSpec::to_document),
                passed,
                reports: &reports,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["check", "outcome", "max_deviation", "params", "first_violation"])?;
            for rep in &reports {
                let params: Vec<String> = rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let outcome = serde_json::to_value(&rep.outcome)?;
                w.write_record([
                    rep.check.clone(),
                    outcome.as_str().unwrap_or_default().to_string(),
                    rep.max_deviation.map(ggh_core::report::format_float).unwrap_or_default(),
                    params.join(";"),
                    rep.violations.first().cloned().unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct PresetEntry {
    name: String,
    summary: String,
    parameters: Vec<String>,
    spec: SpecDocument,
}

pub fn cmd_presets(name: Option<&str>, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    let entries: Vec<PresetEntry> = match name {
        Some(text) => {
            let spec = presets::resolve(text)?;
            let p = presets::find(text.split_whitespace().next().unwrap_or(""))?;
            vec![entry(p, text.to_string(), spec)]
        }
        None => presets::PRESETS
            .iter()
            .map(|p| Ok(entry(p, p.name.to_string(), p.build_default()?)))
            .collect::<CliResult<_>>()?,
    };
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &entries)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["name", "kind", "alphas", "rho", "q"])?;
            for e in &entries {
                w.write_record([
                    e.name.clone(),
                    e.spec.kind.clone(),
                    e.spec.alphas.join(" "),
                    e.spec.rho.clone(),
                    e.spec.q.join(" "),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn entry(p: &presets::Preset, name: String, spec: SystemSpec) -> PresetEntry {
    PresetEntry {
        name,
        summary: p.summary.to_string(),
        parameters: p.keys.iter().map(|(k, v)| format!("{k}={v}")).collect(),
        spec: spec.to_document(),
    }
}

#[derive(Serialize)]
struct RecurrenceOutput {
    spec: SpecDocument,
    band: usize,
    rows: Vec<BuildRow>,
}

pub fn cmd_recurrence(spec: &SystemSpec, n_max: usize, format: Format, exec: Exec, out: &mut dyn Write) -> CliResult<i32> {
    let rec = recurrence::band_recurrence(spec, n_max, exec)?;
    let rows: Vec<BuildRow> = rec
        .rows
        .iter()
        .enumerate()
        .map(|(n, row)| BuildRow {
            n,
            coeffs: row.iter().map(format_rational).collect(),
        })
        .collect();
    match format {
        Format::Json => {
            let doc = RecurrenceOutput {
                spec: spec.to_document(),
                band: rec.band,
                rows,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["n".to_string()];
            header.extend((0..=rec.band).map(|j| format!("gamma_{j}")));
            w.write_record(&header)?;
            for row in rows {
                let mut record = vec![row.n.to_string()];
                record.extend(row.coeffs);
                record.resize(rec.band + 2, "0".to_string());
                w.write_record(&record)?;
            }
            w.flush()?;
        }
    }
    Ok(if rec.out_of_band.is_empty() { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct MatchingOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    parts: Option<Vec<usize>>,
    vertices: usize,
    edges: usize,
    r: usize,
    counts: Vec<String>,
    polynomial: Vec<String>,
}

pub fn cmd_matching(graph: &GraphInput, r: usize, format: Format, exec: Exec, out: &mut dyn Write) -> CliResult<i32> {
    let (g, parts) = match graph {
        GraphInput::Multipartite(m) => (m.to_graph(), Some(m.parts().to_vec())),
        GraphInput::EdgeList(g) => (g.clone(), None),
    };
    let rec = matching::matching_poly_oracle(&g, r, exec)?;
    let doc = MatchingOutput {
        parts,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        r,
        counts: rec.counts.iter().map(|c| c.to_string()).collect(),
        polynomial: coeff_strings(&rec.polynomial),
    };
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["j", "count", "exponent", "coefficient"])?;
            let n = g.vertex_count();
            for (j, c) in doc.counts.iter().enumerate() {
                let e = n - (r + 1) * j;
                w.write_record([j.to_string(), c.clone(), e.to_string(), doc.polynomial[e].clone()])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}
