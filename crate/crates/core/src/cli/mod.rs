//! Command-line front end: argument parsing, dispatch and output formatting.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 matrix not
//! on the scheme.

mod report;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Field, GaloisField, PrimeField, Rationals, DEFAULT_PRIME};
use crate::invariants::{self, kappa, Params, Variant};
use crate::oracle::{classify_point, scan_fano_points, write_json_line, PointRecord};
use crate::spaces::{middle_point_for, standard_compression, LinMatrixSpace};
use crate::tangent::{block_form, random_block_point, tangent_dim_blocks, tangent_dim_chart, PointKind, TangentReport};

pub use report::{build_report, graph_summary, render_dot, render_report_text, ConjectureFlag, GraphSummary, PerS, Report};
pub use verify::{all_shapes, borel_example_matrices, p_product_rank, run_suite, SuiteResult, VerifyOptions, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_ON_SCHEME: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fano", version, about = "Invariants, tangent spaces and finite-field checks for Fano schemes of determinantal varieties")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// key = value file setting field, prime, seed, max_subspaces, max_n.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form invariants of one Fano scheme.
    Report(ParamArgs),
    /// Graphviz DOT of the labeled connectedness graph.
    Graph(ParamArgs),
    /// Tangent space dimension at a point.
    Tangent(TangentArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Parameter-grid or point scans as JSON lines.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Sym,
    Alt,
    Rect,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, value_enum, default_value = "sym")]
    pub variant: VariantArg,
    /// Number of rows (rectangular only; defaults to n).
    #[arg(short = 'm')]
    pub m: Option<u32>,
    #[arg(short = 'n')]
    pub n: u32,
    #[arg(short = 'r')]
    pub r: u32,
    #[arg(short = 'k', default_value_t = 0)]
    pub k: u32,
}

impl ParamArgs {
    pub fn params(&self) -> Result<Params> {
        make_params(self.variant, self.m, self.n, self.r, self.k)
    }
}

fn make_params(variant: VariantArg, m: Option<u32>, n: u32, r: u32, k: u32) -> Result<Params> {
    let v = match variant {
        VariantArg::Sym => Variant::Symmetric,
        VariantArg::Alt => Variant::Alternating,
        VariantArg::Rect => Variant::Rectangular { m: m.unwrap_or(n) },
    };
    if m.is_some() && variant != VariantArg::Rect {
        return Err(Error::InvalidParams("-m only applies to --variant rect".into()));
    }
    Params::new(v, n, r, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PointArg {
    Middle,
    Standard,
    RandomGeneral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Chart,
    Blocks,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldArg {
    Gf,
    Rational,
}

#[derive(Debug, Args)]
pub struct TangentArgs {
    #[arg(long, value_enum, conflicts_with = "file")]
    pub point: Option<PointArg>,
    /// Matrix-space JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(short = 'n')]
    pub n: Option<u32>,
    #[arg(short = 'r')]
    pub r: Option<u32>,
    #[arg(short = 'k')]
    pub k: Option<u32>,
    #[arg(short = 's')]
    pub s: Option<u32>,
    #[arg(long, value_enum, default_value = "both")]
    pub method: MethodArg,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub field: Option<FieldArg>,
    #[arg(long)]
    pub prime: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of graph-equivalence, jensen, p-minors, borel, lines-gf3, tangent-cross.
    pub suite: String,
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(subcommand)]
    pub kind: ScanKind,
}

#[derive(Debug, Subcommand)]
pub enum ScanKind {
    /// One report line per (n, r, k) with n ≤ max-n.
    Grid {
        #[arg(long, value_enum, default_value = "sym")]
        variant: VariantArg,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// One line per GF(q)-point of F_k.
    Points {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short = 'q', default_value_t = 3)]
        q: u32,
        /// Attach the nested flag classification of each point.
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        max_subspaces: Option<u64>,
    },
}

/// Optional settings file; command-line flags take precedence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub field: Option<FieldArg>,
    pub prime: Option<u64>,
    pub seed: Option<u64>,
    pub max_subspaces: Option<u64>,
    pub max_n: Option<u32>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotOnScheme { .. } => EXIT_NOT_ON_SCHEME,
        _ => EXIT_USAGE,
    }
}

/// Parses `args`, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match &cli.command {
        Command::Report(args) => {
            let params = args.params()?;
            let report = build_report(&params, config.seed);
            if cli.json {
                emit_json(out, &report)?;
            } else {
                write!(out, "{}", render_report_text(&report)).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Graph(args) => {
            let params = args.params()?;
            if cli.json {
                let graph = invariants::build_graph(&params);
                let summary = graph_summary(&params, &graph);
                emit_json(out, &serde_json::json!({ "graph": graph, "summary": summary }))?;
            } else {
                write!(out, "{}", render_dot(&params)).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Tangent(args) => {
            let field = args.field.or(config.field).unwrap_or(FieldArg::Gf);
            match field {
                FieldArg::Gf => {
                    let prime = args.prime.or(config.prime).unwrap_or(DEFAULT_PRIME);
                    run_tangent(&PrimeField::new(prime)?, args, &config, cli.json, out)
                }
                FieldArg::Rational => run_tangent(&Rationals, args, &config, cli.json, out),
            }
        }
        Command::Verify(args) => {
            let opts = VerifyOptions {
                max_n: args.max_n.or(config.max_n),
                seed: args.seed.or(config.seed).unwrap_or(0),
                max_subspaces: config.max_subspaces.unwrap_or(crate::oracle::DEFAULT_MAX_SUBSPACES),
            };
            let result = run_suite(&args.suite, &opts)?;
            if cli.json {
                emit_json(out, &result)?;
            } else {
                let status = if result.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {}: {} ({} checks)", result.suite, result.summary, result.checks).map_err(io_err)?;
                for f in &result.failures {
                    writeln!(out, "  failure: {f}").map_err(io_err)?;
                }
            }
            Ok(if result.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Scan(args) => run_scan(&args.kind, &config, out),
    }
}

#[derive(Serialize)]
struct TangentOutput {
    scheme: String,
    point: String,
    matrix: crate::spaces::MatrixJson,
    reports: Vec<TangentReport>,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    formula_general: Option<num_bigint::BigInt>,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    formula_middle: Option<num_bigint::BigInt>,
    #[serde(with = "crate::invariants::bigint_json::option", skip_serializing_if = "Option::is_none")]
    dim_component: Option<num_bigint::BigInt>,
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParams(format!("{flag} is required for this point")))
}

fn run_tangent<F: Field>(field: &F, args: &TangentArgs, config: &Config, json: bool, out: &mut dyn Write) -> Result<i32> {
    let seed = args.seed.or(config.seed);
    let (space, params, s, label) = match (&args.file, args.point) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let space = LinMatrixSpace::from_json_str(field, &text)?;
            let n = space.rows() as u32;
            let r = need(args.r, "-r")?;
            let k = args.k.unwrap_or((space.span_dim() as u32).saturating_sub(1));
            let params = Params::symmetric(n, r, k)?;
            crate::tangent::check_on_scheme(&space, r as usize)?;
            let s = match args.s {
                Some(s) => Some(s),
                None => (0..=params.s_max()).find(|&s| block_form(&space, &params, s).is_ok()),
            };
            (space, params, s, format!("file {}", path.display()))
        }
        (None, Some(PointArg::Middle)) => {
            let n = need(args.n, "-n")?;
            let k = args.k.unwrap_or(1);
            let r = args.r.unwrap_or(n);
            if r != n {
                return Err(Error::InvalidParams("the middle point needs r = n".into()));
            }
            let params = Params::symmetric(n, r, k)?;
            (middle_point_for(field, n as usize, k as usize)?, params, Some((n - 1) / 2), "middle".to_string())
        }
        (None, Some(PointArg::Standard)) => {
            let (n, r, s) = (need(args.n, "-n")?, need(args.r, "-r")?, need(args.s, "-s")?);
            let base = Params::symmetric(n, r, 0)?;
            let kap = u32::try_from(kappa(&base, s)?).map_err(|_| Error::SizeLimit("κ too large".into()))?;
            if args.k.is_some_and(|k| k != kap) {
                return Err(Error::InvalidParams(format!("the standard point has k = κ({s}) = {kap}")));
            }
            let params = base.with_k(kap)?;
            (standard_compression(field, &params, s)?, params, Some(s), "standard".to_string())
        }
        (None, Some(PointArg::RandomGeneral)) => {
            let (n, r, k) = (need(args.n, "-n")?, need(args.r, "-r")?, need(args.k, "-k")?);
            let s = args.s.unwrap_or(0);
            let params = Params::symmetric(n, r, k)?;
            let p = random_block_point(field, &params, s, seed.unwrap_or(0), PointKind::General)?;
            (p.space, params, Some(s), format!("random-general (seed {}, attempts {})", p.seed, p.attempts))
        }
        (None, None) => return Err(Error::InvalidParams("give --point or --file".into())),
    };
    let mut reports = Vec::new();
    if matches!(args.method, MethodArg::Chart | MethodArg::Both) {
        let mut rep = tangent_dim_chart(&space, &params)?;
        rep.seed = seed.filter(|_| args.point == Some(PointArg::RandomGeneral));
        reports.push(rep);
    }
    if matches!(args.method, MethodArg::Blocks | MethodArg::Both) {
        match s {
            Some(s) => {
                let mut rep = tangent_dim_blocks(&space, &params, s)?;
                rep.seed = seed.filter(|_| args.point == Some(PointArg::RandomGeneral));
                reports.push(rep);
            }
            None if args.method == MethodArg::Blocks => {
                return Err(Error::Shape("matrix is not in nested block form for any s".into()));
            }
            None => {}
        }
    }
    let output = TangentOutput {
        scheme: params.to_string(),
        point: label,
        matrix: space.to_json(),
        formula_general: s.and_then(|s| invariants::tangent_formula_general(&params, s).ok()),
        formula_middle: invariants::tangent_formula_middle(&params).ok(),
        dim_component: s.and_then(|s| invariants::dim_component(&params, s).ok()),
        reports,
    };
    if json {
        emit_json(out, &output)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{}  point: {}  field: {}", output.scheme, output.point, field.name()).map_err(io_err)?;
    write!(out, "{space}").map_err(io_err)?;
    writeln!(out, "{:<8} {:>11} {:>8} {:>8} {:>8} {:>6}", "method", "tangent_dim", "unknowns", "rows", "rank", "a_det").map_err(io_err)?;
    for rep in &output.reports {
        let method = match rep.method {
            crate::tangent::Method::Chart => "chart",
            crate::tangent::Method::Blocks => "blocks",
        };
        let a = rep.a_det.map_or_else(|| "-".to_string(), |a| a.to_string());
        writeln!(out, "{method:<8} {:>11} {:>8} {:>8} {:>8} {a:>6}", rep.tangent_dim, rep.lift_unknowns, rep.constraint_rows, rep.rank)
            .map_err(io_err)?;
    }
    if let Some(v) = &output.formula_general {
        writeln!(out, "formula at a general point: {v}").map_err(io_err)?;
    }
    if let Some(v) = &output.formula_middle {
        writeln!(out, "formula at the middle point: {v}").map_err(io_err)?;
    }
    if let Some(v) = &output.dim_component {
        writeln!(out, "component dimension: {v}").map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GridLine {
    scheme: String,
    params: Params,
    empty: bool,
    components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjecture: Option<ConjectureFlag>,
}

fn run_scan(kind: &ScanKind, config: &Config, out: &mut dyn Write) -> Result<i32> {
    match kind {
        ScanKind::Grid { variant, max_n } => {
            for base in all_shapes(*max_n) {
                let matches = matches!(
                    (variant, base.variant),
                    (VariantArg::Sym, Variant::Symmetric) | (VariantArg::Alt, Variant::Alternating) | (VariantArg::Rect, Variant::Rectangular { .. })
                );
                if !matches {
                    continue;
                }
                let top = invariants::kappa_table(&base).into_iter().max().expect("nonempty table");
                let top = u32::try_from(top).map_err(|_| Error::SizeLimit("κ too large".into()))?;
                for k in 0..=top {
                    let report = build_report(&base.with_k(k)?, None);
                    let line = GridLine {
                        scheme: report.scheme,
                        params: report.params,
                        empty: report.empty,
                        components: report.graph.component_count,
                        irreducible: report.irreducible,
                        conjecture: report.conjecture,
                    };
                    write_json_line(out, &line)?;
                }
            }
            Ok(EXIT_OK)
        }
        ScanKind::Points { params, q, classify, max_subspaces } => {
            let params = params.params()?;
            let field = GaloisField::new(*q)?;
            let cap = max_subspaces.or(config.max_subspaces).unwrap_or(crate::oracle::DEFAULT_MAX_SUBSPACES);
            let mut index = 0u64;
            let tested = scan_fano_points(&params, &field, cap, |space| {
                let classification = if *classify { Some(classify_point(space, &params)?) } else { None };
                write_json_line(out, &PointRecord { index, matrix: space.to_json(), classification })?;
                index += 1;
                Ok(())
            })?;
            write_json_line(out, &serde_json::json!({ "summary": { "tested": tested, "points": index, "q": q } }))?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(std::iter::once("fano").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn config_parsing() {
        let c = Config::parse("field = \"rational\"\nseed = 7\nmax_n = 5\n").unwrap();
        assert_eq!(c.field, Some(FieldArg::Rational));
        assert_eq!(c.seed, Some(7));
        assert!(Config::parse("bogus = 1").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["report", "-n", "3", "-r", "2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn middle_tangent_text() {
        let (code, out, _) = run_args(&["tangent", "--point", "middle", "-n", "3", "-r", "3", "-k", "1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("chart"), "{out}");
        assert!(out.contains("blocks"));
    }
}
