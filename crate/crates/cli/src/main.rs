//! `lexideal`: decompositions, invariants and property checks for squarefree
//! monomial ideals given as lexsegment expressions, plus the verification
//! sweep. Every command prints one JSON document.
//!
//! Exit codes: 0 computed, 1 property false (or sweep failure), 2 input
//! error, 3 guard exceeded.

mod commands;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lexideal::{Field, Homology};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lexideal", version, about = "Exact computations with squarefree lexsegment ideals")]
struct Cli {
    /// Indented JSON, plus text renderings of Betti tables.
    #[arg(long, global = true)]
    pretty: bool,
    /// Coefficient field for homology: `rational` or `fp:PRIME`.
    #[arg(long, global = true, default_value = "rational", value_parser = parse_field)]
    field: Field,
    /// Write the JSON document to PATH instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Number of variables.
    #[arg(long)]
    n: usize,
    /// Ideal expression, e.g. "L(x1x3, x2x3)" or "Li(x2x3) & Lf({1,3})".
    expr: String,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Property {
    /// Every iterated shadow is a lexsegment.
    Complete,
    /// Linear resolution.
    Linres,
    /// Componentwise linear.
    Cwl,
    /// Cohen-Macaulay.
    Cm,
    /// Sequentially Cohen-Macaulay.
    Scm,
    /// depth(S/I) > q - 1, with the succ/pred criterion as evidence.
    DepthGt,
    /// depth(S/I) <= n - 2 with its equality condition.
    Bounds,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal primary decomposition: closed form (for segments) and oracle.
    Decompose(Input),
    /// dim, depth, pd, reg, multiplicity, Betti table, CM/SCM.
    Invariants(Input),
    /// Decide one property; exits 1 when it is false.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        #[command(flatten)]
        input: Input,
    },
    /// Alexander dual.
    Dual(Input),
    /// Iterated squarefree shadows of the generators.
    Shadow(Input),
    /// Cross-verification sweep; exits 1 when any record fails.
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Degree range `LO..HI` (inclusive).
        #[arg(long, default_value = "1..", value_parser = parse_degrees)]
        degrees: std::ops::RangeInclusive<usize>,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all", value_parser = parse_checks)]
        checks: Checks,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (0 = all cores); never changes the report.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: lexideal::Error| e.to_string())
}

fn parse_degrees(s: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    lexideal::verify::parse_degrees(s).map_err(|e| e.to_string())
}

#[derive(Clone)]
struct Checks(Vec<lexideal::verify::Check>);

fn parse_checks(s: &str) -> Result<Checks, String> {
    lexideal::verify::Check::parse_list(s).map(Checks).map_err(|e| e.to_string())
}

/// Outcome of a command: the document and whether the exit code is 1.
pub struct Report {
    pub doc: Value,
    pub negative: bool,
    /// Pre-rendered output replacing `doc`; `doc` is then a summary.
    pub body: Option<String>,
}

impl Report {
    pub fn new(doc: Value) -> Self {
        Report { doc, negative: false, body: None }
    }
}

fn exit_code(e: &lexideal::Error) -> u8 {
    if e.is_guard() {
        3
    } else {
        2
    }
}

fn render(doc: &Value, pretty: bool) -> String {
    let mut s = if pretty { serde_json::to_string_pretty(doc) } else { serde_json::to_string(doc) }.expect("json");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let h = Homology::over(cli.field);
    let result = match &cli.command {
        Command::Decompose(i) => commands::decompose(&i.expr, i.n),
        Command::Invariants(i) => commands::invariants(&i.expr, i.n, &h, cli.pretty),
        Command::Check { property, input } => commands::check(*property, &input.expr, input.n, &h),
        Command::Dual(i) => commands::dual(&i.expr, i.n),
        Command::Shadow(i) => commands::shadow(&i.expr, i.n),
        Command::Sweep { max_n, degrees, checks, seed, jobs } => {
            let cfg = lexideal::verify::SweepConfig {
                max_n: *max_n,
                degrees: degrees.clone(),
                checks: checks.0.clone(),
                seed: *seed,
                jobs: *jobs,
                field: cli.field,
                ..Default::default()
            };
            Ok(commands::sweep(&cfg, cli.pretty))
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            let code = exit_code(&e);
            let kind = if code == 3 { "guard" } else { "input" };
            eprint!("{}", render(&json!({ "error": { "kind": kind, "message": e.to_string() } }), false));
            return ExitCode::from(code);
        }
    };
    let code = ExitCode::from(u8::from(report.negative));
    let body = report.body.clone().unwrap_or_else(|| render(&report.doc, cli.pretty));
    let text = match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &body) {
                eprint!("{}", render(&json!({ "error": { "kind": "io", "message": e.to_string() } }), false));
                return ExitCode::from(2);
            }
            // a report written to a file leaves its summary on stdout
            match report.body {
                Some(_) => render(&report.doc, cli.pretty),
                None => return code,
            }
        }
        None => body,
    };
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    code
}
