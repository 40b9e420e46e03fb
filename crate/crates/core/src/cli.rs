//! Command-line front end. `run` is the whole program; the binary only
//! forwards `std::env::args` and exits with its status.
//!
//! Exit status: 0 on success or a decided verdict, 1 on input errors or a
//! failed check, 2 when a verdict is undecided because a cap was reached.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{run_identity_suite, Coeff, SuiteConfig};
use crate::degree::Degree;
use crate::doubling::{crossed_product_verdict, double};
use crate::error::{Error, Result};
use crate::groups::{self, GroupSpec};
use crate::periodicity::{decide_periodicity, PeriodicityVerdict, DEFAULT_KMAX};
use crate::theta::{parse_word, Color, ThetaGraph, ThetaSpec, WordDisplay, DEFAULT_PATH_CAP};

pub const THETA_SCHEMA_HELP: &str = r#"theta spec JSON:
  {"n1":N1,"n2":N2,"theta":[[e,f,f2,e2],...]}
  one row per (e,f) in [0,N1)x[0,N2), meaning b_e r_f = r_f2 b_e2;
  the rows must define a bijection"#;

pub const GROUP_SCHEMA_HELP: &str = r#"group spec JSON, one of:
  {"kind":"finite","factors":[d1,d2,...]}            d1 | d2 | ...
  {"kind":"torus","rank":l}
  {"kind":"solenoid","finite":{"p":m,...},"infinite":[p,...]}
  {"kind":"padic","p":p}"#;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest multiple k of the minimal exponent pair to examine.
    #[arg(long, global = true, default_value_t = DEFAULT_KMAX, value_parser = clap::value_parser!(u32).range(1..))]
    pub kmax: u32,
    /// Degree bound for the identity suite, e.g. 2,2.
    #[arg(long, global = true, default_value = "2,2")]
    pub max_degree: Degree,
    /// Largest number of paths of one degree that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_PATH_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub path_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub output: OutputFormat,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            kmax: DEFAULT_KMAX,
            max_degree: Degree::new(2, 2),
            path_cap: DEFAULT_PATH_CAP,
            output: OutputFormat::Table,
            seed: 0,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "twograph", about = "Single-vertex 2-graphs, their cores, and crossed products by semigroups")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Commands on a single θ-graph.
    #[command(subcommand)]
    Theta(ThetaCommand),
    /// Print the doubled graph on length-two monochrome paths.
    Double(SpecArg),
    /// Decide simplicity of the crossed product of the core by N^2.
    CrossedProduct(SpecArg),
    /// Exact identities of the core.
    #[command(subcommand)]
    Core(CoreCommand),
    /// Compact abelian groups under multiplication.
    #[command(subcommand)]
    Group(GroupCommand),
}

#[derive(Debug, Args)]
struct SpecArg {
    /// θ-graph spec JSON.
    #[arg(long)]
    spec: PathBuf,
}

#[derive(Debug, Subcommand)]
enum ThetaCommand {
    /// Check that θ is a bijection.
    Validate(SpecArg),
    /// Rewrite a word into blue-first normal form, or into `--pattern`.
    NormalForm {
        #[command(flatten)]
        spec: SpecArg,
        /// Edges separated by spaces, e.g. "r0 b1".
        #[arg(long)]
        word: String,
        /// Colour pattern such as RB; defaults to blue-first.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Decide whether the graph is periodic.
    Periodicity(SpecArg),
}

#[derive(Debug, Subcommand)]
enum CoreCommand {
    /// Run the identity suite up to `--max-degree`.
    Verify(SpecArg),
}

#[derive(Debug, Args)]
struct GroupArg {
    /// Group spec JSON.
    #[arg(long)]
    group: PathBuf,
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Conditions, connectedness, torsion and the simplicity verdict.
    Classify {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = groups::DEFAULT_TEST_RANGE)]
        range: u64,
    },
    /// Apply L_a to a function table on a finite group.
    Transfer {
        #[command(flatten)]
        group: GroupArg,
        #[arg(short, long)]
        a: u64,
        /// Comma-separated values in element order, e.g. "0,1,1/2,0".
        #[arg(long)]
        table: String,
    },
    /// Finite index, finite kernels, multiplicative kernel sizes.
    G123 {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = groups::DEFAULT_TEST_RANGE)]
        range: u64,
    },
}

struct Outcome {
    json: String,
    table: String,
    status: i32,
}

impl Outcome {
    fn new(value: &impl Serialize, table: String, status: i32) -> Result<Self, Failure> {
        let json = serde_json::to_string_pretty(value).map_err(Error::from)?;
        Ok(Outcome { json, table, status })
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let text = match cli.config.output {
                OutputFormat::Json => outcome.json,
                OutputFormat::Table => outcome.table,
            };
            let _ = writeln!(out, "{}", text.trim_end());
            outcome.status
        }
        Err(Failure { error, schema }) => {
            let _ = writeln!(err, "error: {error}");
            if let Some(help) = schema {
                let _ = writeln!(err, "{help}");
            }
            1
        }
    }
}

/// An error, with the file schema attached when a spec failed to parse.
struct Failure {
    error: Error,
    schema: Option<&'static str>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, schema: None }
    }
}

fn with_schema(schema: &'static str) -> impl Fn(Error) -> Failure {
    move |error| {
        let schema = matches!(error, Error::Parse(_)).then_some(schema);
        Failure { error, schema }
    }
}

fn load_graph(arg: &SpecArg, config: &RunConfig) -> Result<ThetaGraph, Failure> {
    let spec = ThetaSpec::load(&arg.spec).map_err(with_schema(THETA_SCHEMA_HELP))?;
    Ok(ThetaGraph::new(spec)?.with_path_cap(config.path_cap))
}

fn load_group(arg: &GroupArg) -> Result<GroupSpec, Failure> {
    GroupSpec::load(&arg.group).map_err(with_schema(GROUP_SCHEMA_HELP))
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let config = &cli.config;
    match &cli.command {
        Command::Theta(ThetaCommand::Validate(arg)) => {
            let g = load_graph(arg, config)?;
            let report = ValidateReport { valid: true, n1: g.n1(), n2: g.n2(), squares: g.n1() * g.n2() };
            let table = format!("valid: N1={} N2={}, {} commuting squares", g.n1(), g.n2(), report.squares);
            Outcome::new(&report, table, 0)
        }
        Command::Theta(ThetaCommand::NormalForm { spec, word, pattern }) => {
            let g = load_graph(spec, config)?;
            let path = g.path_from_word(&parse_word(word)?)?;
            let pattern = match pattern {
                Some(p) => Color::parse_pattern(p)?,
                None => Color::normal_pattern(path.degree()),
            };
            let rewritten = g.reorder(&path, &pattern)?;
            let text = WordDisplay(&rewritten).to_string();
            let report = NormalFormReport { input: word.clone(), degree: path.degree(), output: text.clone() };
            Outcome::new(&report, text, 0)
        }
        Command::Theta(ThetaCommand::Periodicity(arg)) => {
            let g = load_graph(arg, config)?;
            let verdict = decide_periodicity(&g, config.kmax)?;
            let status = verdict_status(&verdict);
            let table = periodicity_table(&verdict);
            let report = PeriodicityReport { n1: g.n1(), n2: g.n2(), kmax: config.kmax, verdict };
            Outcome::new(&report, table, status)
        }
        Command::Double(arg) => {
            let g = load_graph(arg, config)?;
            let d = double(&g)?;
            let json = serde_json::to_string_pretty(&d.to_json()).map_err(Error::from)?;
            let mut table = format!("doubled graph: N1={} N2={}\n", d.graph().n1(), d.graph().n2());
            for row in &d.graph().spec().theta {
                let (e, f) = d.blue_pair(row.blue);
                let (gg, h) = d.red_pair(row.red);
                let (g2, h2) = d.red_pair(row.red_out);
                let (e2, f2) = d.blue_pair(row.blue_out);
                let _ = writeln!(table, "  (b{e}b{f})(r{gg}r{h}) = (r{g2}r{h2})(b{e2}b{f2})");
            }
            Ok(Outcome { json, table, status: 0 })
        }
        Command::CrossedProduct(arg) => {
            let g = load_graph(arg, config)?;
            let r = crossed_product_verdict(&g, config.kmax)?;
            let status = verdict_status(&r.doubled);
            let fmt = |v: Option<bool>| v.map_or("undecided", |b| if b { "yes" } else { "no" });
            let table = format!(
                "simple: {}\npurely infinite: {}\nconclusive: {}\ndoubled graph: {}\nreason: {}",
                fmt(r.simple),
                fmt(r.purely_infinite),
                r.conclusive,
                r.doubled.label(),
                r.reason
            );
            Outcome::new(&r, table, status)
        }
        Command::Core(CoreCommand::Verify(arg)) => {
            let g = Arc::new(load_graph(arg, config)?);
            let suite = SuiteConfig { max_degree: config.max_degree, seed: config.seed, ..SuiteConfig::default() };
            let report = run_identity_suite(&g, suite)?;
            let mut table = String::new();
            for c in &report.checks {
                let _ = writeln!(table, "{} {:<24} {:>8} cases", if c.passed() { "pass" } else { "FAIL" }, c.name, c.cases);
                if let Some(case) = &c.first_failure {
                    let _ = writeln!(table, "     first failure: {case}");
                }
            }
            let status = if report.all_passed() { 0 } else { 1 };
            Outcome::new(&report, table, status)
        }
        Command::Group(GroupCommand::Classify { group, range }) => {
            let spec = load_group(group)?;
            let r = groups::classify(&spec, *range)?;
            let table = format!(
                "{}connected: {}\ntorsion interior empty: {}\nverdict: {:?}\nreason: {}",
                conditions_table(&r.conditions),
                r.connected,
                r.torsion_interior_empty,
                r.verdict,
                r.reason
            );
            Outcome::new(&r, table, 0)
        }
        Command::Group(GroupCommand::G123 { group, range }) => {
            let spec = load_group(group)?;
            let c = groups::check_conditions(&spec, *range)?;
            Outcome::new(&c, conditions_table(&c), 0)
        }
        Command::Group(GroupCommand::Transfer { group, a, table }) => {
            let g = load_group(group)?.as_finite()?;
            let f = parse_table(table)?;
            let result = groups::transfer_eval(&g, *a, &f)?;
            let values: Vec<String> = result.iter().map(ToString::to_string).collect();
            let mut text = String::new();
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(text, "{:?} {v}", g.element(i));
            }
            Outcome::new(&TransferReport { a: *a, values }, text, 0)
        }
    }
}

fn verdict_status(v: &PeriodicityVerdict) -> i32 {
    match v {
        PeriodicityVerdict::Unknown { .. } => 2,
        _ => 0,
    }
}

fn periodicity_table(v: &PeriodicityVerdict) -> String {
    match v {
        PeriodicityVerdict::Periodic { witness } => {
            let mut s = format!("periodic at ({}, {})\n", witness.a, witness.b);
            for (mu, nu) in witness.table() {
                let _ = writeln!(s, "  {mu} -> {nu}");
            }
            s
        }
        PeriodicityVerdict::Aperiodic { checked } => format!("aperiodic at every examined pair {checked:?}"),
        PeriodicityVerdict::NoCandidatePairs => "aperiodic: N1^a = N2^b has no positive solution".into(),
        PeriodicityVerdict::Unknown { kmax, checked } => {
            format!("unknown: path cap reached; no period at {checked:?}, multiples up to {kmax} not all examined")
        }
    }
}

fn conditions_table(c: &groups::Conditions) -> String {
    let show = |s: &groups::ConditionStatus| match s {
        groups::ConditionStatus::Holds => "holds".to_string(),
        groups::ConditionStatus::HoldsOnRange { max } => format!("holds for a, b <= {max}"),
        groups::ConditionStatus::Fails { witness } => format!("fails at {witness:?}"),
    };
    format!(
        "finite index: {}\nfinite kernel: {}\nmultiplicative kernel: {}\n",
        show(&c.finite_index),
        show(&c.finite_kernel),
        show(&c.multiplicative_kernel)
    )
}

fn parse_table(s: &str) -> Result<Vec<Coeff>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let (n, d) = t.split_once('/').unwrap_or((t, "1"));
            let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(format!("bad table entry {t:?}")))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(format!("bad table entry {t:?}")))?;
            if d == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            Ok(Coeff::new(n, d))
        })
        .collect()
}

#[derive(Serialize)]
struct ValidateReport {
    valid: bool,
    n1: usize,
    n2: usize,
    squares: usize,
}

#[derive(Serialize)]
struct NormalFormReport {
    input: String,
    degree: Degree,
    output: String,
}

#[derive(Serialize)]
struct PeriodicityReport {
    n1: usize,
    n2: usize,
    kmax: u32,
    #[serde(flatten)]
    verdict: PeriodicityVerdict,
}

#[derive(Serialize)]
struct TransferReport {
    a: u64,
    values: Vec<String>,
}
