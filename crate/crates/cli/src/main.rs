//! `relsize`: analyze finite semigroups and collections, run law suites, hunt counterexamples.
//!
//! Exit codes: 0 success, 1 law violation in `check`, 2 input or usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use relsize_core::derived::{derived_set, product};
use relsize_core::harness::{self, HarnessConfig, LawReport};
use relsize_core::io::{parse_collection, parse_semigroup, parse_subset};
use relsize_core::kernel::{central_collection, kernel_idempotents, make_kernel_context, relative_kernel};
use relsize_core::limits::set_max_enumeration_n;
use relsize_core::relative::{classify_in, extremal_ultrafilters, ps_collection, syn_collection, thick_collection};
use relsize_core::{mesh, standard_semigroup, CayleyRecord, Collection, FiniteSemigroup, SemigroupKind, Subset};

#[derive(Parser)]
#[command(name = "relsize", version, about = "Relative largeness on finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute operators on a semigroup and collections.
    Analyze(AnalyzeArgs),
    /// Run the law suite.
    Check(CheckArgs),
    /// Search for counterexamples to one law with hypotheses dropped.
    Hunt(HuntArgs),
    /// Print the Cayley table of a standard semigroup.
    Gen(GenArgs),
    /// List registered laws.
    Laws(FormatArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct FormatArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Flags,
    Mesh,
    Product,
    Derived,
    Syn,
    Thick,
    Ps,
    Hypotheses,
    Kernel,
    Idempotents,
    Central,
    Extremal,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Cayley table file.
    semigroup: PathBuf,
    /// Collection literal such as `[[0],[0,1]]`, or a path to a collection file. Repeatable.
    #[arg(short, long = "collection")]
    collections: Vec<String>,
    /// The collection F (default {S}).
    #[arg(short = 'f', long = "filter", visible_alias = "f")]
    f: Option<String>,
    /// The collection G (default {S}).
    #[arg(short = 'g', long = "g")]
    g: Option<String>,
    /// Subset literal such as `[0,2]`, or a path.
    #[arg(short = 'a', long = "set")]
    set: Option<String>,
    #[arg(long = "op", value_enum, required = true)]
    ops: Vec<Op>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// `default`, `small` or `upto-N`.
    #[arg(long, default_value = "default")]
    roster: String,
    /// Use every standard semigroup of order 2..=N (overrides --roster).
    #[arg(long)]
    size: Option<usize>,
    /// Extra semigroups from Cayley files; replaces the roster when given.
    #[arg(long = "semigroup")]
    semigroups: Vec<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances per semigroup for sampled spaces.
    #[arg(long = "sample", default_value_t = 1000)]
    sample: u64,
    /// Largest universe enumerated in full for laws over arbitrary collections.
    #[arg(long, default_value_t = 3)]
    max_exhaustive: usize,
    /// Largest universe enumerated in full for stack and filter laws.
    #[arg(long, default_value_t = 4)]
    max_structured: usize,
    /// Bound for the finite-intersection-property searches.
    #[arg(long, default_value_t = 1_000_000)]
    fip_bound: u128,
    /// Write reports (JSON lines) here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Zero the wall-time fields, for byte-comparable output.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    suite: SuiteArgs,
    /// Restrict to these law ids.
    #[arg(long = "law")]
    laws: Vec<String>,
}

#[derive(Args)]
struct HuntArgs {
    law: String,
    /// Hypothesis id or text to drop. Repeatable.
    #[arg(long)]
    weaken: Vec<String>,
    #[command(flatten)]
    suite: SuiteArgs,
}

#[derive(Args)]
struct GenArgs {
    kind: SemigroupKind,
    n: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Input { path: String, source: relsize_core::Error },
    #[error("{0}")]
    Validation(relsize_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl From<relsize_core::Error> for CliError {
    fn from(e: relsize_core::Error) -> Self {
        CliError::Validation(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Inline JSON when the argument starts with `[` or `{`, otherwise a file path.
fn literal_or_file(arg: &str) -> CliResult<(String, String)> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        Ok(("<inline>".to_string(), arg.to_string()))
    } else {
        Ok((arg.to_string(), read(Path::new(arg))?))
    }
}

fn load_semigroup(path: &Path) -> CliResult<FiniteSemigroup> {
    let text = read(path)?;
    parse_semigroup(&text).map_err(|source| CliError::Input { path: path.display().to_string(), source })
}

fn load_collection(arg: &str, n: usize) -> CliResult<Collection> {
    let (origin, text) = literal_or_file(arg)?;
    parse_collection(&text, n).map_err(|source| CliError::Input { path: origin, source })
}

fn load_subset(arg: &str, n: usize) -> CliResult<Subset> {
    let (origin, text) = literal_or_file(arg)?;
    parse_subset(&text, n).map_err(|source| CliError::Input { path: origin, source })
}

fn sets(c: &Collection) -> Value {
    json!(c.to_sets())
}

fn analyze(args: &AnalyzeArgs) -> CliResult<Value> {
    let s = load_semigroup(&args.semigroup)?;
    let n = s.n();
    let collections = args.collections.iter().map(|c| load_collection(c, n)).collect::<CliResult<Vec<_>>>()?;
    let universe = Collection::universe(n)?;
    let f = args.f.as_deref().map(|c| load_collection(c, n)).transpose()?.unwrap_or_else(|| universe.clone());
    let g = args.g.as_deref().map(|c| load_collection(c, n)).transpose()?.unwrap_or_else(|| universe.clone());
    let a = args.set.as_deref().map(|x| load_subset(x, n)).transpose()?;

    let mut out = Map::new();
    out.insert("semigroup".into(), json!(s.label()));
    for op in &args.ops {
        match op {
            Op::Flags => {
                let mut v = Vec::new();
                for c in collections.iter().chain([&f, &g]) {
                    v.push(json!({ "collection": sets(c), "flags": classify_in(&s, c)? }));
                }
                out.insert("flags".into(), json!(v));
            }
            Op::Mesh => {
                let src: Vec<&Collection> = if collections.is_empty() { vec![&f] } else { collections.iter().collect() };
                let v: Vec<Value> = src.iter().map(|c| json!({ "collection": sets(c), "mesh": sets(&mesh(c)) })).collect();
                out.insert("mesh".into(), json!(v));
            }
            Op::Product => {
                let (x, y) = match collections.as_slice() {
                    [x, y, ..] => (x, y),
                    _ => (&f, &g),
                };
                out.insert("product".into(), sets(&product(&s, x, y)?));
            }
            Op::Derived => {
                let a = a.ok_or_else(|| CliError::Usage("--op derived needs --set".into()))?;
                out.insert("A'(F)".into(), json!(derived_set(&s, &a, &f)?.to_vec()));
            }
            Op::Syn => {
                out.insert("Syn(F,G)".into(), sets(&syn_collection(&s, &f, &g)?));
            }
            Op::Thick => {
                out.insert("Thick(F,G)".into(), sets(&thick_collection(&s, &f, &g)?));
            }
            Op::Ps => {
                out.insert("PS(F,G)".into(), sets(&ps_collection(&s, &f, &g)?));
            }
            Op::Hypotheses => {
                let ctx = make_kernel_context(&s, &f, &g)?;
                out.insert("hypotheses".into(), json!(ctx.hypotheses()));
            }
            Op::Kernel => {
                let ctx = make_kernel_context(&s, &f, &g)?;
                out.insert("K(F,G)".into(), json!(relative_kernel(&ctx)?.to_vec()));
            }
            Op::Idempotents => {
                out.insert("E(S)".into(), json!(s.idempotents(&s.full()).to_vec()));
                let ctx = make_kernel_context(&s, &f, &g)?;
                out.insert("E(K(F,G))".into(), json!(kernel_idempotents(&ctx)?.to_vec()));
            }
            Op::Central => {
                let ctx = make_kernel_context(&s, &f, &g)?;
                out.insert("Cen(F,G)".into(), sets(&central_collection(&ctx)?));
            }
            Op::Extremal => {
                out.insert("extremal".into(), json!(extremal_ultrafilters(&s, &f, &g)?));
            }
        }
    }
    Ok(Value::Object(out))
}

fn config(args: &SuiteArgs) -> CliResult<HarnessConfig> {
    let semigroups = if !args.semigroups.is_empty() {
        args.semigroups.iter().map(|p| load_semigroup(p)).collect::<CliResult<Vec<_>>>()?
    } else if let Some(size) = args.size {
        harness::roster_up_to(size)
    } else {
        harness::named_roster(&args.roster).map_err(|e| CliError::Usage(e.to_string()))?
    };
    if semigroups.is_empty() {
        return Err(CliError::Usage("the roster is empty".into()));
    }
    Ok(HarnessConfig {
        semigroups,
        max_exhaustive_n: args.max_exhaustive,
        max_structured_exhaustive_n: args.max_structured,
        samples: args.sample,
        seed: args.seed,
        fip_bound: args.fip_bound,
        ..HarnessConfig::default()
    })
}

fn text_report(r: &LawReport) -> String {
    let mut s = format!(
        "{:<50} {:<18} checked {:>8}  skipped {:>8}  violations {:>6}",
        r.law,
        serde_json::to_value(r.verdict).unwrap().as_str().unwrap(),
        r.instances_checked,
        r.skipped,
        r.violation_count
    );
    if !r.weakened.is_empty() {
        s.push_str(&format!("  weakened {}", r.weakened.join(",")));
    }
    for w in &r.violations {
        s.push_str(&format!(
            "\n    {} {} :: {}",
            w.semigroup.name.as_deref().unwrap_or("?"),
            serde_json::to_string(&w.instance).unwrap(),
            w.detail
        ));
    }
    if let Some(note) = &r.note {
        s.push_str(&format!("\n    note: {note}"));
    }
    s
}

fn render_reports(reports: &mut [LawReport], args: &SuiteArgs) -> String {
    if args.no_timing {
        for r in reports.iter_mut() {
            r.wall_time_ms = 0;
        }
    }
    let mut out = String::new();
    for r in reports.iter() {
        out.push_str(&match args.format {
            Format::Json => r.to_json_line(),
            Format::Text => text_report(r),
        });
        out.push('\n');
    }
    out
}

fn render_value(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{v}\n"),
        Format::Text => match v {
            Value::Object(map) => map.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
            other => format!("{other}\n"),
        },
    }
}

fn emit(text: &str, output: Option<&Path>) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Analyze(args) => {
            let v = analyze(&args)?;
            emit(&render_value(&v, args.format), args.output.as_deref())?;
            Ok(0)
        }
        Command::Check(args) => {
            let cfg = config(&args.suite)?;
            let filter = (!args.laws.is_empty()).then_some(args.laws.as_slice());
            let mut reports = harness::run_law_suite(&cfg, filter)?;
            let code = harness::suite_exit_code(&reports) as u8;
            emit(&render_reports(&mut reports, &args.suite), args.suite.output.as_deref())?;
            Ok(code)
        }
        Command::Hunt(args) => {
            let cfg = config(&args.suite)?;
            let report = harness::hunt_counterexamples(&args.law, &args.weaken, &cfg)?;
            emit(&render_reports(&mut [report], &args.suite), args.suite.output.as_deref())?;
            Ok(0)
        }
        Command::Gen(args) => {
            let s = standard_semigroup(args.kind, args.n)?;
            let text = format!("{}\n", serde_json::to_string(&CayleyRecord::from(&s)).unwrap());
            emit(&text, args.output.as_deref())?;
            Ok(0)
        }
        Command::Laws(args) => {
            let laws = harness::laws();
            let text = match args.format {
                Format::Json => laws.iter().map(|l| serde_json::to_string(l).unwrap() + "\n").collect::<String>(),
                Format::Text => laws
                    .iter()
                    .map(|l| {
                        let hyps: Vec<&str> = l.hypotheses.iter().map(|h| h.id).collect();
                        format!("{:<50} [{}] {}\n", l.id, hyps.join(", "), l.statement)
                    })
                    .collect(),
            };
            emit(&text, None)?;
            Ok(0)
        }
    }
}

fn apply_env() -> CliResult<()> {
    if let Ok(v) = std::env::var("WORKBENCH_MAX_N") {
        let n: usize = v.trim().parse().map_err(|_| CliError::Usage(format!("WORKBENCH_MAX_N must be an integer, got `{v}`")))?;
        set_max_enumeration_n(n)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match apply_env().and_then(|_| run(cli)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
