//! `tangle`: evaluate sliced tangle diagrams and braid words exactly, compute
//! link invariants, run the self-check suites, and integrate KZ transport.
//!
//! Results go to standard output, diagnostics to standard error. Exit codes:
//! 0 success, 1 syntax/usage failure, 2 validation failure (readable input
//! that names no valid diagram, or an evaluation precondition not met).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind as ClapError;
use clap::{Args, Parser, Subcommand, ValueEnum};

use tangle_cli::formats::{self, ErrorKind, Input, ParseError};
use tangle_cli::report;
use tangle_cli::suites::{self, Suite, SuiteOptions};
use tangle_core::evaluator::EvalError;
use tangle_core::kz::{braid_path, transport, KzConfig, KzError};
use tangle_core::tangle::TangleError;
use tangle_core::{default_theory, eval, link_invariant, SlicedDiagram};

#[derive(Parser)]
#[command(
    name = "tangle",
    version,
    about = "Exact evaluation of tangle diagrams, link invariants, and KZ transport"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a diagram to its matrix (a scalar for closed diagrams)
    Eval(EvalArgs),
    /// Writhe-normalized link invariant of a closed diagram
    Invariant(InvariantArgs),
    /// Run a self-check suite
    Check(CheckArgs),
    /// Integrate KZ parallel transport along a braid path
    Kz(KzArgs),
    /// Parse an input and print its canonical form
    Parse(ParseArgs),
}

/// Where the diagram comes from: exactly one source.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Inline braid text, e.g. 'braid n=2: 1 1 1'
    #[arg(long, value_name = "TEXT")]
    braid: Option<String>,
    /// Sliced-diagram file (.tng)
    #[arg(long, value_name = "FILE")]
    sliced: Option<PathBuf>,
    /// Input file; the leading keyword picks the format
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Closure {
    /// Join each strand top around to bottom
    Trace,
    /// Cap adjacent pairs at top and bottom
    Plat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VarChoice {
    /// Rewrite in q when every exponent allows it
    Q,
    /// Stay in the bracket variable
    A,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Close the diagram before evaluating
    #[arg(long, value_enum, value_name = "KIND")]
    closure: Option<Closure>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct InvariantArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Close the diagram before evaluating
    #[arg(long, value_enum, value_name = "KIND")]
    closure: Option<Closure>,
    /// Variable of the reported polynomial
    #[arg(long, value_enum, default_value = "q")]
    var: VarChoice,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Which suite to run
    #[arg(long, value_enum)]
    suite: SuiteName,
    /// Sample count for the randomized suites
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Longest braid word in the oracle sweep
    #[arg(long, default_value_t = 4)]
    max_crossings: usize,
    /// Seed for the randomized suites [default: $TANGLE_SEED or 0]
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Theory,
    Functoriality,
    Monoidality,
    Moves,
    Oracle,
    Tqft1,
    KzFlatness,
    All,
}

impl SuiteName {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteName::Theory => vec![Suite::Theory],
            SuiteName::Functoriality => vec![Suite::Functoriality],
            SuiteName::Monoidality => vec![Suite::Monoidality],
            SuiteName::Moves => vec![Suite::Moves],
            SuiteName::Oracle => vec![Suite::Oracle],
            SuiteName::Tqft1 => vec![Suite::Tqft1],
            SuiteName::KzFlatness => vec![Suite::KzFlatness],
            SuiteName::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Args)]
struct KzArgs {
    /// Braid to transport along [default: 'braid n=2: 1 -1']
    #[arg(long, value_name = "TEXT")]
    braid: Option<String>,
    /// Coupling constant of the connection
    #[arg(long, default_value_t = 0.1)]
    h: f64,
    /// Integration steps per path segment
    #[arg(long, default_value_t = 128)]
    steps: usize,
    /// Check the braid relation s1 s2 s1 = s2 s1 s2 instead of transporting
    #[arg(long)]
    relation: bool,
    /// Strand count for --relation
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Tolerance for --relation
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ParseArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// A failure with its exit code: 1 for syntax, 2 for validation.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure {
            code: match e.kind {
                ErrorKind::Syntax => 1,
                ErrorKind::Validation => 2,
            },
            message: e.to_string(),
        }
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Failure {
        Failure::validation(e.to_string())
    }
}

impl From<TangleError> for Failure {
    fn from(e: TangleError) -> Failure {
        Failure::validation(e.to_string())
    }
}

impl From<KzError> for Failure {
    fn from(e: KzError) -> Failure {
        Failure::validation(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ClapError::DisplayHelp | ClapError::DisplayVersion) {
                print!("{}", e);
                return ExitCode::SUCCESS;
            }
            eprint!("{}", e);
            return ExitCode::from(1);
        }
    };
    let result = match cli.cmd {
        Cmd::Eval(args) => cmd_eval(args),
        Cmd::Invariant(args) => cmd_invariant(args),
        Cmd::Check(args) => cmd_check(args),
        Cmd::Kz(args) => cmd_kz(args),
        Cmd::Parse(args) => cmd_parse(args),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(args: &InputArgs) -> Result<Input, Failure> {
    let parse_file = |path: &Path| -> Result<Input, Failure> {
        let text = std::fs::read_to_string(path).map_err(|e| Failure {
            code: 1,
            message: format!("{}: {}", path.display(), e),
        })?;
        Ok(formats::parse_auto(&text)?)
    };
    if let Some(text) = &args.braid {
        let (word, strands) = formats::parse_braid(text)?;
        Ok(Input::Braid { word, strands })
    } else if let Some(path) = &args.sliced {
        let text = std::fs::read_to_string(path).map_err(|e| Failure {
            code: 1,
            message: format!("{}: {}", path.display(), e),
        })?;
        Ok(Input::Sliced(formats::parse_sliced(&text)?))
    } else {
        parse_file(args.file.as_ref().expect("clap enforces one input source"))
    }
}

fn close(d: SlicedDiagram, closure: Option<Closure>) -> Result<SlicedDiagram, Failure> {
    match closure {
        None => Ok(d),
        Some(Closure::Trace) => Ok(d.closure_trace()?),
        Some(Closure::Plat) => Ok(d.closure_plat()?),
    }
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode, Failure> {
    let d = close(read_input(&args.input)?.into_diagram(), args.closure)?;
    let m = eval(&d, &default_theory())?;
    match args.format {
        Format::Text => println!("{}", report::matrix_text(&m)),
        Format::Json => println!("{}", report::matrix_json(&m)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_invariant(args: InvariantArgs) -> Result<ExitCode, Failure> {
    let d = close(read_input(&args.input)?.into_diagram(), args.closure)?;
    let r = link_invariant(&d, &default_theory())?;
    let want_q = args.var == VarChoice::Q;
    match args.format {
        Format::Text => println!("{}", report::invariant_text(&r, want_q)),
        Format::Json => println!("{}", report::invariant_json(&r, want_q)),
    }
    Ok(ExitCode::SUCCESS)
}

fn seed_or_env(seed: Option<u64>) -> u64 {
    seed.or_else(|| std::env::var("TANGLE_SEED").ok()?.parse().ok()).unwrap_or(0)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, Failure> {
    let opts = SuiteOptions {
        samples: args.samples,
        seed: seed_or_env(args.seed),
        max_crossings: args.max_crossings,
    };
    let outcomes: Vec<_> = args.suite.suites().into_iter().map(|s| suites::run(s, &opts)).collect();
    let pass = outcomes.iter().all(|o| o.pass());
    match args.format {
        Format::Text => {
            let texts: Vec<String> = outcomes.iter().map(|o| o.text()).collect();
            println!("{}", texts.join("\n\n"));
        }
        Format::Json => match outcomes.as_slice() {
            [only] => println!("{}", only.to_json()),
            many => println!(
                "{}",
                serde_json::json!({
                    "schema": 1,
                    "seed": opts.seed,
                    "pass": pass,
                    "suites": many.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
                })
            ),
        },
    }
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_kz(args: KzArgs) -> Result<ExitCode, Failure> {
    if args.relation {
        let config = KzConfig::default_config(args.n, args.h)?;
        let r = tangle_core::kz::braid_relation_check(&config, args.steps, args.tol)?;
        match args.format {
            Format::Text => println!("{}", report::relation_text(&r)),
            Format::Json => println!("{}", report::relation_json(&r)),
        }
        return Ok(if r.pass { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    let text = args.braid.as_deref().unwrap_or("braid n=2: 1 -1");
    let (word, strands) = formats::parse_braid(text)?;
    let config = KzConfig::default_config(strands, args.h)?;
    let path = braid_path(&word, strands, 0.5)?;
    let t = transport(&config, &path, args.steps)?;
    match args.format {
        Format::Text => println!("{}", report::transport_text(&t)),
        Format::Json => println!("{}", report::transport_json(&t)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_parse(args: ParseArgs) -> Result<ExitCode, Failure> {
    let input = read_input(&args.input)?;
    let (format, canonical) = match &input {
        Input::Braid { word, strands } => ("braid", formats::serialize_braid(word, *strands)),
        Input::Sliced(d) => ("sliced", formats::serialize(d)),
    };
    // canonical text must itself parse back to the same structure
    let reread = formats::parse_auto(&canonical).map_err(|e| Failure {
        code: 2,
        message: format!("canonical form failed to round-trip: {}", e),
    })?;
    if reread != input {
        return Err(Failure::validation("canonical form round-trips to a different diagram"));
    }
    match args.format {
        Format::Text => println!("{}", canonical),
        Format::Json => {
            let d = input.into_diagram();
            println!(
                "{}",
                serde_json::json!({
                    "schema": 1,
                    "format": format,
                    "canonical": canonical,
                    "source": d.source().to_string(),
                    "target": d.target().to_string(),
                    "slices": d.num_slices(),
                    "writhe": d.writhe(),
                })
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
