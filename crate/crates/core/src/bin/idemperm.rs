//! Command-line front end: parses arguments and dispatches into the
//! library. Exit codes: 0 success, 1 validation failure, 2 i/o error,
//! 3 usage error.

use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use idemperm::alloc_counter::CountingAllocator;
use idemperm::array::SemanticState;
use idemperm::bench::Distribution;
use idemperm::cli::{self, CmdError, TransformOp};
use idemperm::oracle::CountFamily;
use idemperm::sorting::Algorithm;

#[global_allocator]
static ALLOCATOR: CountingAllocator = CountingAllocator;

#[derive(Parser)]
#[command(
    name = "idemperm",
    about = "Linear-time integer sorting and the idempotent-permutation transformations behind it",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sort keys in [1, n] with one of the three pipelines
    Sort(SortArgs),
    /// Apply a single transformation to an array file
    Transform(TransformArgs),
    /// Validate an array against a semantic state and print its decomposition
    Verify(VerifyArgs),
    /// Print exact family cardinalities, optionally cross-checked by enumeration
    Count(CountArgs),
    /// Run instrumented sorting trials over generated inputs
    Bench(BenchArgs),
}

#[derive(Args)]
struct SortArgs {
    /// unstable | stable-aux | stable-preserving
    #[arg(long)]
    algo: Algorithm,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    output: PathBuf,
    /// Write an instrumentation report (key=value lines) here
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    /// to-idempotent | to-perm | to-perm-quadratic | to-map | invert |
    /// assoc-permute | fill-forward | map-from-inverse | multiset-stream
    #[arg(long)]
    op: TransformOp,
    #[arg(long = "in")]
    input: PathBuf,
    /// Output file; stdout when omitted (multiset-stream always streams)
    #[arg(long = "out")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// raw-map | idempotent-map | idempotent-perm | inverse-perm | sorted-multiset
    #[arg(long)]
    state: SemanticState,
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    /// idempotent | multiset
    #[arg(long, default_value = "idempotent")]
    family: String,
    /// Also enumerate exhaustively and report MATCH/MISMATCH (n <= 8)
    #[arg(long)]
    enumerate: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long)]
    algo: Algorithm,
    /// uniform | constant | sorted | reverse-sorted | few-distinct
    #[arg(long, default_value = "uniform")]
    dist: Distribution,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn color_errors() -> bool {
    match std::env::var("IPERM_COLOR").as_deref() {
        Ok("never") => false,
        _ => std::io::stderr().is_terminal(),
    }
}

fn fail(e: CmdError) -> ExitCode {
    if color_errors() {
        eprintln!("\x1b[31merror:\x1b[0m {}", e.message);
    } else {
        eprintln!("error: {}", e.message);
    }
    ExitCode::from(e.code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(cli::EXIT_USAGE as u8)
                }
            };
        }
    };

    let mut stdout = std::io::stdout();
    let r = match cli.command {
        Command::Sort(a) => cli::cmd_sort(a.algo, &a.input, &a.output, a.report.as_deref()),
        Command::Transform(a) => {
            cli::cmd_transform(a.op, &a.input, a.output.as_deref(), &mut stdout)
        }
        Command::Verify(a) => cli::cmd_verify(a.state, &a.input, &mut stdout),
        Command::Count(a) => {
            let family = match a.family.as_str() {
                "idempotent" => CountFamily::Idempotent,
                "multiset" => CountFamily::Multiset,
                other => {
                    return fail(CmdError {
                        code: cli::EXIT_USAGE,
                        message: format!("unknown family `{other}`"),
                    })
                }
            };
            cli::cmd_count(a.n, a.k, family, a.enumerate, &mut stdout)
        }
        Command::Bench(a) => cli::cmd_bench(a.n, a.trials, a.algo, a.dist, a.seed, &mut stdout),
    };

    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}
