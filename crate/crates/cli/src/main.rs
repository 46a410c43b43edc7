//! `commclass`: count, list, verify and draw commutation classes of reduced
//! words in the symmetric group.
//!
//! Exit codes: 0 on success, 1 on usage or runtime errors, 2 when a result
//! disagrees with the oracle or the reference table.

mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "commclass", version, about = "Reduced words and commutation classes in S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count reduced words or commutation classes.
    Count {
        #[command(subcommand)]
        what: CountWhat,
    },
    /// Stream reduced words or commutation classes.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// One record per commutation class of the longest element.
    List(ListArgs),
    /// Draw heaps, wiring diagrams or rhombic tilings as SVG.
    Render(RenderArgs),
    /// Check pruned counts against the oracle and the reference table.
    Verify {
        /// Largest rank to check.
        #[arg(long = "n-max", visible_alias = "n", value_name = "N")]
        n_max: usize,
        #[command(flatten)]
        threads: ThreadArgs,
    },
    /// Brute-force checks.
    Oracle {
        #[command(subcommand)]
        what: OracleWhat,
    },
}

#[derive(Args, Clone)]
pub struct Target {
    /// Rank n; the target is the longest element of S_n unless --perm is given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Permutation in one-line notation, e.g. "[3,1,4,2]".
    #[arg(long)]
    pub perm: Option<String>,
}

#[derive(Args, Clone, Copy)]
pub struct ThreadArgs {
    /// Worker threads for the class search.
    #[arg(long, env = "COMMCLASS_THREADS", default_value_t = 1)]
    pub threads: usize,
}

#[derive(Subcommand)]
enum CountWhat {
    Reduced {
        #[command(flatten)]
        target: Target,
        /// Print the run report as JSON.
        #[arg(long)]
        json: bool,
    },
    Classes {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        threads: ThreadArgs,
        /// Stop after this many seconds and report a partial count.
        #[arg(long, value_name = "SECS")]
        time_limit: Option<f64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum EnumerateWhat {
    Reduced {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = WordFormat::Text)]
        format: WordFormat,
    },
    Classes {
        #[command(flatten)]
        target: Target,
        /// Include every member of each class (bounded by the oracle budget).
        #[arg(long)]
        members: bool,
        #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
        format: RecordFormat,
    },
}

#[derive(Args)]
struct ListArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    members: bool,
    #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
    format: RecordFormat,
}

#[derive(Subcommand)]
enum OracleWhat {
    /// Partition all reduced words and diff against the pruned search.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Largest number of reduced words to enumerate.
        #[arg(long, default_value_t = commclass_core::DEFAULT_ORACLE_BUDGET)]
        budget: u64,
    },
}

#[derive(Args)]
pub struct RenderArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Reduced word, as digits ("321323") or comma-separated integers.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    pub word: Option<String>,
    /// Render every commutation class of the longest element.
    #[arg(long, requires = "n")]
    pub all: bool,
    /// Rank; inferred from the word's largest letter when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    /// Output file for a single word (stdout when omitted).
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
    /// Output directory for --all.
    #[arg(long, default_value = ".")]
    pub outdir: PathBuf,
    /// Emit JSON geometry instead of SVG.
    #[arg(long)]
    pub coords: bool,
    #[arg(long, default_value_t = 40.0)]
    pub scale: f64,
    #[arg(long, default_value_t = 10.0)]
    pub margin: f64,
    /// Lay heaps out with generator labels running horizontally.
    #[arg(long)]
    pub transpose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Heap,
    Network,
    Tiling,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WordFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecordFormat {
    Text,
    Json,
    Csv,
}

/// How a successful command ended.
pub enum Outcome {
    Ok,
    Mismatch,
    /// Stopped early (time limit); exit 1 with a partial report already printed.
    Aborted,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|o| {
        out.flush()?;
        Ok(o)
    });
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Ok(Outcome::Aborted) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| c.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe))
}

fn run(cli: Cli, out: &mut impl Write) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Count { what: CountWhat::Reduced { target, json } } => commands::count_reduced(&target, json, out),
        Command::Count { what: CountWhat::Classes { target, threads, time_limit, json } } => {
            commands::count_classes(&target, threads.threads, time_limit, json, out)
        }
        Command::Enumerate { what: EnumerateWhat::Reduced { target, format } } => {
            commands::list_reduced(&target, format, out)
        }
        Command::Enumerate { what: EnumerateWhat::Classes { target, members, format } } => {
            commands::list_classes(&target, members, format, out)
        }
        Command::List(args) => {
            let target = Target { n: Some(args.n), perm: None };
            commands::list_classes(&target, args.members, args.format, out)
        }
        Command::Render(args) => commands::render(&args, out),
        Command::Verify { n_max, threads } => commands::verify(n_max, threads.threads, out),
        Command::Oracle { what: OracleWhat::Verify { target, budget } } => {
            commands::oracle_verify(&target, budget, out)
        }
    }
}
