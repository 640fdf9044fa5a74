//! `dirburn` command line: argument parsing and dispatch.
//!
//! [`run`] never exits the process or touches the real stdout, so the
//! binary and the tests share one code path.

mod commands;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Outcome of one invocation. Exit code 0 means yes or success, 1 a valid
/// negative answer and 2 a usage or input error.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dirburn", version, about = "Burning number of directed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a budget, or find the minimum burning number with a witness
    Solve(SolveArgs),
    /// Check a burning sequence or assignment
    Verify(VerifyArgs),
    /// Replay a burning sequence step by step
    Simulate {
        graph: PathBuf,
        #[arg(long)]
        sequence: String,
    },
    /// Print the graph classification and the closed-form upper bound
    Bound {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a graph from one of the built-in families
    Generate {
        /// path, cycle, spider, source-star, isolated-plus-arc, empty,
        /// arborescence, single-source-dag, strongly-connected, digraph
        family: String,
        /// Family parameters, e.g. `n` or `n extra`
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build reduction instances
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Brute-force oracles for the source problems
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug)]
struct SolveArgs {
    graph: PathBuf,
    /// Decide whether ranges 1..=B suffice
    #[arg(long, conflicts_with = "ranges")]
    budget: Option<usize>,
    /// auto, brute, tree, branching or branching-plain
    #[arg(long, default_value = "auto")]
    algorithm: String,
    /// Only these nodes must burn (comma-separated labels)
    #[arg(long)]
    target: Option<String>,
    /// Explicit range multiset, e.g. `3,2,2`
    #[arg(long)]
    ranges: Option<String>,
    #[arg(long)]
    json: bool,
    /// Search top-level branches concurrently
    #[arg(long)]
    parallel: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    graph: PathBuf,
    #[arg(
        long,
        required_unless_present = "assignment",
        conflicts_with = "assignment"
    )]
    sequence: Option<String>,
    /// `range:label` pairs, e.g. `2:v1,1:v3`
    #[arg(long)]
    assignment: Option<String>,
    #[arg(long)]
    target: Option<String>,
    /// Accept sequences that pick an already burning node
    #[arg(long)]
    lenient: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum ReduceCommand {
    /// Set Cover instance to a DAG burning gadget
    SetCoverToDag {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// DAG and budget to a Set Cover instance
    DagToSetCover {
        graph: PathBuf,
        #[arg(long)]
        budget: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// 3-Partition instance to a tree burning gadget
    #[command(name = "3partition-to-tree")]
    ThreePartitionToTree {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Undirected edge list to the digraph with both orientations
    Symmetrize {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    SetCover {
        input: PathBuf,
    },
    #[command(name = "3partition")]
    ThreePartition {
        input: PathBuf,
    },
    DominatingSet {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
    },
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: EXIT_ERROR,
                    stderr: text,
                    ..Default::default()
                }
            } else {
                CommandResult {
                    exit_code: EXIT_YES,
                    stdout: text,
                    ..Default::default()
                }
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(result) => result,
        Err(e) => CommandResult {
            exit_code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
