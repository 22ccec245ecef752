//! `p3conn`: command-line front end for P3-connectivity checks.
//!
//! Exit codes are shared by every command: 0 when the property holds or the
//! command succeeded, 1 when the property fails or a counterexample was
//! found, 2 on usage or input errors.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable holding the worker count for `verify` (default 1).
pub const WORKERS_ENV: &str = "P3CONN_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "p3conn", version, about = "P3-connectivity checks, certificates and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide P3-connectivity both ways; graph6 input may hold one graph per line.
    Check(InputArgs),
    /// List the P3 classes of the edge set.
    Classes(InputArgs),
    /// Shortest chain of induced-P3 steps between two edges.
    Chain {
        /// First edge, as `u-v`.
        from: String,
        /// Second edge, as `u-v`.
        to: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Find a homogeneous set that contains an edge.
    Module(InputArgs),
    /// Exhaustively cross-check both decisions over small graphs.
    Verify(VerifyArgs),
    /// Generate a seeded random graph.
    Gen(GenArgs),
    /// Write the graph as DOT, edges coloured by P3 class.
    Export {
        #[command(flatten)]
        input: InputArgs,
        /// Leave edges uncoloured.
        #[arg(long)]
        plain: bool,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    Edgelist,
    Graph6,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Largest order to scan (at most 8).
    #[arg(long)]
    n: usize,
    /// Smallest order to scan; defaults to `--n`.
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    connected_only: bool,
    /// One representative per isomorphism class.
    #[arg(long)]
    dedup: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Gnp,
    TriangleFree,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum, default_value_t = GenKind::Gnp)]
    kind: GenKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format (`auto` writes an edge list).
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
