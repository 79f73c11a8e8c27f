//! `sfword`: square-free word irreducibility tools.
//!
//! Exit status is 0 on success, 1 when a queried verdict is negative or a
//! library error occurs, and 2 on usage errors.

mod commands;
mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "sfword",
    version,
    about = "Square-free ternary words and their irreducibility"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
struct Threads {
    /// Worker threads (default: all cores).
    #[arg(long, env = "SFWORD_THREADS", default_value_t = 0)]
    threads: usize,
}

#[derive(Debug, Args, Clone, Copy)]
struct Json {
    /// Emit JSON (one object per line for batch input).
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test words for squares. Reads words from stdin when none are given.
    Check {
        words: Vec<String>,
        #[command(flatten)]
        json: Json,
    },
    /// Delete an interior factor and print the remaining word.
    Delete {
        word: String,
        #[arg(long)]
        start: usize,
        #[arg(long, default_value_t = 1)]
        length: usize,
        #[command(flatten)]
        json: Json,
    },
    /// Test words for irreducible square-freeness.
    Irreducible {
        words: Vec<String>,
        #[command(flatten)]
        json: Json,
    },
    /// Test words for k-irreducible square-freeness.
    #[command(name = "k-irreducible")]
    KIrreducible {
        #[arg(short, long)]
        k: usize,
        words: Vec<String>,
        #[command(flatten)]
        json: Json,
    },
    /// Stream all square-free words of a given length.
    Enumerate {
        #[arg(long)]
        length: usize,
        /// Print only the number of words.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        threads: Threads,
    },
    /// Count irreducibly square-free words per length, up to symmetry.
    Census {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, conflicts_with_all = ["json", "table"])]
        csv: bool,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
        /// Print canonical representatives (one word per line, or inside the JSON rows).
        #[arg(long)]
        representatives: bool,
        #[command(flatten)]
        threads: Threads,
    },
    /// Build a verified irreducibly square-free word of the given length.
    Construct {
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        json: Json,
    },
    /// Morphism operations on a spec file or a built-in morphism.
    Morphism {
        /// Morphism spec file: three lines of the form `0 -> 012`.
        #[arg(long, global = true, conflicts_with = "builtin")]
        spec: Option<PathBuf>,
        /// Built-in morphism.
        #[arg(long, global = true, value_parser = ["tau", "phi", "alpha3"])]
        builtin: Option<String>,
        #[command(subcommand)]
        op: MorphismOp,
    },
    /// Re-check every finitely checkable claim and print a pass/fail matrix.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Prefix length used for claims about infinite words.
        #[arg(long, default_value_t = sfword::construct::DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        threads: Threads,
    },
}

#[derive(Debug, Subcommand)]
enum MorphismOp {
    /// Apply the morphism to a word.
    Apply { word: String },
    /// Print the n-th power in spec format.
    Power { n: usize },
    /// Prefix of the fixed point from a seed letter.
    Fixpoint {
        #[arg(long, default_value = "0")]
        seed: String,
        #[arg(long)]
        length: usize,
    },
    /// Square-freeness preservation on all square-free words of length <= 5.
    Crochemore {
        #[command(flatten)]
        json: Json,
    },
    /// The alignment property.
    Align {
        #[command(flatten)]
        json: Json,
    },
    /// Crochemore test plus k-irreducibility of every image(a)·image(b), a != b.
    Procedure1 {
        #[arg(short, long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        json: Json,
    },
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    /// A queried verdict was negative.
    Negative,
}

/// Failure modes mapped onto exit codes.
pub enum Failure {
    Usage(String),
    Library(sfword::Error),
    Io(io::Error),
}

impl From<sfword::Error> for Failure {
    fn from(e: sfword::Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = commands::run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Status::Ok), Ok(())) => ExitCode::SUCCESS,
        (Ok(Status::Negative), Ok(())) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            eprintln!("hint: run `sfword --help` for usage");
            ExitCode::from(2)
        }
        (Err(Failure::Library(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (Err(Failure::Io(e)), _) | (_, Err(e)) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
