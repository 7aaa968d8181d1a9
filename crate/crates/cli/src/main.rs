use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "arcstrata", version, about = "Arc diagrams, LR-tableaux and their degeneration posets")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// The type `(α, β, γ)`, given as comma-separated parts.
#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    #[arg(short = 'a', long = "alpha", default_value = "")]
    alpha: String,
    #[arg(short = 'b', long = "beta")]
    beta: String,
    #[arg(short = 'g', long = "gamma", default_value = "")]
    gamma: String,
}

#[derive(Args, Debug, Clone)]
pub struct OptionalType {
    #[arg(short = 'a', long = "alpha")]
    alpha: Option<String>,
    #[arg(short = 'b', long = "beta")]
    beta: Option<String>,
    #[arg(short = 'g', long = "gamma")]
    gamma: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// LR-tableaux of a type.
    Lr(TypeArgs),
    /// Klein tableaux of a type, or of one of its LR-tableaux.
    Klein {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        tableau_index: Option<usize>,
    },
    /// Arc diagrams of a type with crossing numbers.
    Diagrams {
        #[command(flatten)]
        ty: TypeArgs,
        /// Draw each diagram.
        #[arg(long)]
        draw: bool,
    },
    /// The move order on the diagrams of a type or of one LR-tableau.
    Poset {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        tableau_index: Option<usize>,
    },
    /// Hasse diagram of the diagrams of a type, level by level.
    Hasse(TypeArgs),
    /// Saturated chains between two diagrams, given by index into the
    /// `diagrams` listing or as JSON.
    Chains {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Whether the poset of a type is graded. Without a type, samples
    /// vertical-strip types instead.
    Graded {
        #[command(flatten)]
        ty: OptionalType,
        #[arg(long, default_value_t = 20)]
        sample: usize,
        #[arg(long, default_value_t = 8)]
        max_beta: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the poset of a tableau with the Bruhat order.
    Bruhat {
        #[command(flatten)]
        ty: OptionalType,
        #[arg(long, conflicts_with = "x")]
        tableau_index: Option<usize>,
        /// Use the permutation tableau with this many 1-entries.
        #[arg(long)]
        x: Option<u32>,
    },
    /// Bubble-sort a source-target sequence.
    Sort {
        /// A file with the sequence, `-` for stdin, or the sequence itself.
        input: String,
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Degrees and dimensions of the variety and its strata.
    Dims(TypeArgs),
    /// Brute-force counts over finite fields.
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
        #[arg(long)]
        orbits: bool,
        #[arg(long, default_value_t = arcstrata::fforacle::DEFAULT_LIMIT)]
        limit: u64,
    },
    /// The coarser order on LR-tableaux.
    Dbar(TypeArgs),
    /// A chain of box moves from one partition up to another.
    Boxchain {
        from: String,
        to: String,
    },
}

#[derive(Debug)]
pub enum Failure {
    /// Bad input or a violated precondition.
    Usage(String),
    /// `verify` found a failing identity.
    Verification(String),
    Internal(String),
}

impl From<arcstrata::Error> for Failure {
    fn from(e: arcstrata::Error) -> Self {
        match e {
            arcstrata::Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match commands::run(&cli.command, cli.format, &argv[1..]) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

pub fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok(s);
    }
    let path = PathBuf::from(input);
    if path.is_file() {
        return std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())));
    }
    Ok(input.to_string())
}
