mod commands;
mod instance;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use osquad::subset::DEFAULT_CAP;
use osquad::Error;

use instance::Source;

#[derive(Parser, Debug)]
#[command(name = "osquad", version, about = "Chordality, closures and Orlik-Solomon ideals of matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest accepted ground set.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    max_n: usize,

    /// Seed for the randomized checks of `verify`.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Print the elapsed time on stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List circuits with counts per size.
    Circuits(InstanceArgs),
    /// Chord witnesses, chordality index, and optionally an ℓ-chordality check.
    Chordality {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Close the circuits of size at most ℓ and compare with all circuits.
    Closure {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = Operator::Delta)]
        operator: Operator,
        /// Generator cutoff: circuits with at most this many elements.
        #[arg(long, default_value_t = 3)]
        l: usize,
    },
    /// Test whether the ideal is generated by circuits of size at most ℓ+1.
    Adicity {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value_t = 2)]
        l: usize,
        /// Work modulo this prime instead of over the rationals.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Cross-check one instance, or run the full battery when none is given.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Also compare graded ranks degree by degree.
        #[arg(long)]
        slow_verify: bool,
    },
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct InstanceArgs {
    /// Builtin instance: fig1, fano, K_n, C_n or W_n.
    builtin: Option<String>,
    /// Circuit list, one circuit per line.
    #[arg(long, value_name = "FILE")]
    circuits: Option<PathBuf>,
    /// GF(2) matrix: header `r n`, then r rows of n bits.
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Graph: header `d n`, then n edges `u v`.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// A JSON report (or its `instance` object) emitted earlier.
    #[arg(long, value_name = "FILE")]
    echo: Option<PathBuf>,
}

impl InstanceArgs {
    fn source(&self) -> Result<Option<Source>, Failure> {
        Ok(if let Some(name) = &self.builtin {
            Some(Source::Builtin(name.parse().map_err(|e| Failure::from_core(e, None))?))
        } else if let Some(p) = &self.circuits {
            Some(Source::Circuits(p.clone()))
        } else if let Some(p) = &self.matrix {
            Some(Source::Matrix(p.clone()))
        } else if let Some(p) = &self.graph {
            Some(Source::Graph(p.clone()))
        } else {
            self.echo.clone().map(Source::Echo)
        })
    }

    fn required(&self) -> Result<Source, Failure> {
        self.source()?.ok_or_else(|| {
            Failure::Input("no instance given: name a builtin or pass --circuits, --matrix, --graph or --echo".into())
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Operator {
    Delta,
    DeltaPrime,
}

/// Why a run did not succeed; each kind has its own exit code.
#[derive(Debug)]
pub enum Failure {
    /// Some cross-check disagreed.
    Check(String),
    Input(String),
    Cap(String),
}

impl Failure {
    fn from_core(e: Error, path: Option<&Path>) -> Self {
        let message = match path {
            Some(p) => format!("{}: {e}", p.display()),
            None => e.to_string(),
        };
        match e {
            Error::GroundSetTooLarge { .. } | Error::TooManyRows(_) => Failure::Cap(message),
            _ => Failure::Input(message),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from_core(e, None)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = commands::run(&cli);
    if cli.timing {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Check(m) => eprintln!("check failed: {m}"),
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Cap(m) => eprintln!("cap exceeded: {m}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
