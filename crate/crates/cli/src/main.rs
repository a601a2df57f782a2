mod commands;
mod expected;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matgor::Error;

#[derive(Parser, Debug)]
#[command(name = "matgor", version, about = "Gorenstein algebras, lattices of flats and Groebner fans of matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Built-in matroid: m22, m23, m32, fivevec, fano, plane3, u24 or boolean:N.
    #[arg(long, global = true, conflicts_with = "matroid")]
    pub builtin: Option<String>,
    /// JSON matroid description.
    #[arg(long, global = true)]
    pub matroid: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Allow the expensive computations on larger inputs (also MATGOR_BIG=1).
    #[arg(long, global = true, env = "MATGOR_BIG", value_parser = clap::builder::FalseyValueParser::new())]
    pub big: bool,
    /// Include wall-clock timings (makes the report non-deterministic).
    #[arg(long, global = true)]
    pub timings: bool,
    /// Write the report (for `fan`, the fan) to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Matroid axioms, rank, flats and the equivalence classes of independent sets.
    CheckAxioms,
    /// Hilbert vectors of Q/Ann Φ_M and Q/J_M, Gorenstein property, extra generators.
    Algebra,
    /// Checks that Λ_M is a Gröbner basis under random and structured orders.
    Ugb {
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Strong Lefschetz property at a point.
    Lefschetz {
        /// Comma-separated rationals, one per element; defaults to all ones.
        #[arg(long)]
        point: Option<String>,
        #[arg(long, value_enum, default_value_t = SlpMethod::Both)]
        method: SlpMethod,
        /// Quotient for the rank method.
        #[arg(long, value_enum, default_value_t = IdealArg::Ann)]
        ideal: IdealArg,
    },
    /// Sperner property of the lattice of flats.
    Sperner {
        #[arg(long, value_enum, default_value_t = SpernerMethod::Both)]
        method: SpernerMethod,
    },
    /// Lattice-of-flats predicates.
    Lattice,
    /// Gröbner fan restricted to H.
    Fan {
        #[arg(long, value_enum, default_value_t = FanIdeal::Jm)]
        ideal: FanIdeal,
        /// Also write the base polytope in nOFF format.
        #[arg(long)]
        off: Option<PathBuf>,
    },
    /// Support function and hypersurface identities.
    Tropical {
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Every check plus the cross-checks between them.
    ReportAll {
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlpMethod {
    Rank,
    Hessian,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealArg {
    Ann,
    Jm,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpernerMethod {
    Dilworth,
    Lefschetz,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FanIdeal {
    Jm,
    Ann,
    Phi,
}

/// Failures that end the run, with their exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Guard(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded(_) => Failure::Guard(e.to_string()),
            Error::Consistency(_) | Error::TiedWeight => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = commands::command_name(&cli.command);
    match commands::run(&cli) {
        Ok(code) => code,
        Err(f) => {
            let (kind, msg, code) = match f {
                Failure::Input(m) => ("invalid_input", m, 2),
                Failure::Guard(m) => ("guard_exceeded", m, 3),
                Failure::Internal(m) => ("check_failed", m, 1),
            };
            let payload = serde_json::json!({"error": {"check": name, "kind": kind, "message": msg}});
            println!("{}", serde_json::to_string_pretty(&payload).expect("json"));
            ExitCode::from(code)
        }
    }
}
