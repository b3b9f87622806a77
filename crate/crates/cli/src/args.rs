//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Clone, Parser)]
#[command(name = "eckardt", version, about = "Eckardt points, triple lines and elliptic curves of cubic threefolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Cubic form in x0..x4, e.g. "x0^3 + x1^3 + x2^3 + x3^3 + x4^3".
    #[arg(global = true)]
    pub polynomial: Option<String>,
    /// Read the cubic form from a file.
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// A cubic from the built-in table: fermat, klein, x1..x8.
    #[arg(long, global = true, value_name = "NAME")]
    pub builtin: Option<String>,
    /// Primes for the modular computations.
    #[arg(long, global = true, value_delimiter = ',', default_value = "32003,31013,30011")]
    pub primes: Vec<u32>,
    /// Random separating forms per zero-dimensional system.
    #[arg(long, global = true, default_value_t = 5)]
    pub trials: usize,
    /// Gröbner basis size cap.
    #[arg(long, global = true, default_value_t = 20_000)]
    pub max_basis: usize,
    /// Seed for random choices.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the machine-readable report here (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Smoothness test.
    Check,
    /// Geometric Eckardt points by stratum.
    Eckardt {
        /// Also list the Eckardt points defined over Q.
        #[arg(long)]
        list_rational: bool,
    },
    /// Triple lines on the Fano surface, per Schubert cell.
    TripleLines {
        /// Only the chart p01 = 1.
        #[arg(long)]
        chart_only: bool,
        /// Only lines through this rational point, e.g. "(0:1:0:0:0)".
        #[arg(long, value_name = "POINT")]
        through: Option<String>,
    },
    /// Elliptic curves of rational Eckardt points and their inflection points.
    Elliptic {
        /// One point instead of every rational Eckardt point.
        #[arg(long, value_name = "POINT")]
        point: Option<String>,
    },
    /// Main component of the curve of second-type lines in the chart p01 = 1.
    FanoMain,
    /// A random member of the family with a triple line and no Eckardt points.
    Generate {
        /// Coefficients of the quadrics are drawn from [-b, b].
        #[arg(long, default_value_t = 3)]
        coeff_bound: u32,
    },
    /// Every stage, with the expected values for the built-in cubics.
    Report {
        /// Include the main-component stage.
        #[arg(long)]
        main_component: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Eckardt { .. } => "eckardt",
            Command::TripleLines { .. } => "triple-lines",
            Command::Elliptic { .. } => "elliptic",
            Command::FanoMain => "fano-main",
            Command::Generate { .. } => "generate",
            Command::Report { .. } => "report",
        }
    }
}
