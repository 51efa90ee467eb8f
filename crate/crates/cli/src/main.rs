//! `drdom`: double Roman domination and bondage from the command line.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use input::GraphInput;

#[derive(Parser, Debug)]
#[command(name = "drdom", version, about = "Exact double Roman domination and bondage numbers")]
struct Cli {
    /// Worker threads (default: all cores). Results do not depend on this.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    /// Write the JSON report here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Wall-clock budget for exact searches, in seconds
    #[arg(long, global = true, value_name = "SECONDS")]
    budget: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute γ_dR with a minimum labeling
    Gamma {
        #[command(flatten)]
        input: GraphInput,
        /// Use exhaustive enumeration instead of branch and bound
        #[arg(long)]
        oracle: bool,
        /// With --oracle, enumerate labels {0,1,2,3} instead of {0,2,3}
        #[arg(long, requires = "oracle")]
        with_ones: bool,
    },
    /// Compute b_dR with a minimum edge set whose removal raises γ_dR
    Bondage {
        #[command(flatten)]
        input: GraphInput,
        /// Largest edge subset to try before giving up
        #[arg(long, value_name = "K", default_value_t = 8)]
        max_subset_size: usize,
        /// Write the witness as a certificate file
        #[arg(long, value_name = "PATH")]
        cert: Option<PathBuf>,
    },
    /// Evaluate every upper bound on b_dR that applies to the graph
    Bounds {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Build the bipartite instance for a 3-SAT formula
    Reduce {
        /// DIMACS CNF file
        #[arg(long, value_name = "FILE")]
        cnf: PathBuf,
        /// Write the graph in graph6
        #[arg(long, value_name = "PATH")]
        emit_g6: Option<PathBuf>,
        /// Write the vertex roles, one "index role" pair per line
        #[arg(long, value_name = "PATH")]
        roles: Option<PathBuf>,
        /// Check the weight bounds with certificates and exact search
        #[arg(long)]
        verify: bool,
    },
    /// Run the exhaustive consistency audit
    Verify {
        /// Largest order for the connected-graph sweeps
        #[arg(long, value_name = "N", default_value_t = 6)]
        max_n: usize,
        /// Largest order for the certificate sweep
        #[arg(long, value_name = "N", default_value_t = 5)]
        max_certificate_n: usize,
        /// Check the family formulas
        #[arg(long)]
        families: bool,
        /// Sweep all labeled trees up to this order
        #[arg(long, value_name = "N", num_args = 0..=1, default_missing_value = "9")]
        trees: Option<usize>,
        /// Sweep all labeled connected graphs up to --max-n
        #[arg(long)]
        enumerate: bool,
    },
}

/// Why a run stopped short of success.
#[derive(Debug)]
pub enum Failure {
    /// A check ran and failed; the report was still written.
    Check,
    Input(String),
    Resource(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Check => 1,
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

impl From<drdom::Error> for Failure {
    fn from(e: drdom::Error) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Check => {}
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Resource(msg) => eprintln!("resource limit: {msg}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget = match cli.budget {
        Some(s) if !(s.is_finite() && s > 0.0) => return Err(Failure::Input(format!("invalid budget {s}"))),
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.threads {
        if k == 0 {
            return Err(Failure::Input("--threads must be at least 1".into()));
        }
        builder = builder.num_threads(k);
    }
    let pool = builder.build().map_err(|e| Failure::Resource(e.to_string()))?;
    let ctx = commands::Context { budget, json: cli.json };
    pool.install(|| commands::dispatch(&ctx, cli.command))
}
