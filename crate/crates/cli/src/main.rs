//! `trip`: experiment runner for triangle partition maps.
//!
//! Exit status is 0 when every check passes, 1 when a tolerance is missed and
//! 2 for usage errors or triples without the requested data.

mod commands;
mod config;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{CommonArgs, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "trip", version, about = "Triangle partition map experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Round-trip every branch through the forward map and digit extraction.
    VerifyBranches {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Eigenfunction residuals of the transfer operator on a grid.
    Eigen {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Digit distribution from the invariant density, optionally simulated.
    Gk {
        #[command(flatten)]
        common: CommonArgs,
        /// Also run Monte Carlo orbits.
        #[arg(long)]
        simulate: bool,
    },
    /// Kernel identity and Laguerre expansion checks.
    Hilbert {
        #[command(flatten)]
        common: CommonArgs,
        /// Profile function, `eta0` to `eta5`.
        #[arg(long, default_value = "eta0")]
        phi: String,
    },
    /// Boundedness of the weighted branch sums.
    SumBounds {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Digits and points along one orbit.
    Orbit {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
    },
    /// Which tabulated data each triple has.
    ListTriples {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::VerifyBranches { common } => commands::verify_branches(&RunConfig::resolve("verify-branches", &common)?),
        Command::Eigen { common } => commands::eigen(&RunConfig::resolve("eigen", &common)?),
        Command::Gk { common, simulate } => commands::gk(&RunConfig::resolve("gk", &common)?, simulate),
        Command::Hilbert { common, phi } => commands::hilbert(&RunConfig::resolve("hilbert", &common)?, &phi),
        Command::SumBounds { common } => commands::sum_bounds(&RunConfig::resolve("sum-bounds", &common)?),
        Command::Orbit { common, x, y } => commands::orbit(&RunConfig::resolve("orbit", &common)?, x, y),
        Command::ListTriples { common } => commands::list_triples(&RunConfig::resolve("list-triples", &common)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
