//! `arena`: run online interval-coloring games, sweeps, oracle queries,
//! claim audits and fixture checks.

mod commands;
mod fixtures;

use std::path::PathBuf;
use std::process::ExitCode;

use arena_core::algorithms::AlgorithmSpec;
use arena_core::coord::Coord;
use arena_core::strategies::StrategySpec;
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "arena", version, about = "Online interval-graph coloring arena on exact rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Play one strategy against one algorithm.
    Run {
        /// Strategy spec, e.g. `el:k=3,a=0` or `sigma:w=8,i=1,base=el,eps=1/2`.
        #[arg(long)]
        strategy: StrategySpec,
        /// `first-fit`, `kt`, `wasteful` or `seeded:<u64>`.
        #[arg(long)]
        algorithm: AlgorithmSpec,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for the transcript, certificate and report files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one family over a range of sizes and several algorithms.
    Sweep {
        /// Family name, e.g. `el`, `b`, `kt-strategy`, `sigma`.
        #[arg(long)]
        family: String,
        /// Inclusive size range `a..b`.
        #[arg(long, value_parser = parse_range)]
        k_range: (usize, usize),
        /// Comma-separated algorithms.
        #[arg(long, value_delimiter = ',', default_value = "first-fit,kt")]
        algorithms: Vec<AlgorithmSpec>,
        /// Extra family parameters, e.g. `i=1,base=el,eps=1/2`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact game values of tiny online coloring games.
    Oracle {
        #[command(subcommand)]
        game: OracleGame,
    },
    /// Audit the claims of saved results (a JSON array of game results).
    Audit {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check the shipped fixture graphs.
    Fixtures,
}

#[derive(Subcommand, Debug)]
enum OracleGame {
    /// Unit intervals on a grid inside a window, shown to the algorithm.
    Rep {
        #[arg(long)]
        omega: usize,
        #[arg(long)]
        grid: Coord,
        /// Window ends, e.g. `--window 0 6`.
        #[arg(long, num_args = 2, allow_negative_numbers = true)]
        window: Vec<Coord>,
        #[arg(long)]
        moves: usize,
    },
    /// Graph only; the graph must stay a unit-interval graph.
    Abstract {
        #[arg(long)]
        omega: usize,
        #[arg(long)]
        moves: usize,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("`{s}` is not of the form a..b"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in `{s}`"))?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end in `{s}`"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run {
            strategy,
            algorithm,
            seed,
            out,
        } => commands::run(strategy, algorithm, seed, out.as_deref()),
        Command::Sweep {
            family,
            k_range,
            algorithms,
            params,
            seed,
            out,
        } => commands::sweep(&family, k_range, &algorithms, &params, seed, out.as_deref()),
        Command::Oracle { game } => match game {
            OracleGame::Rep {
                omega,
                grid,
                window,
                moves,
            } => commands::oracle_rep(omega, grid, &window, moves),
            OracleGame::Abstract { omega, moves } => commands::oracle_abstract(omega, moves),
        },
        Command::Audit { input } => commands::audit(&input),
        Command::Fixtures => fixtures::check(),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
