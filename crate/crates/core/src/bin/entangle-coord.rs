use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use entangle_coord::classical::ChannelMode;
use entangle_coord::harness::{self, MatchParams, OutputFormat, StrategyKind};
use entangle_coord::CoordError;

#[derive(Parser)]
#[command(name = "entangle-coord", version, about = "Classical vs entangled coordination game experiments")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    DisjointFlips,
    BscChain,
}

impl From<Mode> for ChannelMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::DisjointFlips => ChannelMode::DisjointFlips,
            Mode::BscChain => ChannelMode::BscChain,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Classical,
    Quantum,
}

#[derive(Subcommand)]
enum Command {
    /// Shared-sequence strategy: analytic and empirical profiles.
    Classical {
        #[arg(long = "n", short = 'N', default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        q: f64,
        #[arg(long, value_enum, default_value_t = Mode::DisjointFlips)]
        mode: Mode,
        /// Defaults to N (one full cycle over the sequences).
        #[arg(long)]
        rounds_per_pair: Option<usize>,
        /// Also write X0..X3 as four lines of 0/1 characters.
        #[arg(long)]
        sequences_out: Option<PathBuf>,
    },
    /// Shared-singlet strategy: analytic and Monte Carlo profiles.
    Quantum {
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[arg(long, default_value_t = harness::DEFAULT_ROUNDS_PER_PAIR)]
        rounds_per_pair: usize,
        /// Direct joint-outcome draws per state pair (0 to skip).
        #[arg(long, default_value_t = 0)]
        samples: u64,
    },
    /// Entangled payoff over a delta grid.
    Sweep {
        #[arg(long, default_value_t = harness::DEFAULT_DELTA_MIN)]
        delta_min: f64,
        #[arg(long, default_value_t = harness::DEFAULT_DELTA_MAX)]
        delta_max: f64,
        #[arg(long, default_value_t = harness::DEFAULT_STEPS)]
        steps: usize,
    },
    /// Both bound verdicts and the payoff for a given profile.
    Bounds {
        q00: f64,
        q01: f64,
        q10: f64,
        q11: f64,
    },
    /// Deterministic-vertex enumeration and the classical optimum.
    Lhv,
    /// Dump per-round records of one match.
    Match {
        #[arg(long, value_enum, default_value_t = Strategy::Quantum)]
        strategy: Strategy,
        #[arg(long = "n", short = 'N', default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        q: f64,
        #[arg(long, value_enum, default_value_t = Mode::DisjointFlips)]
        mode: Mode,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[arg(long, default_value_t = harness::DEFAULT_ROUNDS_PER_PAIR)]
        rounds_per_pair: usize,
    },
}

fn run(cli: Cli) -> entangle_coord::Result<()> {
    let Common { seed, format, out } = cli.common;
    let format = match format {
        Format::Csv => OutputFormat::Csv,
        Format::Json => OutputFormat::Json,
    };
    let rendered = match cli.command {
        Command::Classical { n, q, mode, rounds_per_pair, sequences_out } => {
            harness::cmd_classical(n, q, mode.into(), rounds_per_pair, seed, sequences_out.as_deref())?.render(format)?
        }
        Command::Quantum { delta, rounds_per_pair, samples } => {
            harness::cmd_quantum(delta, rounds_per_pair, samples, seed)?.render(format)?
        }
        Command::Sweep { delta_min, delta_max, steps } => {
            harness::cmd_sweep(delta_min, delta_max, steps, seed)?.render(format)?
        }
        Command::Bounds { q00, q01, q10, q11 } => harness::cmd_bounds([q00, q01, q10, q11], seed)?.render(format)?,
        Command::Lhv => harness::cmd_lhv(seed)?.render(format)?,
        Command::Match { strategy, n, q, mode, delta, rounds_per_pair } => {
            let strategy = match strategy {
                Strategy::Classical => StrategyKind::Classical,
                Strategy::Quantum => StrategyKind::Quantum,
            };
            let params = MatchParams { strategy, n, q, mode: mode.into(), delta, rounds_per_pair };
            harness::cmd_match(params, seed)?.render(format)?
        }
    };
    harness::emit(&rendered, out.as_deref())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CoordError::Invariant(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
