use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use noninertial_core::sweep::{parse_real, GridSpec};

mod commands;
mod config;

use config::Config;

/// Teleportation through a Werner channel with an accelerated receiver.
#[derive(Debug, Parser)]
#[command(name = "noninertial", version, about)]
struct Cli {
    /// `key = value` file supplying defaults for any flag.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Worker threads for sweeps (defaults to one per core).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the protocol and channel correlations at one (p, r, alpha2).
    Point(PointArgs),
    /// Evaluate a grid of points and write CSV.
    Sweep(SweepArgs),
    /// Cross-check the simulator against closed forms.
    Selfcheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureSide {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    Both,
}

#[derive(Debug, Args)]
struct StateArgs {
    /// Werner mixing weight in [0, 1].
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    p: Option<f64>,
    /// Acceleration parameter in [0, pi/4]; accepts forms like `pi/8`.
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    r: Option<f64>,
    /// |alpha|^2 of the teleported qubit [default: 0.5].
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    alpha2: Option<f64>,
    /// Relative phase of beta in radians [default: 0].
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    phase: Option<f64>,
    /// Which qubit the discord measurement acts on [default: both].
    #[arg(long, value_enum, ignore_case = true)]
    measure_side: Option<MeasureSide>,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[command(flatten)]
    state: StateArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Debug, Args)]
struct GridArgs {
    /// Preset grid for figure 1, 2, 3 or 4.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    figure: Option<u8>,
    /// p grid as start:end:n.
    #[arg(long, value_name = "A:B:N")]
    p_grid: Option<GridSpec>,
    /// r grid as start:end:n.
    #[arg(long, value_name = "A:B:N")]
    r_grid: Option<GridSpec>,
    /// alpha2 grid as start:end:n.
    #[arg(long, value_name = "A:B:N")]
    alpha2_grid: Option<GridSpec>,
    /// Output CSV path; standard output if absent.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Flag values after folding in the config file.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub p: Option<f64>,
    pub r: Option<f64>,
    pub alpha2: Option<f64>,
    pub phase: Option<f64>,
    pub measure_side: MeasureSide,
    pub figure: Option<u8>,
    pub p_grid: Option<GridSpec>,
    pub r_grid: Option<GridSpec>,
    pub alpha2_grid: Option<GridSpec>,
    pub out: Option<PathBuf>,
}

fn parse_figure(s: &str) -> Result<u8, String> {
    match s.trim().parse::<u8>() {
        Ok(n @ 1..=4) => Ok(n),
        _ => Err(format!("figure must be 1, 2, 3 or 4, got {s:?}")),
    }
}

fn resolve(state: StateArgs, grid: Option<GridArgs>, cfg: &Config) -> Result<Resolved> {
    let (figure, p_grid, r_grid, alpha2_grid, out) = match grid {
        Some(g) => (g.figure, g.p_grid, g.r_grid, g.alpha2_grid, g.out),
        None => (None, None, None, None, None),
    };
    Ok(Resolved {
        p: cfg.merge(state.p, "p", parse_real)?,
        r: cfg.merge(state.r, "r", parse_real)?,
        alpha2: cfg.merge(state.alpha2, "alpha2", parse_real)?,
        phase: cfg.merge(state.phase, "phase", parse_real)?,
        measure_side: cfg
            .merge(state.measure_side, "measure-side", |s| {
                MeasureSide::from_str(s, true)
            })?
            .unwrap_or(MeasureSide::Both),
        figure: cfg.merge(figure, "figure", parse_figure)?,
        p_grid: cfg.merge(p_grid, "p-grid", str::parse)?,
        r_grid: cfg.merge(r_grid, "r-grid", str::parse)?,
        alpha2_grid: cfg.merge(alpha2_grid, "alpha2-grid", str::parse)?,
        out: cfg.merge(out, "out", |s| Ok(PathBuf::from(s)))?,
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let threads = cfg.merge(cli.threads, "threads", |s| {
        s.parse::<usize>().map_err(|e| e.to_string())
    })?;
    if let Some(n) = threads {
        if n == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("cannot configure --threads")?;
    }

    match cli.command {
        Command::Point(args) => commands::point(&resolve(args.state, None, &cfg)?),
        Command::Sweep(args) => commands::sweep(&resolve(args.state, Some(args.grid), &cfg)?),
        Command::Selfcheck => commands::selfcheck(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
