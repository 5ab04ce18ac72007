use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use weakmeas::adversary::scaling_experiment;
use weakmeas::weak::delta_p_for_disturbance;
use weakmeas_cli::{
    config::{EveAxis, EveKind, MessageArg},
    oracle, scaling_csv, sweep, sweep_csv, CliError, ConfigOverlay, RunConfig,
};

#[derive(Parser)]
#[command(name = "weakmeas", version, about = "Weak-measurement signaling protocols: runs, sweeps, scaling analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute one protocol cycle and emit its JSON transcript.
    Run(RunArgs),
    /// Accuracy/alarm grid over flip probabilities and sample sizes (CSV).
    Sweep(SweepArgs),
    /// Find the receiver's and the eavesdropper's working sample sizes per
    /// flip probability and report their ratio (CSV).
    Scaling(ScalingArgs),
    /// Print closed-form quantities for a pre/post/observable/width tuple.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON config file mirroring the run-config fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    protocol: Option<u8>,
    #[arg(long)]
    n: Option<usize>,
    /// Pointer width (mutually exclusive with --d).
    #[arg(long, conflicts_with = "d")]
    delta_p: Option<f64>,
    /// Target flip probability; converted to the exact pointer width.
    #[arg(long)]
    d: Option<f64>,
    #[arg(long)]
    message: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// none | frequency | intercept | weak
    #[arg(long)]
    eve: Option<String>,
    /// x | y | z (intercept attack)
    #[arg(long)]
    eve_axis: Option<String>,
    #[arg(long)]
    eve_delta_p: Option<f64>,
    #[arg(long)]
    trials: Option<u64>,
    /// Allow the weak attack against protocol 1 transit.
    #[arg(long)]
    timerev: bool,
    /// Write the transcript here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated flip probabilities.
    #[arg(long, value_delimiter = ',', required = true)]
    d_grid: Vec<f64>,
    /// Comma-separated sample sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    n_grid: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScalingArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [0.02, 0.01, 0.005, 0.0025])]
    d_grid: Vec<f64>,
    #[arg(long, default_value_t = 0.95)]
    target: f64,
    #[arg(long, default_value_t = 400)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Pre-selected state, e.g. x+ or 0.6,0,0.8-.
    #[arg(long, default_value = "x+")]
    pre: String,
    /// Post-selected state.
    #[arg(long, default_value = "y+")]
    post: String,
    /// Probed observable direction, e.g. a for (x+y)/sqrt2.
    #[arg(long, default_value = "a")]
    obs: String,
    #[arg(long, default_value_t = 5.0)]
    delta_p: f64,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(CliError::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_command(args: &RunArgs) -> Result<(), CliError> {
    let mut config = RunConfig::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(CliError::from)?;
        config = ConfigOverlay::from_json(&text)?.apply(config);
    }
    let delta_p = match (args.delta_p, args.d) {
        (Some(dp), _) => Some(dp),
        (None, Some(d)) => Some(delta_p_for_disturbance(d, 0.5).map_err(CliError::from)?),
        (None, None) => None,
    };
    let flags = ConfigOverlay {
        protocol: args.protocol,
        n: args.n,
        delta_p,
        message: args.message.as_deref().map(MessageArg::parse).transpose()?,
        seed: args.seed,
        eve: args.eve.as_deref().map(EveKind::parse).transpose()?,
        eve_axis: args.eve_axis.as_deref().map(EveAxis::parse).transpose()?,
        eve_delta_p: args.eve_delta_p,
        trials: args.trials,
        timerev: args.timerev.then_some(true),
    };
    let config = flags.apply(config);
    let started = Instant::now();
    let transcript = weakmeas_cli::run(&config)?;
    let mut text = transcript.to_json();
    text.push('\n');
    emit(&text, args.out.as_ref())?;
    eprintln!("run completed in {:.1} ms", started.elapsed().as_secs_f64() * 1e3);
    Ok(())
}

fn sweep_command(args: &SweepArgs) -> Result<(), CliError> {
    let rows = sweep(&args.d_grid, &args.n_grid, args.trials, args.seed)?;
    emit(&sweep_csv(&rows), args.out.as_ref())
}

fn scaling_command(args: &ScalingArgs) -> Result<(), CliError> {
    let report = scaling_experiment(&args.d_grid, args.target, args.trials, args.seed)
        .map_err(CliError::from)?;
    emit(&scaling_csv(&report), args.out.as_ref())?;
    eprintln!(
        "log(n_eve/n_alice) vs log(1/d) slope: {:.3}",
        report.log_ratio_slope()
    );
    Ok(())
}

fn oracle_command(args: &OracleArgs) -> Result<(), CliError> {
    let text = oracle::oracle_report(&args.pre, &args.post, &args.obs, args.delta_p)?;
    print!("{text}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(args) => run_command(args),
        Command::Sweep(args) => sweep_command(args),
        Command::Scaling(args) => scaling_command(args),
        Command::Oracle(args) => oracle_command(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
