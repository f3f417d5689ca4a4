use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use irpnl_cli::{CliError, OutputFormat, RenderOptions, RunConfig};

#[derive(Parser)]
#[command(
    name = "irpnl",
    version,
    about = "Price, risk and PNL replay for single-period rate trades"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// PV breakdown on the valuation day
    Price(RunArgs),
    /// Day-by-day valuation over the [simulation] range
    Simulate(RunArgs),
    /// Analytic theta and rho next to finite-difference values
    Greeks(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long, value_enum)]
    out: Option<Out>,
    /// Print shortest round-trip decimals instead of rounding
    #[arg(long)]
    full_precision: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Csv,
    Table,
}

type Handler = fn(&RunConfig, RenderOptions) -> Result<String, CliError>;

fn run(cli: Cli) -> Result<String, CliError> {
    let (args, command): (&RunArgs, Handler) = match &cli.command {
        Command::Price(a) => (a, irpnl_cli::price),
        Command::Simulate(a) => (a, irpnl_cli::simulate),
        Command::Greeks(a) => (a, irpnl_cli::greeks),
    };
    let config = RunConfig::load(&args.config)?;
    let format = args.out.map(|o| match o {
        Out::Csv => OutputFormat::Csv,
        Out::Table => OutputFormat::Table,
    });
    command(
        &config,
        RenderOptions::from_config(&config, format, args.full_precision),
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
