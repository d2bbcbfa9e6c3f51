use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tritrop_cli::commands::{cmd_analyze, cmd_random, cmd_render, AnalysisConfig, Source};
use tritrop_cli::CliError;

#[derive(Parser)]
#[command(name = "tritrop", version, about = "Tritangent classes of smooth tropical (3,3)-curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a curve and write its JSON report.
    Analyze {
        /// Coefficient file.
        #[arg(long, conflicts_with = "seed", required_unless_present = "seed")]
        input: Option<PathBuf>,
        /// Seed of a random curve.
        #[arg(long)]
        seed: Option<u64>,
        /// Write one SVG picture per class (needs --out).
        #[arg(long, requires = "out")]
        render: bool,
        /// Output directory for report.json and pictures.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Perturbation retries for non-generic input.
        #[arg(long, default_value_t = 3)]
        retries: u32,
        /// Also check invariance under the eight symmetries of the square.
        #[arg(long)]
        d4: bool,
    },
    /// Print the coefficient file of a random smooth curve.
    Random {
        /// Seed.
        #[arg(long)]
        seed: u64,
    },
    /// Draw one class of a saved report as SVG.
    Render {
        /// Report file.
        #[arg(long)]
        report: PathBuf,
        /// Class id.
        #[arg(long)]
        class: usize,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { input, seed, render, out, retries, d4 } => {
            let source = match (input, seed) {
                (Some(p), _) => Source::Input(p),
                (None, Some(s)) => Source::Seed(s),
                (None, None) => return Err(CliError::Input("one of --input or --seed is required".into())),
            };
            let (_, status) = cmd_analyze(&AnalysisConfig { source, retries, render, out, d4 })?;
            status
        }
        Command::Random { seed } => {
            println!("{}", serde_json::to_string_pretty(&cmd_random(seed))?);
            Ok(())
        }
        Command::Render { report, class, out } => {
            let svg = cmd_render(&report, class)?;
            match out {
                Some(p) => std::fs::write(p, svg)?,
                None => print!("{svg}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tritrop: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
