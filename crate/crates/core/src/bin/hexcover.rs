use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hexcover_core::combined::DEFAULT_BUDGET;
use hexcover_core::io::{cmd_bench, cmd_bounds, cmd_cover, cmd_verify, CliError, CoverArgs};
use hexcover_core::placement::Algorithm;

#[derive(Parser)]
#[command(
    name = "hexcover",
    version,
    about = "Cover polygons with unit discs on a hexagonal lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a covering and write it as JSON.
    Cover {
        #[arg(long)]
        input: PathBuf,
        /// fixed, combined, nonconvex or sweep
        #[arg(long, default_value = "fixed")]
        algorithm: Algorithm,
        /// Orientations tried by the sweep algorithm.
        #[arg(long, default_value_t = 720)]
        sweep_angles: usize,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Cap on surface triples examined by the joint search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print upper and lower bounds on the number of discs.
    Bounds {
        #[arg(long)]
        input: PathBuf,
    },
    /// Check that a covering file covers its polygon.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        covering: PathBuf,
        /// Boundary sample count.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Run the randomized benchmark and write a CSV report.
    Bench {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_values_t = [5, 10, 20])]
        sizes: Vec<u32>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long)]
        report: PathBuf,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Cover {
            input,
            algorithm,
            sweep_angles,
            output,
            svg,
            budget,
        } => {
            let args = CoverArgs {
                input,
                algorithm,
                sweep_angles,
                output,
                svg,
                budget,
            };
            let file = cmd_cover(&args)?;
            println!(
                "{} discs ({}), theta {} rad, written to {}",
                file.count,
                file.algorithm,
                file.theta,
                args.output.display()
            );
        }
        Command::Bounds { input } => {
            let b = cmd_bounds(&input)?;
            println!("toth_upper {}", b.toth_upper);
            println!("improved_upper {}", b.improved_upper);
            println!("lower_asymptotic {:.6}", b.lower_asymptotic);
            println!("lower_explicit {:.6}", b.lower_explicit);
            println!("ratio_bound {:.6}", b.ratio_bound);
        }
        Command::Verify {
            input,
            covering,
            samples,
        } => {
            let r = cmd_verify(&input, &covering, samples)?;
            println!("valid {}", r.valid);
            println!("max_violation_distance {:e}", r.max_violation_distance);
            println!("cells_checked {}", r.cells_checked);
            println!("samples_checked {}", r.samples_checked);
            if let Some(w) = r.uncovered_witness {
                println!("uncovered_witness {} {}", w.x, w.y);
            }
            if !r.valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            seed,
            sizes,
            trials,
            report,
        } => {
            let rows = cmd_bench(seed, &sizes, trials, &report)?;
            println!("{} rows written to {}", rows.len(), report.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
