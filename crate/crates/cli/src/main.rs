//! `acquire`: range sweeps, range queries, MRTD fitting and single-point
//! detection probabilities from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use acquire_core::io::{
    fit_report_json, format_significant, parse_scenario, read_observations_csv, write_sweep_csv,
    write_sweep_svg, Scenario, ScenarioFile, SweepTable,
};
use acquire_core::sweep::RangeCrossing;
use acquire_core::{fit_mrtd, pd_from_snr, photometry, thermal};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "acquire",
    version,
    about = "Target acquisition range-performance models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep visual detection probability over range.
    Visual(SweepArgs),
    /// Sweep thermal recognition probability over range.
    Thermal(SweepArgs),
    /// Print the range (km) where probability falls to --prob.
    Range {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        prob: f64,
    },
    /// Fit a·exp(b·SF) to an `sf,mrtd` CSV and write the report as JSON.
    FitMrtd {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        out_json: PathBuf,
    },
    /// Print the detection probability for an SNR and false-alarm rate.
    Pd {
        #[arg(long)]
        snr: f64,
        #[arg(long)]
        pfa: f64,
    },
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// First range, km.
    #[arg(long = "from")]
    from_km: f64,
    /// Last range, km.
    #[arg(long = "to")]
    to_km: f64,
    /// Range step, km.
    #[arg(long = "step")]
    step_km: f64,
    #[arg(long)]
    out_csv: PathBuf,
    #[arg(long)]
    out_svg: Option<PathBuf>,
}

fn load_scenario(path: &Path) -> Result<ScenarioFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_scenario(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn emit_table(table: &SweepTable, y_column: &str, args: &SweepArgs) -> Result<()> {
    write(&args.out_csv, &write_sweep_csv(table)?)?;
    if let Some(svg_path) = &args.out_svg {
        write(svg_path, &write_sweep_svg(table, "range_km", y_column)?)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Visual(args) => {
            let file = load_scenario(&args.scenario)?;
            let Some(scenario) = file.visual() else {
                bail!(
                    "{} is a {} scenario, expected visual",
                    args.scenario.display(),
                    file.kind().as_str()
                );
            };
            let sweep = photometry::visual_sweep(scenario, args.from_km, args.to_km, args.step_km)?;
            emit_table(&SweepTable::from_visual(&sweep), "pd", &args)
        }
        Command::Thermal(args) => {
            let file = load_scenario(&args.scenario)?;
            let Some(scenario) = file.thermal() else {
                bail!(
                    "{} is a {} scenario, expected thermal",
                    args.scenario.display(),
                    file.kind().as_str()
                );
            };
            let sweep = thermal::thermal_sweep(scenario, args.from_km, args.to_km, args.step_km)?;
            emit_table(&SweepTable::from_thermal(&sweep), "p_r", &args)
        }
        Command::Range { scenario, prob } => {
            let file = load_scenario(&scenario)?;
            let crossing = match &file.scenario {
                Scenario::Thermal(t) => thermal::recognition_range(t, prob)?,
                Scenario::Visual(v) => photometry::detection_range(v, prob)?,
            };
            match crossing {
                RangeCrossing::At { range_km } => {
                    println!("{}", format_significant(range_km, 9));
                    Ok(())
                }
                RangeCrossing::BelowAtMinimum { probability } => bail!(
                    "no crossing: probability at 1 m is {} (< {prob})",
                    format_significant(probability, 6)
                ),
                RangeCrossing::AboveAtMaximum { probability } => bail!(
                    "no crossing: probability at 100 km is still {} (>= {prob})",
                    format_significant(probability, 6)
                ),
            }
        }
        Command::FitMrtd { data, out_json } => {
            let text =
                fs::read_to_string(&data).with_context(|| format!("reading {}", data.display()))?;
            let observations = read_observations_csv(&text)
                .with_context(|| format!("parsing {}", data.display()))?;
            let report = fit_mrtd(&observations)?;
            write(&out_json, &fit_report_json(&report)?)
        }
        Command::Pd { snr, pfa } => {
            println!("{}", format_significant(pd_from_snr(snr, pfa)?, 10));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
