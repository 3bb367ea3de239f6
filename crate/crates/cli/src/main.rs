use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heightfilter_core::report::{self, CellReport, GridSpec, VerifyOptions};
use heightfilter_core::weyl::{orbit_budget_from_env, weyl_orbit_levi_oracle};
use heightfilter_core::{r_of_m, render_table, Error, Family, RootSystem, SystemLabel, TableFormat, TableId};
use serde::Serialize;

/// Classify the subsystems of roots whose height is a multiple of m.
#[derive(Parser)]
#[command(name = "heightfilter", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify R(m) for one system.
    Classify {
        /// System label such as E7, B5 or D13.
        #[arg(long, value_parser = parse_system)]
        system: SystemLabel,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        /// Also run the exhaustive Weyl-orbit Levi test (bounded by
        /// HEIGHTFILTER_ORBIT_BUDGET).
        #[arg(long)]
        orbit_oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Classify every cell of a grid.
    Sweep {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compare every cell of a grid with its closed-form prediction.
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Perturb the prediction for one cell, e.g. E7:2.
        #[arg(long, hide = true, value_parser = parse_cell)]
        corrupt_cell: Option<(SystemLabel, usize)>,
    },
    /// Regenerate a classification table from computed data.
    Table {
        #[arg(long, value_parser = parse_table)]
        id: TableId,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args)]
struct GridArgs {
    /// Restrict to one family (A..G).
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    #[arg(long)]
    min_rank: Option<usize>,
    #[arg(long)]
    max_rank: Option<usize>,
}

impl From<&GridArgs> for GridSpec {
    fn from(g: &GridArgs) -> Self {
        GridSpec {
            family: g.family,
            min_rank: g.min_rank,
            max_rank: g.max_rank,
        }
    }
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

fn parse_system(s: &str) -> Result<SystemLabel, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    let mut chars = s.chars();
    match (chars.next().and_then(Family::from_letter), chars.next()) {
        (Some(f), None) => Ok(f),
        _ => Err(format!("unknown family {s:?}, expected one of A B C D E F G")),
    }
}

fn parse_table(s: &str) -> Result<TableId, String> {
    s.parse().map_err(|_| {
        let ids: Vec<&str> = TableId::ALL.iter().map(|t| t.name()).collect();
        format!("unknown table id {s:?}, expected one of {}", ids.join(", "))
    })
}

fn parse_cell(s: &str) -> Result<(SystemLabel, usize), String> {
    let (sys, m) = s.split_once(':').ok_or("expected SYSTEM:m")?;
    Ok((parse_system(sys)?, m.parse().map_err(|_| format!("bad m in {s:?}"))?))
}

#[derive(Serialize)]
struct WithOracle<'a> {
    #[serde(flatten)]
    doc: report::ClassificationDoc<'a>,
    orbit_levi: Option<bool>,
}

enum Failure {
    Mismatch,
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify {
            system,
            m,
            orbit_oracle,
            format,
        } => {
            let rs = RootSystem::build(system)?;
            let cell = CellReport::compute(&rs, m as usize)?;
            let orbit = if orbit_oracle {
                let sub = r_of_m(&rs, m as i64)?;
                match weyl_orbit_levi_oracle(&sub, orbit_budget_from_env()) {
                    Ok(v) => Some(v),
                    Err(e @ Error::OrbitBudgetExceeded { .. }) => {
                        eprintln!("orbit oracle skipped: {e}");
                        None
                    }
                    Err(e) => return Err(e.into()),
                }
            } else {
                None
            };
            match format {
                Format::Text => {
                    println!("{}", cell.text());
                    if let Some(v) = orbit {
                        println!("  orbit oracle: levi={v}");
                    }
                }
                Format::Json if orbit_oracle => println!(
                    "{}",
                    json(&WithOracle {
                        doc: cell.doc(),
                        orbit_levi: orbit,
                    })
                ),
                Format::Json => println!("{}", cell.to_json()),
            }
        }
        Command::Sweep { grid, format } => {
            let cells = report::sweep(&(&grid).into())?;
            match format {
                Format::Text => {
                    for c in &cells {
                        println!("{}", c.text());
                    }
                }
                Format::Json => {
                    let docs: Vec<_> = cells.iter().map(CellReport::doc).collect();
                    println!("{}", json(&docs));
                }
            }
        }
        Command::Verify {
            grid,
            format,
            corrupt_cell,
        } => {
            let opts = VerifyOptions {
                corrupt: corrupt_cell,
            };
            let report = report::verify(&(&grid).into(), opts)?;
            match format {
                Format::Text => println!("{}", report.text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if !report.all_passed() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Table { id, format } => {
            let format = match format {
                Format::Text => TableFormat::Text,
                Format::Json => TableFormat::Json,
            };
            print!("{}", render_table(id, format)?);
            if matches!(format, TableFormat::Json) {
                println!();
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) | Error::UnsupportedPattern(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
