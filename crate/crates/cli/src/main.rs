//! `omega`: lattice densities, the leaf region and the octagon scatter.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or I/O error,
//! 3 domain error (bad polygon, parameter out of range).

mod svg;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use omega_core::dowker::lattice_densities;
use omega_core::geom::PolygonFile;
use omega_core::leaf::{arcs_csv, AlphaForm};
use omega_core::regions::classify;
use omega_core::sampler::{scatter, scatter_csv, scatter_with_threads};
use omega_core::validate::{self, Settings, GROUPS};
use omega_core::{DensityPoint, Error};

#[derive(Parser)]
#[command(
    name = "omega",
    version,
    about = "Packing and covering density pairs of convex disks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample both boundary arcs of the leaf as CSV.
    Leaf {
        /// Samples per arc (at least 2).
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(2..))]
        samples: u32,
        /// Output file, or `-` for standard output.
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Extremal hexagons and lattice densities of a centrally symmetric polygon.
    Dowker {
        /// Polygon file `{"vertices": [[x, y], ...]}`, or `-` for standard input.
        input: PathBuf,
        /// Compact single-line JSON instead of pretty-printed.
        #[arg(long)]
        json: bool,
    },
    /// Lattice density pairs of seeded random centrally symmetric polygons.
    Scatter {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Independent vertices m; polygons have 2m vertices.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..=64))]
        gon: u32,
        /// CSV output, or `-` for standard output.
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Also render the points over the region boundaries.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Region membership of the density pair (x, y), as JSON.
    Regions {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(allow_negative_numbers = true)]
        y: f64,
    },
    /// Run the invariant suite.
    Validate {
        /// Restrict to one group.
        #[arg(long, value_parser = GROUPS)]
        only: Option<String>,
        /// Use the alpha numerator without the factor u (negative control).
        #[arg(long)]
        printed_alpha: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Validation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidInput(_) | Error::Size(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn write_output(path: &PathBuf, text: &str) -> Result<(), Failure> {
    if path.as_os_str() == "-" {
        io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write to standard output: {e}")))
    } else {
        std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn worker_cap() -> Result<Option<usize>, Failure> {
    match std::env::var("OMEGA_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::Usage(format!(
                "OMEGA_THREADS must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Leaf { samples, out } => write_output(&out, &arcs_csv(samples as usize)?),
        Command::Dowker { input, json } => {
            let poly = PolygonFile::parse(&read_input(&input)?)?.to_cs()?;
            let text = lattice_densities(&poly)?.to_json_string(!json);
            write_output(&PathBuf::from("-"), &(text + "\n"))
        }
        Command::Scatter {
            count,
            seed,
            gon,
            out,
            svg,
        } => {
            let (count, m) = (count as usize, gon as usize);
            let rows = match worker_cap()? {
                Some(n) => scatter_with_threads(count, seed, m, n)?,
                None => scatter(count, seed, m)?,
            };
            write_output(&out, &scatter_csv(&rows))?;
            match svg {
                Some(path) => write_output(&path, &svg::render(&rows)),
                None => Ok(()),
            }
        }
        Command::Regions { x, y } => {
            if !(x.is_finite() && y.is_finite()) {
                return Err(Failure::Domain(format!("({x}, {y}) is not a finite point")));
            }
            let report = classify(DensityPoint::new(x, y));
            let text = serde_json::to_string_pretty(&report).expect("reports always serialize");
            write_output(&PathBuf::from("-"), &(text + "\n"))
        }
        Command::Validate {
            only,
            printed_alpha,
        } => {
            let settings = Settings {
                alpha_form: if printed_alpha {
                    AlphaForm::Printed
                } else {
                    AlphaForm::Corrected
                },
                ..Settings::default()
            };
            let outcomes = validate::run(&settings, only.as_deref());
            let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
            let mut table = String::new();
            for o in &outcomes {
                let mark = if o.passed { "PASS" } else { "FAIL" };
                table.push_str(&format!("{mark}  {:width$}  {}\n", o.name, o.detail));
            }
            let failed: Vec<&str> = outcomes
                .iter()
                .filter(|o| !o.passed)
                .map(|o| o.name)
                .collect();
            table.push_str(&format!(
                "{} checks, {} failed\n",
                outcomes.len(),
                failed.len()
            ));
            write_output(&PathBuf::from("-"), &table)?;
            if failed.is_empty() {
                Ok(())
            } else {
                eprintln!("failed: {}", failed.join(", "));
                Err(Failure::Validation)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("omega: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("omega: {msg}");
            ExitCode::from(3)
        }
    }
}
