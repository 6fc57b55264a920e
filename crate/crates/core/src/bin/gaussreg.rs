use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gaussreg::average::{bound_theorem4, AveragingMeasure, DualGenerator, DEFAULT_QUAD_TOL};
use gaussreg::derivative::{bound_theorem2, DerivativeOrder};
use gaussreg::harness::grid::{error_grid, unit_grid};
use gaussreg::harness::signal::TestSignal;
use gaussreg::harness::{emit, run_table, Format};
use gaussreg::multivariate::bound_theorem3;
use gaussreg::samples::SampleWindow1D;
use gaussreg::univariate::{bound_theorem1, optimal_variance, reconstruct_gauss, reconstruct_truncated, Method};
use gaussreg::{Bandwidth, Error};

#[derive(Parser)]
#[command(name = "gaussreg", version, about = "Gaussian-regularized Shannon sampling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce one of the ten benchmark tables.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=10))]
        table: u32,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Reconstruct from a sample CSV (`j,value`) on the grid {j/grid}.
    Reconstruct {
        #[arg(long, allow_negative_numbers = true)]
        delta: f64,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        method: ReconMethod,
        #[arg(long)]
        samples: PathBuf,
        #[arg(long)]
        grid: u32,
        /// Compare against a built-in reference signal and print the error report.
        #[arg(long, value_enum)]
        reference: Option<Reference>,
    },
    /// Print an a-priori error bound.
    Bound {
        #[arg(long, value_enum)]
        kind: BoundKind,
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        delta: Vec<f64>,
        /// Derivative order for `--kind deriv`.
        #[arg(long, default_value_t = 1)]
        s: u32,
        /// Averaging measure (JSON) for `--kind avg`.
        #[arg(long)]
        measure: Option<PathBuf>,
    },
    /// Evaluate the dual generator of an averaging measure.
    Phi {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        delta: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, default_value_t = DEFAULT_QUAD_TOL)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReconMethod {
    Gauss,
    Truncate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reference {
    Builtin,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Uni,
    Deriv,
    Multi,
    Avg,
}

fn single_delta(deltas: &[f64]) -> gaussreg::Result<f64> {
    match deltas {
        [d] => Ok(*d),
        _ => Err(Error::Domain(format!("expected one band limit, got {}", deltas.len()))),
    }
}

fn run(command: Command) -> gaussreg::Result<()> {
    let mut stdout = std::io::stdout().lock();
    let io_err = |source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    match command {
        Command::Bench { table, out, format } => {
            let format = match format {
                OutputFormat::Csv => Format::Csv,
                OutputFormat::Json => Format::Json,
            };
            let table = run_table(table)?;
            match out {
                Some(path) => emit(&table, format, path)?,
                None => stdout.write_all(table.render(format).as_bytes()).map_err(io_err)?,
            }
        }
        Command::Reconstruct {
            delta,
            n,
            method,
            samples,
            grid,
            reference,
        } => {
            if grid < 2 {
                return Err(Error::Domain(format!("grid resolution {grid} < 2")));
            }
            let full = SampleWindow1D::read_csv(&samples)?;
            if full.n() < n {
                return Err(Error::Domain(format!(
                    "{} holds the window n = {}, smaller than the requested n = {n}",
                    samples.display(),
                    full.n()
                )));
            }
            let window = SampleWindow1D::from_fn(n, |j| full.get(j).expect("inner window"))?;
            let params = optimal_variance(n, delta)?;
            let recon = |t: &f64| match method {
                ReconMethod::Gauss => reconstruct_gauss(&window, *t, &params),
                ReconMethod::Truncate => reconstruct_truncated(&window, *t),
            };
            let points = unit_grid(grid);
            match reference {
                Some(Reference::Builtin) => {
                    let signal = TestSignal::univariate(delta)?;
                    let report = error_grid(&points, recon, |t| signal.eval(*t))?;
                    let report = match method {
                        ReconMethod::Gauss => report
                            .with_method(Method::GaussRegularized)
                            .with_bound(bound_theorem1(n, delta)?),
                        ReconMethod::Truncate => report.with_method(Method::Truncated),
                    };
                    let text = serde_json::to_string_pretty(&report).expect("report serializes");
                    writeln!(stdout, "{text}").map_err(io_err)?;
                }
                None => {
                    writeln!(stdout, "t,value").map_err(io_err)?;
                    for t in &points {
                        writeln!(stdout, "{t},{}", recon(t)?).map_err(io_err)?;
                    }
                }
            }
        }
        Command::Bound {
            kind,
            n,
            delta,
            s,
            measure,
        } => {
            let value = match kind {
                BoundKind::Uni => bound_theorem1(n, single_delta(&delta)?)?,
                BoundKind::Deriv => bound_theorem2(DerivativeOrder::new(s)?, n, single_delta(&delta)?)?,
                BoundKind::Multi => bound_theorem3(n, &Bandwidth::new(delta)?)?,
                BoundKind::Avg => {
                    let path = measure.ok_or_else(|| Error::Domain("--kind avg needs --measure".into()))?;
                    let dual = DualGenerator::new(AveragingMeasure::load(path)?, single_delta(&delta)?)?;
                    bound_theorem4(n, &dual)?
                }
            };
            writeln!(stdout, "{value:e}").map_err(io_err)?;
        }
        Command::Phi { measure, delta, t, tol } => {
            let dual = DualGenerator::with_tolerance(AveragingMeasure::load(measure)?, delta, tol)?;
            writeln!(stdout, "{:e}", dual.phi(t)?).map_err(io_err)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
