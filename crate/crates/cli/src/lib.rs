//! Command-line front end: builds decompositions, runs the solvers and
//! regenerates the comparison tables and error sweeps.

pub mod experiments;
pub mod output;
pub mod rhs;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use tpbessel::bd::{format_bdf, parse_bdf};
use tpbessel::bessel::{Basis, CollocationSpec};
use tpbessel::scalar::DEFAULT_TARGET_TOLERANCE;
use tpbessel::solvers::{self, SignPatternVector, SpectrumKind};
use tpbessel::{BidiagonalDecomposition, NodeSequence, PrecisionPolicy, Rational};

use experiments::{FigureId, Rhs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] tpbessel::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for invalid input, 3 for convergence failure, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(tpbessel::Error::NoConvergence(_)) => 3,
            CliError::Core(_) | CliError::InvalidDecomposition(_) | CliError::Usage(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "tpbessel",
    version,
    about = "Accurate computations with Bessel collocation matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Target relative tolerance of the multiprecision results.
    #[arg(long, default_value_t = DEFAULT_TARGET_TOLERANCE)]
    pub tol: f64,
    /// Seed for the random right-hand side.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct MatrixChoice {
    #[arg(long, default_value = "bessel")]
    pub basis: Basis,
    /// Comma-separated rational nodes, e.g. `1,3/2,2`.
    #[arg(long, conflicts_with = "n")]
    pub nodes: Option<NodeSequence>,
    /// Use the nodes `1, 2, ..., n`.
    #[arg(long)]
    pub n: Option<usize>,
}

impl MatrixChoice {
    fn spec(&self, default_n: Option<usize>) -> CliResult<CollocationSpec> {
        let nodes = match (&self.nodes, self.n.or(default_n)) {
            (Some(nodes), _) => nodes.clone(),
            (None, Some(n)) => NodeSequence::integers(n)?,
            (None, None) => {
                return Err(CliError::Usage("either --nodes or --n is required".into()))
            }
        };
        Ok(CollocationSpec::new(self.basis, nodes))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the decomposition of a collocation matrix as a BDF file.
    GenBd {
        #[command(flatten)]
        matrix: MatrixChoice,
        #[command(flatten)]
        common: Common,
    },
    /// Eigenvalues of the matrix stored in a BDF file.
    Eig {
        bdf: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Singular values of the matrix stored in a BDF file.
    Svd {
        bdf: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Exact inverse of the matrix stored in a BDF file.
    Inv {
        bdf: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Exact solution of a linear system given its BDF file.
    Solve {
        bdf: PathBuf,
        /// File of rational tokens separated by whitespace or commas.
        #[arg(long)]
        rhs: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Comparison table: 1 eigenvalues, 2 singular values, 3 inverse,
    /// 4 alternating right-hand side, 5 positive right-hand side.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        id: u8,
        #[command(flatten)]
        matrix: MatrixChoice,
        #[command(flatten)]
        common: Common,
    },
    /// Error sweep over orders 2..=n-max: val, inv, valR or invR.
    /// With --out, the CSV goes there and the chart next to it with an `.svg` extension.
    Figure {
        #[arg(long)]
        id: FigureId,
        #[arg(long, default_value_t = 15)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_to(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => write_to(path, text),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Parses and validates a BDF file.
pub fn load_bd(path: &Path) -> CliResult<BidiagonalDecomposition> {
    let bd = parse_bdf(&read(path)?)?;
    let violations = bd.validate();
    if violations.is_empty() {
        Ok(bd)
    } else {
        let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Err(CliError::InvalidDecomposition(list.join("; ")))
    }
}

fn parse_rhs(text: &str) -> CliResult<Vec<Rational>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Rational>().map_err(CliError::from))
        .collect()
}

fn table(id: u8, spec: &CollocationSpec, common: &Common) -> CliResult<String> {
    Ok(match id {
        1 => output::comparison_csv(&experiments::spectrum_comparison(
            spec,
            SpectrumKind::Eigenvalues,
            common.tol,
        )?),
        2 => output::comparison_csv(&experiments::spectrum_comparison(
            spec,
            SpectrumKind::SingularValues,
            common.tol,
        )?),
        3 => output::inverse_csv(&experiments::inverse_comparison(spec)?),
        4 => output::comparison_csv(&experiments::solve_comparison(
            spec,
            Rhs::Alternating,
            common.seed,
        )?),
        _ => output::comparison_csv(&experiments::solve_comparison(
            spec,
            Rhs::Positive,
            common.seed,
        )?),
    })
}

fn figure_title(id: FigureId) -> &'static str {
    match id {
        FigureId::Val => "Relative error of the smallest eigenvalue and singular value, Bessel",
        FigureId::Inv => "Relative errors of the inverse, Bessel",
        FigureId::ValR => {
            "Relative error of the smallest eigenvalue and singular value, reverse Bessel"
        }
        FigureId::InvR => "Relative errors of the inverse, reverse Bessel",
    }
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::GenBd { matrix, common } => {
            let bd = matrix.spec(None)?.bidiagonal()?;
            emit(&common.out, &format_bdf(&bd))
        }
        Command::Eig { bdf, common } => {
            let policy = PrecisionPolicy::for_tolerance(common.tol)?;
            emit(
                &common.out,
                &output::spectrum_csv(&solvers::eigenvalues(&load_bd(&bdf)?, &policy)?),
            )
        }
        Command::Svd { bdf, common } => {
            let policy = PrecisionPolicy::for_tolerance(common.tol)?;
            emit(
                &common.out,
                &output::spectrum_csv(&solvers::singular_values(&load_bd(&bdf)?, &policy)?),
            )
        }
        Command::Inv { bdf, common } => emit(
            &common.out,
            &output::rational_csv(&solvers::inverse(&load_bd(&bdf)?)?),
        ),
        Command::Solve { bdf, rhs, common } => {
            let bd = load_bd(&bdf)?;
            let b = SignPatternVector::new(parse_rhs(&read(&rhs)?)?);
            emit(
                &common.out,
                &output::solution_csv(&solvers::solve(&bd, &b)?),
            )
        }
        Command::Table { id, matrix, common } => {
            let spec = matrix.spec(Some(20))?;
            emit(&common.out, &table(id, &spec, &common)?)
        }
        Command::Figure { id, n_max, common } => {
            let s = experiments::sweep(id, n_max, common.tol)?;
            let csv = output::sweep_csv(&s);
            match &common.out {
                Some(path) => {
                    write_to(path, &csv)?;
                    write_to(
                        &path.with_extension("svg"),
                        &output::sweep_svg(&s, figure_title(id)),
                    )
                }
                None => emit(&None, &csv),
            }
        }
    }
}
