//! The `orchard` command line: argument types and command bodies.
//!
//! Commands return their complete stdout as a string together with an exit
//! status, so output bytes can be checked without spawning a process.

pub mod error;
pub mod render;
pub mod stats;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use orchard_core::geometry::input::read_points;
use orchard_core::geometry::sample::default_box;
use orchard_core::verify::{uniqueness_table, MAX_VERIFY_N};
use orchard_core::{orchard_coloring, Configuration, Genericity};

pub use error::{exit, CliError};

#[derive(Debug, Parser)]
#[command(name = "orchard", version, about = "Two-color generic point configurations by the orchard morphism")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color the points of a configuration file.
    Color(ColorArgs),
    /// Report whether a configuration is generic.
    Check(CheckArgs),
    /// Print the orchard cocycle of the orientation function.
    Cocycle(CocycleArgs),
    /// Histogram of class sizes over random generic configurations.
    Stats(StatsArgs),
    /// Enumerate equivariant homomorphisms for small ground sets.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Configuration file, JSON or CSV.
    pub input: PathBuf,
    /// Refuse inputs with more points than this.
    #[arg(long, default_value_t = 12)]
    pub max_points: usize,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Draw every line through two points (SVG only).
    #[arg(long)]
    pub lines: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CocycleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Points per configuration.
    #[arg(long)]
    pub n: usize,
    /// Dimension.
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Coordinates are drawn from [0, box-max]; default 10·n².
    #[arg(long)]
    pub box_max: Option<i64>,
    /// Non-generic draws tolerated per trial.
    #[arg(long, default_value_t = 10_000)]
    pub max_attempts: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest ground set size.
    #[arg(long, default_value_t = 4)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Successful run: stdout bytes and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub status: u8,
}

impl From<String> for Output {
    fn from(stdout: String) -> Self {
        Output {
            stdout,
            status: exit::SUCCESS,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Color(a) => color(a).map(Output::from),
        Command::Check(a) => check(a),
        Command::Cocycle(a) => cocycle(a).map(Output::from),
        Command::Stats(a) => stats(a).map(Output::from),
        Command::Verify(a) => verify(a).map(Output::from),
    }
}

/// Parses a file and enforces the point budget before any determinant is
/// evaluated.
pub fn load(path: &Path, max_points: usize) -> Result<Configuration, CliError> {
    let source = path.display().to_string();
    let points = read_points(path).map_err(|e| CliError::parse(&source, &e))?;
    if points.len() > max_points {
        return Err(CliError::new(
            exit::BUDGET,
            format!(
                "{source}: {} points exceed --max-points {max_points}",
                points.len()
            ),
        ));
    }
    points.into_configuration().map_err(|e| CliError::parse(&source, &e))
}

fn load_generic(args: &InputArgs) -> Result<Configuration, CliError> {
    let config = load(&args.input, args.max_points)?;
    config.require_generic()?;
    Ok(config)
}

fn text_or_json(format: Format) -> Result<(), CliError> {
    if format == Format::Svg {
        return Err(CliError::new(exit::FAILURE, "SVG output is only available for `color`"));
    }
    Ok(())
}

pub fn color(a: &ColorArgs) -> Result<String, CliError> {
    let config = load_generic(&a.input)?;
    if a.format == Format::Svg && config.dimension() != 2 {
        return Err(CliError::new(
            exit::FAILURE,
            format!("SVG output needs planar input, got dimension {}", config.dimension()),
        ));
    }
    let partition = orchard_coloring(&config)?.partition;
    Ok(match a.format {
        Format::Text => render::coloring_text(&config, &partition),
        Format::Json => render::partition_json(&partition),
        Format::Svg => render::coloring_svg(&config, &partition, a.lines),
    })
}

pub fn check(a: &CheckArgs) -> Result<Output, CliError> {
    text_or_json(a.format)?;
    let config = load(&a.input.input, a.input.max_points)?;
    let (n, d) = (config.len(), config.dimension());
    let (stdout, status) = match config.genericity() {
        Genericity::Generic => (
            match a.format {
                Format::Json => serde_json::json!({ "generic": true, "n": n, "dimension": d }).to_string() + "\n",
                _ => format!("generic: {n} points in R^{d}\n"),
            },
            exit::SUCCESS,
        ),
        Genericity::Degenerate { witness } => (
            match a.format {
                Format::Json => {
                    serde_json::json!({ "generic": false, "n": n, "dimension": d, "witness": witness }).to_string()
                        + "\n"
                }
                _ => format!(
                    "non-generic: points {} are affinely dependent\n",
                    error::braces(witness)
                ),
            },
            exit::NON_GENERIC,
        ),
    };
    Ok(Output { stdout, status })
}

pub fn cocycle(a: &CocycleArgs) -> Result<String, CliError> {
    text_or_json(a.format)?;
    let report = orchard_coloring(&load_generic(&a.input)?)?;
    Ok(match a.format {
        Format::Json => render::report_json(&report),
        _ => render::report_text(&report),
    })
}

pub fn stats(a: &StatsArgs) -> Result<String, CliError> {
    text_or_json(a.format)?;
    let params = stats::StatsParams {
        n: a.n,
        d: a.d,
        trials: a.trials,
        seed: a.seed,
        box_max: a.box_max.unwrap_or_else(|| default_box(a.n)),
        max_attempts: a.max_attempts,
    };
    let report = stats::run(&params)?;
    Ok(match a.format {
        Format::Json => report.to_json(),
        _ => report.to_text(),
    })
}

pub fn verify(a: &VerifyArgs) -> Result<String, CliError> {
    text_or_json(a.format)?;
    if a.n_max > MAX_VERIFY_N {
        return Err(CliError::new(
            exit::BUDGET,
            format!("--n-max {} exceeds the verifier limit {MAX_VERIFY_N}", a.n_max),
        ));
    }
    let rows = uniqueness_table(a.n_max)?;
    Ok(match a.format {
        Format::Json => render::verdicts_json(&rows),
        _ => render::verdicts_text(&rows),
    })
}
