//! Command-line front end: configuration I/O, verification suites, bound
//! tables, and an exploratory search for low-crossing configurations.
//!
//! Exit codes: 0 all good, 1 verification check failed, 2 usage error,
//! 3 degenerate input.

pub mod search;
pub mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use hypercross::configs::{moment_config, MomentParams, PointConfig};
use hypercross::crossing::{count_crossing_pairs, simplices_cross, Bipartition};
use hypercross::exact::{parse_rational, Rational};
use hypercross::gale::{gale_transform, GaleDiagram};
use hypercross::moment::BoundRow;
use hypercross::separations::{count_proper_separations, enumerate_separations};
use serde::Serialize;
use std::fmt;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    DegenerateInput = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.message.fmt(f)
    }
}

impl std::error::Error for CliError {}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            status: ExitStatus::Usage,
            message: msg.into(),
        }
    }

    fn degenerate(msg: impl Into<String>) -> Self {
        Self {
            status: ExitStatus::DegenerateInput,
            message: msg.into(),
        }
    }
}

impl From<hypercross::Error> for CliError {
    fn from(err: hypercross::Error) -> Self {
        CliError::degenerate(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::usage(format!("i/o error: {err}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "hypercross",
    version,
    about = "Exact crossing counts for rectilinear drawings of complete d-uniform hypergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Place points on the moment curve and emit the configuration JSON.
    GenMoment {
        /// Dimension d >= 2.
        #[arg(long)]
        dim: usize,
        /// Number of points; parameters default to 1..n.
        #[arg(long, conflicts_with = "ts")]
        n: Option<usize>,
        /// Explicit strictly increasing parameters, rationals as p/q.
        #[arg(long, value_delimiter = ',')]
        ts: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gale transform of a configuration JSON.
    Gale {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate linear separations of a planar Gale diagram JSON.
    Separations {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether two vertex index sets span crossing simplices.
    Cross {
        #[arg(long)]
        input: PathBuf,
        /// Left vertex set, 1-based indices.
        #[arg(long, value_delimiter = ',')]
        left: Vec<usize>,
        /// Right vertex set, 1-based indices.
        #[arg(long, value_delimiter = ',')]
        right: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count crossing pairs of hyperedges of a configuration.
    Count {
        #[arg(long)]
        input: PathBuf,
        /// Hyperedge size; defaults to the dimension.
        #[arg(long)]
        hyperedge_size: Option<usize>,
        /// Include the crossing bipartitions in the report.
        #[arg(long)]
        witnesses: bool,
        /// json emits the report, csv emits the witness table.
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the bound table rows for d = 2..=d_max.
    Bounds {
        #[arg(long)]
        d_max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the invariant suite; exit 0 only if every check passes.
    Verify {
        /// Inclusive dimension range, e.g. 2..4.
        #[arg(long, default_value = "2..4")]
        d_range: String,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Optional configuration to validate alongside the suite.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random-restart search for a low-crossing configuration.
    SearchMin {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Include the crossing bipartitions of the best configuration.
        #[arg(long)]
        witnesses: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: &Option<PathBuf>, content: &str) -> CliResult<()> {
    let mut body = content.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn read_config(path: &PathBuf) -> CliResult<PointConfig> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::degenerate(format!("invalid configuration JSON: {e}")))
}

fn read_diagram(path: &PathBuf) -> CliResult<GaleDiagram> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::degenerate(format!("invalid Gale diagram JSON: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}

/// One-based CLI indices to internal zero-based.
fn to_zero_based(indices: &[usize]) -> CliResult<Vec<usize>> {
    indices
        .iter()
        .map(|&i| {
            i.checked_sub(1)
                .ok_or_else(|| CliError::usage("vertex indices are 1-based"))
        })
        .collect()
}

pub fn run(cli: &Cli) -> CliResult<ExitStatus> {
    match &cli.command {
        Command::GenMoment { dim, n, ts, out } => {
            let params = match (n, ts) {
                (_, Some(ts)) => {
                    let parsed: Vec<Rational> = ts
                        .iter()
                        .map(|s| parse_rational(s))
                        .collect::<Result<_, _>>()
                        .map_err(|e| CliError::usage(e.to_string()))?;
                    MomentParams::new(*dim, parsed)?
                }
                (Some(n), None) => MomentParams::integer_range(*dim, *n)?,
                (None, None) => {
                    return Err(CliError::usage("gen-moment needs --n or --ts"));
                }
            };
            emit(out, &to_json(&moment_config(&params)))?;
            Ok(ExitStatus::Ok)
        }
        Command::Gale { input, out } => {
            let config = read_config(input)?;
            emit(out, &to_json(&gale_transform(&config)?))?;
            Ok(ExitStatus::Ok)
        }
        Command::Separations { input, out } => {
            let diagram = read_diagram(input)?;
            let seps = enumerate_separations(&diagram)?;
            let proper = count_proper_separations(&diagram)?;
            #[derive(Serialize)]
            struct SeparationsOut<T: Serialize> {
                separations: T,
                proper_count: usize,
            }
            emit(
                out,
                &to_json(&SeparationsOut {
                    separations: seps,
                    proper_count: proper,
                }),
            )?;
            Ok(ExitStatus::Ok)
        }
        Command::Cross {
            input,
            left,
            right,
            out,
        } => {
            if left.is_empty() || right.is_empty() {
                return Err(CliError::usage("--left and --right must be nonempty"));
            }
            let config = read_config(input)?;
            let b = Bipartition::new(to_zero_based(left)?, to_zero_based(right)?)?;
            let crossing = simplices_cross(&config, &b)?;
            #[derive(Serialize)]
            struct CrossOut {
                crossing: bool,
            }
            emit(out, &to_json(&CrossOut { crossing }))?;
            Ok(ExitStatus::Ok)
        }
        Command::Count {
            input,
            hyperedge_size,
            witnesses,
            format,
            out,
        } => {
            let config = read_config(input)?;
            let size = hyperedge_size.unwrap_or(config.dim());
            let want_witnesses = *witnesses || *format == OutputFormat::Csv;
            let report = count_crossing_pairs(&config, size, want_witnesses)?;
            match format {
                OutputFormat::Json => emit(out, &to_json(&report))?,
                OutputFormat::Csv => emit(out, &report.witnesses_csv())?,
            }
            Ok(ExitStatus::Ok)
        }
        Command::Bounds { d_max, format, out } => {
            if !(2..=64).contains(d_max) {
                return Err(CliError::usage("--d-max must be between 2 and 64"));
            }
            let rows: Vec<BoundRow> = (2..=*d_max)
                .map(BoundRow::compute)
                .collect::<Result<_, _>>()?;
            match format {
                OutputFormat::Json => emit(out, &to_json(&rows))?,
                OutputFormat::Csv => {
                    let mut text = String::from(BoundRow::CSV_HEADER);
                    text.push('\n');
                    for row in &rows {
                        text.push_str(&row.csv_row());
                        text.push('\n');
                    }
                    emit(out, &text)?;
                }
            }
            Ok(ExitStatus::Ok)
        }
        Command::Verify {
            d_range,
            trials,
            seed,
            input,
            out,
        } => {
            let (lo, hi) = parse_range(d_range)?;
            let input_config = input.as_ref().map(read_config).transpose()?;
            let report = verify::run_verify(&verify::VerifyOpts {
                d_lo: lo,
                d_hi: hi,
                trials: *trials,
                seed: *seed,
                input: input_config,
            })?;
            emit(out, &to_json(&report))?;
            Ok(if report.all_passed {
                ExitStatus::Ok
            } else {
                ExitStatus::CheckFailed
            })
        }
        Command::SearchMin {
            dim,
            n,
            trials,
            seed,
            witnesses,
            out,
        } => {
            if *trials == 0 {
                return Err(CliError::usage("--trials must be positive"));
            }
            let result = search::search_min(*dim, *n, *trials, *seed, *witnesses)?;
            emit(out, &to_json(&result))?;
            Ok(ExitStatus::Ok)
        }
    }
}

fn parse_range(text: &str) -> CliResult<(usize, usize)> {
    let parts: Vec<&str> = text.split("..").collect();
    let err = || CliError::usage(format!("invalid range `{text}`, expected lo..hi"));
    if parts.len() != 2 {
        return Err(err());
    }
    let lo: usize = parts[0].parse().map_err(|_| err())?;
    let hi: usize = parts[1].parse().map_err(|_| err())?;
    if lo < 2 || hi < lo {
        return Err(err());
    }
    Ok((lo, hi))
}
