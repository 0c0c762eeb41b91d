use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use critballs::{Beta, Exponent};
use serde::{Serialize, Serializer};

#[derive(Debug, Parser)]
#[command(name = "critballs", version, about = "Volumes, thresholds and Monte Carlo intersection experiments for l_p and Schatten balls")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Master seed; fixes every stochastic output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Significant digits for reals, 6..=17 (default 15; 12 for tw-table).
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(6..=17))]
    pub precision: Option<u8>,
    /// Worker threads; does not affect results.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
    /// Stamp JSON output with the current time instead of the Unix epoch.
    #[arg(long, global = true)]
    pub wall_clock: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lp,
    Schatten,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Exact log-volumes, volume radii and their asymptotics.
    Volume(VolumeArgs),
    /// Critical dilation thresholds.
    Threshold(ThresholdArgs),
    /// Monte Carlo intersection volumes of normalised balls.
    Intersect(IntersectArgs),
    /// Tracy–Widom distribution functions F_1, F_2, F_4.
    TwTable(TwTableArgs),
    /// Joint vs product law of the rescaled extreme eigenvalues.
    Independence(IndependenceArgs),
    /// Gumbel limit of the sup-norm of uniform l_p-ball points.
    Gumbel(GumbelArgs),
    /// Mean of the centred Euclidean norm of beta-Hermite eigenvalues.
    Clt(CltArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Volume(_) => "volume",
            Command::Threshold(_) => "threshold",
            Command::Intersect(_) => "intersect",
            Command::TwTable(_) => "tw-table",
            Command::Independence(_) => "independence",
            Command::Gumbel(_) => "gumbel",
            Command::Clt(_) => "clt",
        }
    }
}

fn parse_exponent(s: &str) -> Result<Exponent, String> {
    s.parse().map_err(|e: critballs::Error| e.to_string())
}

fn parse_beta(s: &str) -> Result<Beta, String> {
    let b: u32 = s.parse().map_err(|_| format!("beta must be 1, 2 or 4, got {s:?}"))?;
    Beta::try_from(b).map_err(|e| e.to_string())
}

fn ser_exponent<S: Serializer>(p: &Exponent, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Exponent::Finite(v) => s.serialize_f64(*v),
        Exponent::Infinite => s.serialize_str("inf"),
    }
}

fn ser_opt_exponent<S: Serializer>(p: &Option<Exponent>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => ser_exponent(p, s),
        None => s.serialize_none(),
    }
}

fn ser_opt_beta<S: Serializer>(b: &Option<Beta>, s: S) -> Result<S::Ok, S::Error> {
    match b {
        Some(b) => s.serialize_u32(b.as_u32()),
        None => s.serialize_none(),
    }
}

fn ser_beta<S: Serializer>(b: &Beta, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u32(b.as_u32())
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VolumeArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, value_parser = parse_exponent)]
    #[serde(serialize_with = "ser_exponent")]
    pub p: Exponent,
    #[arg(long, value_parser = parse_beta)]
    #[serde(serialize_with = "ser_opt_beta")]
    pub beta: Option<Beta>,
    #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
    pub n: Option<usize>,
    /// Inclusive range a:b:step.
    #[arg(long)]
    pub n_range: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ThresholdArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, value_parser = parse_exponent)]
    #[serde(serialize_with = "ser_exponent")]
    pub p: Exponent,
    #[arg(long, value_parser = parse_exponent, default_value = "inf")]
    #[serde(serialize_with = "ser_exponent")]
    pub q: Exponent,
    #[arg(long, value_parser = parse_beta)]
    #[serde(serialize_with = "ser_opt_beta")]
    pub beta: Option<Beta>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct IntersectArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Exponent of the sampled ball D_X.
    #[arg(long, value_parser = parse_exponent)]
    #[serde(serialize_with = "ser_exponent")]
    pub p: Exponent,
    /// Exponent of the dilated ball D_Y (defaults to p).
    #[arg(long, value_parser = parse_exponent)]
    #[serde(serialize_with = "ser_opt_exponent")]
    pub q: Option<Exponent>,
    #[arg(long, value_parser = parse_beta)]
    #[serde(serialize_with = "ser_opt_beta")]
    pub beta: Option<Beta>,
    #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
    pub n: Option<usize>,
    #[arg(long)]
    pub n_range: Option<String>,
    #[arg(long, conflicts_with = "t_grid", required_unless_present = "t_grid")]
    pub t: Option<f64>,
    /// Inclusive grid a:b:step.
    #[arg(long, allow_hyphen_values = true)]
    pub t_grid: Option<String>,
    /// Multiply t by (ln n)^{1/p}.
    #[arg(long)]
    pub log_dilate: bool,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TwTableArgs {
    /// Only this beta (default: all three).
    #[arg(long, value_parser = parse_beta)]
    #[serde(serialize_with = "ser_opt_beta")]
    pub beta: Option<Beta>,
    /// Evaluate at these points instead of a grid (comma separated).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub at: Vec<f64>,
    #[arg(long, default_value_t = -8.0, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 0.1)]
    pub step: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct IndependenceArgs {
    #[arg(long, value_parser = parse_beta)]
    #[serde(serialize_with = "ser_beta")]
    pub beta: Beta,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = 5000)]
    pub samples: usize,
    /// Grid for the rescaled minimum, a:b:step inside [-5, 3].
    #[arg(long, default_value = "-3:1:1", allow_hyphen_values = true)]
    pub x_grid: String,
    /// Grid for the rescaled maximum, a:b:step inside [-5, 3].
    #[arg(long, default_value = "-3:1:1", allow_hyphen_values = true)]
    pub y_grid: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GumbelArgs {
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CltArgs {
    #[arg(long, value_parser = parse_beta)]
    #[serde(serialize_with = "ser_beta")]
    pub beta: Beta,
    #[arg(long, default_value_t = 400)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}
