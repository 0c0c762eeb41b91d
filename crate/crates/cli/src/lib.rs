//! Command-line front end for the `critballs` library.
//!
//! Every subcommand builds a [`output::Table`]; CSV output is the bare
//! table, JSON output wraps it in a [`output::ResultEnvelope`] that echoes
//! the run configuration.

pub mod args;
pub mod commands;
pub mod error;
pub mod grid;
pub mod output;

use serde::Serialize;

use args::{Cli, Command, Format};
use error::CliError;
use output::{render_csv, table_json, ResultEnvelope, Table};

/// Timestamp used unless `--wall-clock` is given, so that output is a pure
/// function of the flags.
pub const EPOCH_TIMESTAMP: &str = "1970-01-01T00:00:00Z";

pub const DEFAULT_PRECISION: u8 = 15;
pub const TW_TABLE_PRECISION: u8 = 12;

/// Configuration echoed into the JSON envelope. `--threads` is left out on
/// purpose: it must not change a single byte of output.
#[derive(Debug, Serialize)]
pub struct RunConfig<'a> {
    pub subcommand: &'static str,
    pub seed: u64,
    pub output: Option<String>,
    pub format: Format,
    pub precision: u8,
    pub args: &'a Command,
}

fn precision(cli: &Cli) -> u8 {
    cli.global.precision.unwrap_or(match cli.command {
        Command::TwTable(_) => TW_TABLE_PRECISION,
        _ => DEFAULT_PRECISION,
    })
}

fn table(cli: &Cli) -> Result<Table, CliError> {
    let seed = cli.global.seed;
    match &cli.command {
        Command::Volume(a) => commands::volume(a),
        Command::Threshold(a) => commands::threshold(a),
        Command::Intersect(a) => commands::intersect(a, seed),
        Command::TwTable(a) => commands::tw_table(a),
        Command::Independence(a) => commands::independence(a, seed),
        Command::Gumbel(a) => commands::gumbel(a, seed),
        Command::Clt(a) => commands::clt(a, seed),
    }
}

/// Runs a parsed command line and returns the text destined for stdout or
/// `--out`.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let table = match cli.global.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.into())
            .build()
            .map_err(|e| CliError::Output(format!("cannot start thread pool: {e}")))?
            .install(|| table(cli))?,
        None => table(cli)?,
    };
    let digits = precision(cli);
    match cli.global.format {
        Format::Csv => render_csv(&table, digits),
        Format::Json => {
            let timestamp = if cli.global.wall_clock {
                chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
            } else {
                EPOCH_TIMESTAMP.to_owned()
            };
            let envelope = ResultEnvelope {
                tool_version: env!("CARGO_PKG_VERSION"),
                config: RunConfig {
                    subcommand: cli.command.name(),
                    seed: cli.global.seed,
                    output: cli.global.out.as_ref().map(|p| p.display().to_string()),
                    format: cli.global.format,
                    precision: digits,
                    args: &cli.command,
                },
                timestamp,
                payload: table_json(&table, digits),
            };
            let mut s = serde_json::to_string_pretty(&envelope).map_err(|e| CliError::Output(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}
