//! Result tables and their CSV / JSON renderings.
//!
//! Reals are rounded to the configured number of significant digits before
//! rendering and printed in shortest round-trip form, so parsing an emitted
//! value reproduces the rounded `f64` bit for bit.

use serde::Serialize;
use serde_json::{Map, Number, Value};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(u64),
    Text(String),
    Null,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Null, Cell::Real)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// `x` rounded to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: u8) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", usize::from(digits.max(1)) - 1, x).parse().expect("formatted float parses")
}

fn json_cell(c: &Cell, digits: u8) -> Value {
    match c {
        Cell::Real(x) => Number::from_f64(round_sig(*x, digits)).map_or(Value::Null, Value::Number),
        Cell::Int(i) => Value::from(*i),
        Cell::Text(s) => Value::from(s.as_str()),
        Cell::Null => Value::Null,
    }
}

fn csv_cell(c: &Cell, digits: u8) -> String {
    match c {
        Cell::Real(x) if x.is_finite() => format!("{}", round_sig(*x, digits)),
        Cell::Real(_) | Cell::Null => String::new(),
        Cell::Int(i) => i.to_string(),
        Cell::Text(s) => s.clone(),
    }
}

pub fn render_csv(table: &Table, digits: u8) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Output(e.to_string());
    w.write_record(&table.columns).map_err(err)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|c| csv_cell(c, digits))).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

pub fn table_json(table: &Table, digits: u8) -> Value {
    let rows = table.rows.iter().map(|r| Value::Array(r.iter().map(|c| json_cell(c, digits)).collect())).collect();
    let mut m = Map::new();
    m.insert("columns".into(), Value::from(table.columns.clone()));
    m.insert("rows".into(), Value::Array(rows));
    Value::Object(m)
}

/// Top-level JSON document.
#[derive(Debug, Serialize)]
pub struct ResultEnvelope<C: Serialize> {
    pub tool_version: &'static str,
    pub config: C,
    pub timestamp: String,
    pub payload: Value,
}
