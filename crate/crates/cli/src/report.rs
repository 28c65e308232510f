//! Report envelope and output writers.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

/// A group of words backing a reported value.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessEntry {
    pub label: String,
    pub words: Vec<String>,
}

/// What a command produced, before timing is attached.
pub struct Outcome {
    pub results: Value,
    pub witnesses: Vec<WitnessEntry>,
    /// CSV header and rows.
    pub table: (Vec<String>, Vec<Vec<String>>),
    /// Plain lines for `--format text`, where supported.
    pub lines: Option<Vec<String>>,
    /// Per-step wall-clock, kept out of `results`.
    pub timings_ms: BTreeMap<String, u64>,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    BoundViolated,
}

#[derive(Serialize)]
pub struct Report<'a> {
    pub schema_version: u32,
    pub command: &'a str,
    pub config: &'a RunConfig,
    pub status: Status,
    pub results: &'a Value,
    pub witnesses: &'a [WitnessEntry],
    pub timings_ms: &'a BTreeMap<String, u64>,
    pub wall_clock_ms: u64,
}

#[derive(Serialize)]
pub struct ErrorReport<'a> {
    pub schema_version: u32,
    pub command: &'a str,
    pub error: ErrorBody,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partial: Option<Value>,
}

pub fn csv_bytes(header: &[String], rows: &[Vec<String>]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.into_inner().context("flushing csv")
}

pub fn emit(bytes: &[u8], output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}
