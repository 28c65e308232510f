//! Run configuration: defaults, an optional TOML file, then command-line flags.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

pub const WORKERS_ENV: &str = "CONEWORDS_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    /// One word per line; `gen-words` only.
    Text,
}

/// Keys accepted in a config file. Every key is optional.
///
/// ```toml
/// [schedule]
/// base_length = 2
///
/// [run]
/// seed = 11
/// workers = 4
/// format = "json"
///
/// [experiment]
/// samples = 200
/// length = 300
/// ```
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub schedule: ScheduleSection,
    #[serde(default)]
    pub run: RunSection,
    #[serde(default)]
    pub experiment: ExperimentSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleSection {
    pub base_length: Option<usize>,
    pub recurrence_window_factor: Option<usize>,
    pub recurrence_window_pad: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    pub seed: Option<u64>,
    pub workers: Option<usize>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSection {
    pub samples: Option<usize>,
    pub length: Option<usize>,
    pub min_length: Option<usize>,
    pub max_power: Option<u64>,
    pub radius: Option<u64>,
    pub cap: Option<usize>,
    pub c_hat: Option<u64>,
    pub budget: Option<u64>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<ConfigFile> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// Fully resolved settings, echoed into every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub base_length: usize,
    pub recurrence_window_factor: usize,
    pub recurrence_window_pad: usize,
    pub seed: u64,
    pub workers: Option<usize>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub count: Option<usize>,
    pub samples: Option<usize>,
    pub length: Option<usize>,
    pub min_length: Option<usize>,
    pub max_power: Option<u64>,
    pub radius: Option<u64>,
    pub cap: Option<usize>,
    pub c_hat: Option<u64>,
    pub budget: Option<u64>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.base_length == 0 {
            bail!("base length must be at least 1");
        }
        if self.recurrence_window_factor == 0 {
            bail!("recurrence window factor must be at least 1");
        }
        if self.workers == Some(0) {
            bail!("worker count must be at least 1");
        }
        Ok(())
    }
}
