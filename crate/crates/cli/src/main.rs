//! `conewords`: batch front end for distances and experiments in the coned-off
//! graph `Y` of `F(a,b,c)`.

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::commands::Failure;
use crate::config::{ConfigFile, Format, RunConfig, WORKERS_ENV};
use crate::report::{ErrorBody, ErrorReport, Report, Status, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "conewords", version, about = "Distances and experiments in the coned-off graph Y of F(a,b,c)")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// TOML config file; flags take precedence over its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Base length L0 of the word schedule.
    #[arg(long, global = true)]
    base_length: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = WORKERS_ENV)]
    workers: Option<usize>,
}

#[derive(Debug, Args, Default)]
struct ExperimentArgs {
    /// Number of random samples.
    #[arg(long)]
    samples: Option<usize>,
    /// Maximum word length.
    #[arg(long)]
    length: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Command {
    /// Print the schedule words v_1, ..., v_N.
    GenWords {
        #[arg(long)]
        count: usize,
    },
    /// Decide membership in the W-word set, with a witness (n, m).
    IsWword { word: String },
    /// d_Y(x, y) with a minimal W-decomposition of x^-1 y.
    Ydist {
        x: String,
        y: String,
        #[arg(long, value_enum, default_value = "dp")]
        method: commands::Method,
    },
    /// |g^n|_Y for n <= N and bounds on the translation length of g.
    TranslationLength {
        g: String,
        #[arg(long)]
        max_power: Option<u64>,
    },
    /// Hausdorff distance between X- and Y-geodesics on random pairs.
    Hausdorff {
        #[command(flatten)]
        experiment: ExperimentArgs,
        #[arg(long)]
        min_length: Option<usize>,
        /// Fail if any distance exceeds this constant.
        #[arg(long)]
        c_hat: Option<u64>,
    },
    /// Four-point defects on random quadruples.
    Delta {
        #[command(flatten)]
        experiment: ExperimentArgs,
    },
    /// Quasiconvexity probe on random elements of F(a,b), checked against C + 1.
    QcProbe {
        #[command(flatten)]
        experiment: ExperimentArgs,
        #[arg(long)]
        c_hat: Option<u64>,
    },
    /// Census of c-free g moving both x and y by at most R.
    AcylCensus {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        radius: Option<u64>,
        /// Maximum |g|_A enumerated.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        c_hat: Option<u64>,
        /// Maximum enumeration nodes.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the whole acceptance suite.
    VerifyAll,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::GenWords { .. } => "gen-words",
            Command::IsWword { .. } => "is-wword",
            Command::Ydist { .. } => "ydist",
            Command::TranslationLength { .. } => "translation-length",
            Command::Hausdorff { .. } => "hausdorff",
            Command::Delta { .. } => "delta",
            Command::QcProbe { .. } => "qc-probe",
            Command::AcylCensus { .. } => "acyl-census",
            Command::VerifyAll => "verify-all",
        }
    }
}

fn resolve(global: &GlobalArgs, command: &Command) -> anyhow::Result<RunConfig> {
    let file = match &global.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let exp = &file.experiment;
    let (samples, length, min_length, c_hat) = match command {
        Command::Hausdorff {
            experiment,
            min_length,
            c_hat,
        } => (
            experiment.samples.or(exp.samples).or(Some(500)),
            experiment.length.or(exp.length).or(Some(400)),
            min_length.or(exp.min_length).or(Some(50)),
            c_hat.or(exp.c_hat),
        ),
        Command::Delta { experiment } => (
            experiment.samples.or(exp.samples).or(Some(500)),
            experiment.length.or(exp.length).or(Some(100)),
            None,
            None,
        ),
        Command::QcProbe { experiment, c_hat } => (
            experiment.samples.or(exp.samples).or(Some(500)),
            experiment.length.or(exp.length).or(Some(200)),
            None,
            c_hat.or(exp.c_hat).or(Some(1)),
        ),
        Command::AcylCensus { c_hat, .. } => (None, None, None, c_hat.or(exp.c_hat).or(Some(1))),
        _ => (None, None, None, None),
    };
    let (radius, cap, budget) = match command {
        Command::AcylCensus { radius, cap, budget, .. } => (
            radius.or(exp.radius).or(Some(1)),
            cap.or(exp.cap).or(Some(12)),
            budget.or(exp.budget).or(Some(20_000_000)),
        ),
        _ => (None, None, None),
    };
    let max_power = match command {
        Command::TranslationLength { max_power, .. } => max_power.or(exp.max_power).or(Some(49)),
        _ => None,
    };
    let default_format = match command {
        Command::GenWords { .. } => Format::Text,
        _ => Format::Json,
    };
    let config = RunConfig {
        base_length: global.base_length.or(file.schedule.base_length).unwrap_or(1),
        recurrence_window_factor: file.schedule.recurrence_window_factor.unwrap_or(16),
        recurrence_window_pad: file.schedule.recurrence_window_pad.unwrap_or(64),
        seed: global.seed.or(file.run.seed).unwrap_or(7),
        workers: global.workers.or(file.run.workers),
        format: global.format.or(file.run.format).unwrap_or(default_format),
        output: global.output.clone().or(file.run.output),
        count: match command {
            Command::GenWords { count } => Some(*count),
            _ => None,
        },
        samples,
        length,
        min_length,
        max_power,
        radius,
        cap,
        c_hat,
        budget,
    };
    config.validate()?;
    if config.format == Format::Text && !matches!(command, Command::GenWords { .. }) {
        anyhow::bail!("--format text is only available for gen-words");
    }
    Ok(config)
}

fn fail(command: &str, failure: Failure) -> ExitCode {
    let report = ErrorReport {
        schema_version: SCHEMA_VERSION,
        command,
        error: ErrorBody {
            kind: failure.kind.as_str(),
            message: failure.message,
            partial: failure.partial,
        },
    };
    let text = serde_json::to_string_pretty(&report).expect("serializable error");
    println!("{text}");
    ExitCode::from(failure.kind.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("", Failure::flags(e.to_string().trim_end())),
    };
    let name = cli.command.name();
    let config = match resolve(&cli.global, &cli.command) {
        Ok(config) => config,
        Err(e) => return fail(name, Failure::flags(format!("{e:#}"))),
    };
    if let Some(workers) = config.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global() {
            return fail(name, Failure::flags(e.to_string()));
        }
    }

    let started = Instant::now();
    let outcome = match commands::run(&cli.command, &config) {
        Ok(outcome) => outcome,
        Err(failure) => return fail(name, failure),
    };
    let wall_clock_ms = started.elapsed().as_millis() as u64;

    let bytes = match config.format {
        Format::Json => {
            let report = Report {
                schema_version: SCHEMA_VERSION,
                command: name,
                config: &config,
                status: outcome.status,
                results: &outcome.results,
                witnesses: &outcome.witnesses,
                timings_ms: &outcome.timings_ms,
                wall_clock_ms,
            };
            let mut text = serde_json::to_string_pretty(&report).expect("serializable report");
            text.push('\n');
            text.into_bytes()
        }
        Format::Csv => match report::csv_bytes(&outcome.table.0, &outcome.table.1) {
            Ok(bytes) => bytes,
            Err(e) => return fail(name, Failure::io(format!("{e:#}"))),
        },
        Format::Text => {
            let lines = outcome.lines.unwrap_or_default();
            let mut text = lines.join("\n");
            text.push('\n');
            text.into_bytes()
        }
    };
    if let Err(e) = report::emit(&bytes, config.output.as_deref()) {
        return fail(name, Failure::io(format!("{e:#}")));
    }
    match outcome.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::BoundViolated => ExitCode::from(1),
    }
}
