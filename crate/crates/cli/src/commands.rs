//! Subcommand bodies.

use std::collections::BTreeMap;

use conewords::acylindricity::{census, root_structure, AcylParams, CensusLimits};
use conewords::geometry::{delta_experiment, hausdorff_experiment, quasiconvexity_experiment, GeometryReport};
use conewords::verify::{run_all_with, VerifyConfig};
use conewords::woracle::WOracleConfig;
use conewords::ydist::FactorizationMethod;
use conewords::{parse, ReducedWord, YMetric};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::report::{Outcome, Status, WitnessEntry};
use crate::Command;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Dp,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    InvalidInput,
    InvalidFlags,
    BudgetExhausted,
    Io,
}

impl FailureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureKind::InvalidInput => "invalid-input",
            FailureKind::InvalidFlags => "invalid-flags",
            FailureKind::BudgetExhausted => "budget-exhausted",
            FailureKind::Io => "io",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            FailureKind::InvalidInput | FailureKind::InvalidFlags => 2,
            FailureKind::BudgetExhausted => 3,
            FailureKind::Io => 4,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub kind: FailureKind,
    pub message: String,
    pub partial: Option<Value>,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Failure {
        Failure {
            kind: FailureKind::InvalidInput,
            message: message.into(),
            partial: None,
        }
    }

    pub fn flags(message: impl Into<String>) -> Failure {
        Failure {
            kind: FailureKind::InvalidFlags,
            message: message.into(),
            partial: None,
        }
    }

    pub fn io(message: impl Into<String>) -> Failure {
        Failure {
            kind: FailureKind::Io,
            message: message.into(),
            partial: None,
        }
    }
}

impl From<conewords::Error> for Failure {
    fn from(e: conewords::Error) -> Failure {
        Failure::input(e.to_string())
    }
}

fn word(text: &str, what: &str) -> Result<ReducedWord, Failure> {
    parse(text).map_err(|e| Failure::input(format!("{what}: {e}")))
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

fn outcome(results: Value, table: (Vec<String>, Vec<Vec<String>>)) -> Outcome {
    Outcome {
        results,
        witnesses: Vec::new(),
        table,
        lines: None,
        timings_ms: BTreeMap::new(),
        status: Status::Ok,
    }
}

fn header(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn metric(config: &RunConfig) -> Result<YMetric, Failure> {
    let mut oracle = WOracleConfig::with_base_length(config.base_length)?;
    oracle.recurrence_window_factor = config.recurrence_window_factor;
    oracle.recurrence_window_pad = config.recurrence_window_pad;
    Ok(YMetric::new(oracle))
}

pub fn run(command: &Command, config: &RunConfig) -> Result<Outcome, Failure> {
    match command {
        Command::GenWords { count } => gen_words(config, *count),
        Command::IsWword { word: text } => is_wword(config, text),
        Command::Ydist { x, y, method } => ydist(config, x, y, *method),
        Command::TranslationLength { g, .. } => translation_length(config, g),
        Command::Hausdorff { .. } => {
            let m = metric(config)?;
            let report = hausdorff_experiment(
                &m,
                config.samples.expect("resolved"),
                config.min_length.expect("resolved"),
                config.length.expect("resolved"),
                config.seed,
            );
            let violated = config.c_hat.is_some_and(|c| report.max_value > c);
            Ok(geometry(report, violated))
        }
        Command::Delta { .. } => {
            let m = metric(config)?;
            let report = delta_experiment(
                &m,
                config.samples.expect("resolved"),
                config.length.expect("resolved"),
                config.seed,
            );
            Ok(geometry(report, false))
        }
        Command::QcProbe { .. } => {
            let m = metric(config)?;
            let report = quasiconvexity_experiment(
                &m,
                config.samples.expect("resolved"),
                config.length.expect("resolved"),
                config.c_hat.expect("resolved"),
                config.seed,
            );
            let violated = report.violations > 0;
            Ok(geometry(report, violated))
        }
        Command::AcylCensus { x, y, .. } => acyl_census(config, x, y),
        Command::VerifyAll => verify_all(config),
    }
}

fn gen_words(config: &RunConfig, count: usize) -> Result<Outcome, Failure> {
    let m = metric(config)?;
    let schedule = m.oracle().schedule();
    let words = schedule.words(count);
    let rows = words
        .iter()
        .enumerate()
        .map(|(i, v)| vec![(i + 1).to_string(), v.len().to_string(), v.to_string()])
        .collect();
    let mut out = outcome(
        json!({ "base_length": schedule.base_length(), "words": words }),
        (header(&["n", "length", "word"]), rows),
    );
    out.lines = Some(words.iter().map(ReducedWord::to_string).collect());
    Ok(out)
}

fn is_wword(config: &RunConfig, text: &str) -> Result<Outcome, Failure> {
    let m = metric(config)?;
    let z = word(text, "word")?;
    let witness = m.oracle().witness(&z)?;
    let (n, mm) = witness.map_or((String::new(), String::new()), |w| (w.n.to_string(), w.m.to_string()));
    Ok(outcome(
        json!({ "word": z, "is_w_word": witness.is_some(), "witness": witness }),
        (header(&["word", "is_w_word", "n", "m"]), vec![vec![z.to_string(), witness.is_some().to_string(), n, mm]]),
    ))
}

fn ydist(config: &RunConfig, x: &str, y: &str, method: Method) -> Result<Outcome, Failure> {
    let m = metric(config)?;
    let x = word(x, "x")?;
    let y = word(y, "y")?;
    let z = x.left_divide(&y);
    let factorization = match method {
        Method::Dp => m.factorize_dp(&z),
        Method::Greedy => m.factorize_greedy(&z),
    };
    let method_name = match factorization.method {
        FactorizationMethod::Dp => "dp",
        FactorizationMethod::Greedy => "greedy",
    };
    let factors: Vec<String> = factorization.factors.iter().map(ReducedWord::to_string).collect();
    let mut out = outcome(
        json!({
            "x": x,
            "y": y,
            "x_inv_y": z,
            "distance": factorization.len(),
            "factorization": factorization,
        }),
        (
            header(&["x", "y", "x_inv_y", "distance", "method", "factorization"]),
            vec![vec![
                x.to_string(),
                y.to_string(),
                z.to_string(),
                factorization.len().to_string(),
                method_name.to_string(),
                factors.join(" "),
            ]],
        ),
    );
    out.witnesses.push(WitnessEntry {
        label: "factors".to_string(),
        words: factors,
    });
    Ok(out)
}

fn translation_length(config: &RunConfig, g: &str) -> Result<Outcome, Failure> {
    let m = metric(config)?;
    let g = word(g, "g")?;
    let estimate = m.power_lengths(&g, config.max_power.expect("resolved"))?;
    let rows = estimate
        .samples
        .iter()
        .map(|s| vec![s.n.to_string(), s.y_length.to_string()])
        .collect();
    let mut results = to_value(&estimate);
    results["upper_value"] = json!(estimate.upper.to_f64());
    let mut out = outcome(results, (header(&["n", "y_length"]), rows));
    if !estimate.power_bound_violations.is_empty() {
        out.status = Status::BoundViolated;
        out.witnesses.push(WitnessEntry {
            label: "power-bound-violations".to_string(),
            words: estimate
                .power_bound_violations
                .iter()
                .map(|s| g.power(s.n as i64).to_string())
                .collect(),
        });
    }
    Ok(out)
}

fn geometry(report: GeometryReport, violated: bool) -> Outcome {
    let opt = |v: Option<String>| v.unwrap_or_default();
    let row = vec![
        report.experiment.clone(),
        report.seed.to_string(),
        report.sample_count.to_string(),
        report.max_value.to_string(),
        opt(report.delta_estimate.map(|d| d.to_string())),
        opt(report.c_estimate.map(|c| c.to_string())),
        opt(report.threshold.map(|t| t.to_string())),
        report.violations.to_string(),
    ];
    let mut out = outcome(
        to_value(&report),
        (
            header(&[
                "experiment",
                "seed",
                "sample_count",
                "max_value",
                "delta_estimate",
                "c_estimate",
                "threshold",
                "violations",
            ]),
            vec![row],
        ),
    );
    out.witnesses.push(WitnessEntry {
        label: "max-defect".to_string(),
        words: report.max_defect_witness.iter().map(ReducedWord::to_string).collect(),
    });
    if violated {
        out.status = Status::BoundViolated;
    }
    out
}

fn acyl_census(config: &RunConfig, x: &str, y: &str) -> Result<Outcome, Failure> {
    let m = metric(config)?;
    let x = word(x, "x")?;
    let y = word(y, "y")?;
    let params = AcylParams::new(config.radius.expect("resolved"), config.c_hat.expect("resolved"))?;
    let limits = CensusLimits {
        cap: config.cap.expect("resolved"),
        budget: config.budget.expect("resolved"),
    };
    let report = census(&m, &x, &y, params, limits);
    if !report.complete {
        return Err(Failure {
            kind: FailureKind::BudgetExhausted,
            message: format!(
                "enumeration stopped after {} nodes; raise --budget or lower --cap",
                report.nodes_visited
            ),
            partial: Some(to_value(&report)),
        });
    }
    let root_error = root_structure(&report).err().map(|e| e.to_string());
    // the bounds are only asserted for pairs at distance at least L
    let violated = report.separated && (!report.bound_holds || root_error.is_some());
    let rows = report
        .members
        .iter()
        .map(|c| vec![c.g.to_string(), c.x_displacement.to_string(), c.y_displacement.to_string()])
        .collect();
    let mut results = to_value(&report);
    results["root_error"] = json!(root_error);
    let mut out = outcome(results, (header(&["g", "x_displacement", "y_displacement"]), rows));
    out.witnesses.push(WitnessEntry {
        label: "members".to_string(),
        words: report.members.iter().map(|c| c.g.to_string()).collect(),
    });
    if violated {
        out.status = Status::BoundViolated;
    }
    Ok(out)
}

fn verify_all(config: &RunConfig) -> Result<Outcome, Failure> {
    let verify = VerifyConfig {
        seed: config.seed,
        base_length: config.base_length,
    };
    let report = run_all_with(&verify, |o| eprintln!("{o}"));
    let mut timings_ms = BTreeMap::new();
    let mut criteria = Vec::new();
    let mut rows = Vec::new();
    for o in &report.outcomes {
        timings_ms.insert(format!("{:02}-{}", o.id, o.name), o.elapsed_ms);
        criteria.push(json!({
            "id": o.id,
            "name": o.name,
            "passed": o.passed,
            "detail": o.detail,
            "measurements": o.measurements,
        }));
        rows.push(vec![o.id.to_string(), o.name.clone(), o.passed.to_string(), o.detail.clone()]);
    }
    let all_passed = report.all_passed();
    let mut out = outcome(
        json!({ "c_hat": report.c_hat, "all_passed": all_passed, "criteria": criteria }),
        (header(&["id", "name", "passed", "detail"]), rows),
    );
    out.timings_ms = timings_ms;
    if !all_passed {
        out.status = Status::BoundViolated;
    }
    Ok(out)
}
