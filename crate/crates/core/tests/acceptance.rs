//! Acceptance suite: runs every criterion at its pinned thresholds and prints
//! one PASS/FAIL line per criterion. Use `--nocapture` to see the lines.

use conewords::verify::{run_all_with, VerifyConfig};

#[test]
fn acceptance_criteria() {
    let config = VerifyConfig::default();
    println!("acceptance suite: seed {} base length {}", config.seed, config.base_length);
    let report = run_all_with(&config, |outcome| println!("{outcome}"));
    println!("C-hat = {}", report.c_hat);
    assert_eq!(report.outcomes.len(), 10);
    let failed: Vec<String> = report
        .outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| format!("{} {}: {}", o.id, o.name, o.detail))
        .collect();
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
