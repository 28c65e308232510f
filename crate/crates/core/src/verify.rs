//! Acceptance checks.
//!
//! Each check is a pure function of a [`VerifyConfig`] and returns a
//! [`CriterionOutcome`]. The test suite and the `verify-all` command both run
//! them through [`run_all`]. Thresholds are fixed constants below.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::acylindricity::{census, root_structure, AcylParams, CensusLimits};
use crate::aperiodic::is_7_aperiodic;
use crate::geometry::{gluing_experiment, hausdorff_experiment, quasiconvexity_experiment};
use crate::reference::BruteMembership;
use crate::sampling::{random_reduced_word, random_structured_word, random_structured_word_of_len, sample_rng, Alphabet};
use crate::words::{Letter, ReducedWord};
use crate::ydist::{Fraction, YMetric};

pub const ORBIT_WORDS: usize = 200;
pub const ORBIT_TIME_LIMIT: Duration = Duration::from_secs(10);

pub const POWER_SAMPLES: u64 = 50;
pub const POWER_MAX_WORD_LEN: usize = 8;
pub const POWER_MAX_EXPONENT: u64 = 49;
pub const POWER_TIME_LIMIT: Duration = Duration::from_secs(300);

pub const CROSS_CHECK_WORDS: u64 = 10_000;
pub const CROSS_CHECK_MAX_LEN: usize = 200;
pub const BRUTE_MAX_LEN: usize = 12;
pub const BRUTE_MAX_N: usize = 64;
pub const BRUTE_MAX_M: usize = 12;
pub const BRUTE_BASE_LENGTHS: [usize; 3] = [1, 2, 3];
pub const BRUTE_DP_WORDS: u64 = 2_000;
pub const CROSS_CHECK_TIME_LIMIT: Duration = Duration::from_secs(600);

pub const METRIC_TRIPLES: u64 = 10_000;
pub const METRIC_MAX_LEN: usize = 100;

pub const HAUSDORFF_PAIRS: usize = 500;
pub const HAUSDORFF_MIN_LEN: usize = 50;
pub const HAUSDORFF_MAX_LEN: usize = 400;

pub const QC_SAMPLES: usize = 500;
pub const QC_MAX_LEN: usize = 200;

pub const GLUING_SAMPLES: usize = 1_000;
pub const GLUING_MAX_LEN: usize = 200;

pub const CENSUS_RADII: [u64; 2] = [1, 2];
pub const CENSUS_PAIRS: u64 = 20;
pub const CENSUS_CAP: usize = 12;
pub const CENSUS_TIME_LIMIT: Duration = Duration::from_secs(1800);

pub const APERIODIC_WORDS: usize = 512;
pub const APERIODIC_TIME_LIMIT: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub base_length: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 7, base_length: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u64,
    pub measurements: BTreeMap<String, f64>,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<24} {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed_ms
        )
    }
}

struct Outcome {
    id: u8,
    name: &'static str,
    started: Instant,
    measurements: BTreeMap<String, f64>,
}

impl Outcome {
    fn start(id: u8, name: &'static str) -> Outcome {
        Outcome {
            id,
            name,
            started: Instant::now(),
            measurements: BTreeMap::new(),
        }
    }

    fn measure(&mut self, key: &str, value: f64) {
        self.measurements.insert(key.to_string(), value);
    }

    fn finish(self, passed: bool, detail: String, limit: Option<Duration>) -> CriterionOutcome {
        let elapsed = self.started.elapsed();
        let in_time = limit.map_or(true, |l| elapsed < l);
        let detail = if in_time {
            detail
        } else {
            format!("{detail}; exceeded time limit {:?}", limit.expect("limit"))
        };
        CriterionOutcome {
            id: self.id,
            name: self.name.to_string(),
            passed: passed && in_time,
            detail,
            elapsed_ms: elapsed.as_millis() as u64,
            measurements: self.measurements,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    /// Fellow-traveling constant measured by criterion 6 (at least 1).
    pub c_hat: u64,
    pub outcomes: Vec<CriterionOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

/// Runs every criterion in order. Criteria 7–9 use the `Ĉ` measured by 6.
pub fn run_all(config: &VerifyConfig) -> VerifyReport {
    run_all_with(config, |_| {})
}

/// As [`run_all`], reporting each outcome as soon as it is known.
pub fn run_all_with<F: FnMut(&CriterionOutcome)>(config: &VerifyConfig, mut on_outcome: F) -> VerifyReport {
    let metric = YMetric::with_base_length(config.base_length).expect("valid base length");
    let mut outcomes = Vec::new();
    let mut record = |o: CriterionOutcome, outcomes: &mut Vec<CriterionOutcome>| {
        on_outcome(&o);
        outcomes.push(o);
    };
    record(non_qi_orbit(&metric), &mut outcomes);
    let (power, translation) = power_and_translation_bounds(&metric, config.seed);
    record(power, &mut outcomes);
    record(translation, &mut outcomes);
    record(distance_cross_validation(config.seed), &mut outcomes);
    record(metric_axioms(&metric, config.seed), &mut outcomes);
    let (fellow, c_hat) = fellow_traveling(&metric, config.seed);
    record(fellow, &mut outcomes);
    record(quasiconvexity(&metric, c_hat, config.seed), &mut outcomes);
    record(gluing(&metric, c_hat, config.seed), &mut outcomes);
    record(acylindricity_census(&metric, c_hat, config.seed), &mut outcomes);
    record(schedule_aperiodicity(&metric), &mut outcomes);
    VerifyReport {
        config: *config,
        c_hat,
        outcomes,
    }
}

/// 1. `d_Y(1, v_n) = 1` while `|v_n|_A = L0 + n - 1`.
pub fn non_qi_orbit(metric: &YMetric) -> CriterionOutcome {
    let mut out = Outcome::start(1, "non-qi-orbit");
    let schedule = *metric.oracle().schedule();
    let one = ReducedWord::identity();
    let mut failures = Vec::new();
    for n in 1..=ORBIT_WORDS {
        let v = schedule.v(n).expect("n >= 1");
        let d = metric.dist(&one, &v);
        if d != 1 || v.len() != schedule.base_length() + n - 1 {
            failures.push(format!("n={n}: d_Y={d}, |v|={}", v.len()));
        }
    }
    out.measure("words", ORBIT_WORDS as f64);
    out.measure("max_word_length", (schedule.base_length() + ORBIT_WORDS - 1) as f64);
    let passed = failures.is_empty();
    let detail = if passed {
        format!("d_Y(1,v_n)=1 for n=1..{ORBIT_WORDS}, |v_n|_A up to {}", schedule.base_length() + ORBIT_WORDS - 1)
    } else {
        format!("{} failures, first {}", failures.len(), failures[0])
    };
    out.finish(passed, detail, Some(ORBIT_TIME_LIMIT))
}

/// Nontrivial `g` in `F(a,b)` with `|g|_A <= 8`, one per sample index.
pub fn power_sample(seed: u64, index: u64) -> ReducedWord {
    let mut rng = sample_rng(seed ^ 0x5057_4552, index);
    let len = rng.gen_range(1..=POWER_MAX_WORD_LEN);
    random_reduced_word(&mut rng, len, Alphabet::CFree)
}

/// 2. `|g^n|_Y >= ⌊n/7⌋` and 3. `min_n |g^n|_Y / n >= 1/7`.
pub fn power_and_translation_bounds(metric: &YMetric, seed: u64) -> (CriterionOutcome, CriterionOutcome) {
    let mut out2 = Outcome::start(2, "power-bound");
    let estimates: Vec<_> = (0..POWER_SAMPLES)
        .into_par_iter()
        .map(|i| {
            let g = power_sample(seed, i);
            metric.power_lengths(&g, POWER_MAX_EXPONENT).expect("nontrivial g, N >= 1")
        })
        .collect();
    let violations: Vec<String> = estimates
        .iter()
        .flat_map(|e| {
            e.power_bound_violations
                .iter()
                .map(move |s| format!("g={} n={} |g^n|_Y={}", e.g, s.n, s.y_length))
        })
        .collect();
    out2.measure("samples", POWER_SAMPLES as f64);
    out2.measure("violations", violations.len() as f64);
    let detail2 = if violations.is_empty() {
        format!("{POWER_SAMPLES} elements x n<= {POWER_MAX_EXPONENT}, zero violations")
    } else {
        format!("{} violations, first {}", violations.len(), violations[0])
    };
    let power = out2.finish(violations.is_empty(), detail2, Some(POWER_TIME_LIMIT));

    let mut out3 = Outcome::start(3, "translation-length");
    let seventh = Fraction::new(1, 7);
    let min_upper = estimates.iter().map(|e| e.upper).min().expect("samples");
    let worst = estimates.iter().min_by_key(|e| e.upper).expect("samples");
    let below: Vec<&crate::ydist::TranslationLengthEstimate> =
        estimates.iter().filter(|e| e.upper < seventh).collect();
    out3.measure("min_upper_estimate", min_upper.to_f64());
    out3.measure("violations", below.len() as f64);
    let detail3 = if below.is_empty() {
        format!("min over samples of min_n |g^n|_Y/n = {min_upper} (g={}) >= 1/7", worst.g)
    } else {
        format!("{} below 1/7, first g={} upper={}", below.len(), below[0].g, below[0].upper)
    };
    let translation = out3.finish(below.is_empty(), detail3, None);
    (power, translation)
}

fn cross_check_word(metric: &YMetric, seed: u64, index: u64, max_len: usize) -> ReducedWord {
    let mut rng = sample_rng(seed, index);
    if index % 2 == 0 {
        let len = rng.gen_range(1..=max_len);
        random_reduced_word(&mut rng, len, Alphabet::Full)
    } else {
        random_structured_word(&mut rng, metric.oracle().schedule(), max_len)
    }
}

/// 4. Greedy vs DP factor counts, oracle vs brute-force membership, and DP
/// vs brute-force minimal factorization.
pub fn distance_cross_validation(seed: u64) -> CriterionOutcome {
    let mut out = Outcome::start(4, "distance-cross-check");
    let metric = YMetric::with_base_length(1).expect("valid");
    let greedy_seed = seed ^ 0x4752_4545;
    let greedy_mismatches: Vec<String> = (0..CROSS_CHECK_WORDS)
        .into_par_iter()
        .filter_map(|i| {
            let w = cross_check_word(&metric, greedy_seed, i, CROSS_CHECK_MAX_LEN);
            let dp = metric.factorize_dp(&w).len();
            let greedy = metric.factorize_greedy(&w).len();
            (dp != greedy).then(|| format!("{w}: dp={dp} greedy={greedy}"))
        })
        .collect();

    let mut membership_mismatches = Vec::new();
    let mut dp_mismatches = Vec::new();
    let mut words_checked = 0u64;
    for l0 in BRUTE_BASE_LENGTHS {
        let metric = YMetric::with_base_length(l0).expect("valid");
        let brute = BruteMembership::new(l0, BRUTE_MAX_N, BRUTE_MAX_M, BRUTE_MAX_LEN);
        for len in 1..=BRUTE_MAX_LEN {
            let total = 3u64.pow(len as u32);
            words_checked += total;
            let bad: Vec<String> = (0..total)
                .into_par_iter()
                .filter_map(|code| {
                    let z = positive_word(len, code);
                    let fast = metric.oracle().is_w_word(&z).expect("nontrivial");
                    (fast != brute.contains(&z)).then(|| format!("L0={l0} z={z}: oracle={fast}"))
                })
                .collect();
            membership_mismatches.extend(bad);
        }
        let dp_seed = seed ^ (0x4450_0000 + l0 as u64);
        let bad: Vec<String> = (0..BRUTE_DP_WORDS)
            .into_par_iter()
            .filter_map(|i| {
                let w = cross_check_word(&metric, dp_seed, i, BRUTE_MAX_LEN);
                let dp = metric.factorize_dp(&w).len();
                let reference = brute.min_factor_count(&w);
                (dp != reference).then(|| format!("L0={l0} w={w}: dp={dp} brute={reference}"))
            })
            .collect();
        dp_mismatches.extend(bad);
    }

    out.measure("greedy_dp_words", CROSS_CHECK_WORDS as f64);
    out.measure("greedy_dp_mismatches", greedy_mismatches.len() as f64);
    out.measure("membership_words", words_checked as f64);
    out.measure("membership_mismatches", membership_mismatches.len() as f64);
    out.measure("dp_brute_mismatches", dp_mismatches.len() as f64);
    let passed = greedy_mismatches.is_empty() && membership_mismatches.is_empty() && dp_mismatches.is_empty();
    let detail = if passed {
        format!(
            "greedy==dp on {CROSS_CHECK_WORDS} words; oracle==brute on {words_checked} words; dp==brute on {} words",
            BRUTE_DP_WORDS * BRUTE_BASE_LENGTHS.len() as u64
        )
    } else {
        let first = greedy_mismatches
            .first()
            .or(membership_mismatches.first())
            .or(dp_mismatches.first())
            .cloned()
            .unwrap_or_default();
        format!(
            "mismatches: greedy/dp {}, membership {}, dp/brute {}; first {first}",
            greedy_mismatches.len(),
            membership_mismatches.len(),
            dp_mismatches.len()
        )
    };
    out.finish(passed, detail, Some(CROSS_CHECK_TIME_LIMIT))
}

/// The positive word of length `len` whose base-3 digits are `code`.
fn positive_word(len: usize, mut code: u64) -> ReducedWord {
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        letters.push([Letter::A, Letter::B, Letter::C][(code % 3) as usize]);
        code /= 3;
    }
    ReducedWord::from_letters(letters)
}

/// 5. Symmetry, triangle inequality and identity of indiscernibles for `d_Y`.
pub fn metric_axioms(metric: &YMetric, seed: u64) -> CriterionOutcome {
    let mut out = Outcome::start(5, "metric-axioms");
    let seed = seed ^ 0x4d45_5452;
    let violations: Vec<String> = (0..METRIC_TRIPLES)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = sample_rng(seed, i);
            let mut pick = |k: u64| {
                if (i + k) % 2 == 0 {
                    let len = rng.gen_range(0..=METRIC_MAX_LEN);
                    random_reduced_word(&mut rng, len, Alphabet::Full)
                } else {
                    let len = rng.gen_range(0..=METRIC_MAX_LEN);
                    random_structured_word_of_len(&mut rng, metric.oracle().schedule(), len)
                }
            };
            let (x, y, z) = (pick(0), pick(1), pick(2));
            let dxy = metric.dist(&x, &y);
            let dyx = metric.dist(&y, &x);
            let dyz = metric.dist(&y, &z);
            let dxz = metric.dist(&x, &z);
            if dxy != dyx {
                return Some(format!("asymmetric: d({x},{y})={dxy} d({y},{x})={dyx}"));
            }
            if dxz > dxy + dyz {
                return Some(format!("triangle: x={x} y={y} z={z}"));
            }
            if metric.dist(&x, &x) != 0 || (dxy == 0) != (x == y) {
                return Some(format!("indiscernibles: x={x} y={y}"));
            }
            None
        })
        .collect();
    out.measure("triples", METRIC_TRIPLES as f64);
    out.measure("violations", violations.len() as f64);
    let passed = violations.is_empty();
    let detail = if passed {
        format!("{METRIC_TRIPLES} triples, zero violations")
    } else {
        format!("{} violations, first {}", violations.len(), violations[0])
    };
    out.finish(passed, detail, None)
}

/// 6. Hausdorff distance of `X`- and `Y`-geodesics; returns `Ĉ >= 1`.
pub fn fellow_traveling(metric: &YMetric, seed: u64) -> (CriterionOutcome, u64) {
    let mut out = Outcome::start(6, "fellow-traveling");
    let report = hausdorff_experiment(metric, HAUSDORFF_PAIRS, HAUSDORFF_MIN_LEN, HAUSDORFF_MAX_LEN, seed);
    let measured = report.c_estimate.expect("hausdorff sets c_estimate");
    let c_hat = measured.max(1);
    let low = &report.bands[0];
    let high = &report.bands[1];
    out.measure("c_hat_measured", measured as f64);
    out.measure("c_hat", c_hat as f64);
    out.measure("band_low_max", low.maximum as f64);
    out.measure("band_high_max", high.maximum as f64);
    let passed = high.maximum <= low.maximum + 1;
    let detail = format!(
        "measured max {measured} (C-hat {c_hat}); band [{},{}]: {} over {} pairs, band [{},{}]: {} over {} pairs",
        low.min_len, low.max_len, low.maximum, low.samples, high.min_len, high.max_len, high.maximum, high.samples
    );
    (out.finish(passed, detail, None), c_hat)
}

/// 7. Quasiconvexity probe `<= Ĉ + 1`.
pub fn quasiconvexity(metric: &YMetric, c_hat: u64, seed: u64) -> CriterionOutcome {
    let mut out = Outcome::start(7, "quasiconvexity");
    let report = quasiconvexity_experiment(metric, QC_SAMPLES, QC_MAX_LEN, c_hat, seed);
    out.measure("max_probe", report.max_value as f64);
    out.measure("violations", report.violations as f64);
    let detail = format!(
        "{} elements of F(a,b), max probe {} <= {}; {} violations",
        report.sample_count,
        report.max_value,
        c_hat + 1,
        report.violations
    );
    out.finish(report.violations == 0, detail, None)
}

/// 8. Gluing defect `<= 2Ĉ`.
pub fn gluing(metric: &YMetric, c_hat: u64, seed: u64) -> CriterionOutcome {
    let mut out = Outcome::start(8, "gluing-defect");
    let report = gluing_experiment(metric, GLUING_SAMPLES, GLUING_MAX_LEN, c_hat, seed);
    out.measure("max_defect", report.max_value as f64);
    out.measure("violations", report.violations as f64);
    let detail = format!(
        "{} triples, max defect {} <= {}; {} violations",
        report.sample_count,
        report.max_value,
        2 * c_hat,
        report.violations
    );
    out.finish(report.violations == 0, detail, None)
}

/// A vertex pair `(x, y)` with `d_Y(x, y) >= separation`.
///
/// Index mod 3 selects the construction: `(1, random F(a,b) word)`,
/// `(1, h^K)` or `(s, s h^K)` for a short root-free `h` and short `s`.
pub fn separated_pair(metric: &YMetric, separation: u64, seed: u64, index: u64) -> (ReducedWord, ReducedWord) {
    let mut rng = sample_rng(seed, index);
    let target = separation as usize;
    match index % 3 {
        0 => {
            let mut y = ReducedWord::identity();
            while metric.length(&y) < target {
                let chunk = random_reduced_word(&mut rng, target, Alphabet::CFree);
                y = y.multiply(&chunk);
            }
            (ReducedWord::identity(), y)
        }
        kind => {
            let h = loop {
                let len = rng.gen_range(2..=5);
                let h = random_reduced_word(&mut rng, len, Alphabet::CFree);
                if h.is_cyclically_reduced() && h.is_root_free() {
                    break h;
                }
            };
            let mut exponent = 64i64;
            while metric.length(&h.power(exponent)) < target {
                exponent *= 2;
            }
            let y = h.power(exponent);
            if kind == 1 {
                (ReducedWord::identity(), y)
            } else {
                let s_len = rng.gen_range(1..=6);
                let s = random_reduced_word(&mut rng, s_len, Alphabet::CFree);
                let y = s.multiply(&y);
                (s, y)
            }
        }
    }
}

/// 9. Coarse-stabilizer census for well-separated pairs.
pub fn acylindricity_census(metric: &YMetric, c_hat: u64, seed: u64) -> CriterionOutcome {
    let mut out = Outcome::start(9, "acylindricity-census");
    let mut failures = Vec::new();
    let mut max_members = 0usize;
    let mut max_exponent = 0u64;
    let mut with_roots = 0usize;
    let mut thresholds = Vec::new();
    for radius in CENSUS_RADII {
        let params = AcylParams::new(radius, c_hat).expect("radius >= 1");
        thresholds.push(format!(
            "R={radius}: L={} M={} exp<={}",
            params.separation, params.max_members, params.exponent_cap
        ));
        let pair_seed = seed ^ (0x4143_594c_0000 + radius);
        let pairs: Vec<(ReducedWord, ReducedWord)> = (0..CENSUS_PAIRS)
            .into_par_iter()
            .map(|i| separated_pair(metric, params.separation, pair_seed, i))
            .collect();
        for (x, y) in pairs {
            let report = census(
                metric,
                &x,
                &y,
                params,
                CensusLimits {
                    cap: CENSUS_CAP,
                    ..CensusLimits::default()
                },
            );
            max_members = max_members.max(report.members.len());
            let tag = format!("R={radius} x={x} |y|_A={}", y.len());
            if !report.complete {
                failures.push(format!("{tag}: enumeration incomplete"));
            }
            if !report.separated {
                failures.push(format!("{tag}: d_Y(x,y)={} < L", report.pair_distance));
            }
            if !report.bound_holds {
                failures.push(format!("{tag}: {} members > M-1", report.members.len()));
            }
            match root_structure(&report) {
                Ok(Some(rs)) => {
                    with_roots += 1;
                    max_exponent = max_exponent.max(rs.exponents.iter().map(|t| t.unsigned_abs()).max().unwrap_or(0));
                }
                Ok(None) => {}
                Err(e) => failures.push(format!("{tag}: {e}")),
            }
        }
    }
    out.measure("c_hat", c_hat as f64);
    out.measure("max_members", max_members as f64);
    out.measure("max_exponent", max_exponent as f64);
    out.measure("censuses_with_root", with_roots as f64);
    let passed = failures.is_empty();
    let detail = if passed {
        format!(
            "{} censuses at cap {CENSUS_CAP} ({}); max members {max_members}, {with_roots} with common root, max |t| {max_exponent}",
            CENSUS_PAIRS as usize * CENSUS_RADII.len(),
            thresholds.join("; ")
        )
    } else {
        format!("{} failures, first {}", failures.len(), failures[0])
    };
    out.finish(passed, detail, Some(CENSUS_TIME_LIMIT))
}

/// 10. Every `v_n`, `n <= 512`, is 7-aperiodic.
pub fn schedule_aperiodicity(metric: &YMetric) -> CriterionOutcome {
    let mut out = Outcome::start(10, "schedule-aperiodic");
    let schedule = *metric.oracle().schedule();
    let bad: Vec<usize> = (1..=APERIODIC_WORDS)
        .into_par_iter()
        .filter(|&n| !is_7_aperiodic(&schedule.v(n).expect("n >= 1")))
        .collect();
    out.measure("words", APERIODIC_WORDS as f64);
    let passed = bad.is_empty();
    let detail = if passed {
        format!("v_1..v_{APERIODIC_WORDS} contain no 7th power")
    } else {
        format!("{} words fail, first n={}", bad.len(), bad[0])
    };
    out.finish(passed, detail, Some(APERIODIC_TIME_LIMIT))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_word_enumeration() {
        assert_eq!(positive_word(3, 0).to_text(), "aaa");
        assert_eq!(positive_word(2, 5).to_text(), "cb");
    }

    #[test]
    fn separated_pairs_reach_target() {
        let m = YMetric::default();
        for i in 0..3 {
            let (x, y) = separated_pair(&m, 300, 1, i);
            assert!(m.dist(&x, &y) >= 300);
            assert!(x.is_c_free() && y.is_c_free());
        }
    }

    #[test]
    fn outcome_line_format() {
        let o = Outcome::start(3, "demo").finish(true, "ok".into(), None);
        assert!(o.to_string().starts_with("[PASS]  3 demo"));
    }
}
