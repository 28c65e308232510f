//! Empirical geometry of `Y`: fellow-traveling of `X`- and `Y`-geodesics,
//! four-point hyperbolicity defects, gluing defects along `X`-geodesics, and
//! quasiconvexity of the `F(a,b)` orbit.
//!
//! Every estimate is a maximum over samples, hence a lower bound for the
//! corresponding true constant.

use std::collections::HashSet;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampling::{random_reduced_word, random_structured_word_of_len, sample_rng, Alphabet};
use crate::words::ReducedWord;
use crate::ydist::YMetric;

/// A path given by its vertices (group elements).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPath {
    pub vertices: Vec<ReducedWord>,
}

impl VertexPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// The unique geodesic in the tree `X`: `x` times the prefixes of `x⁻¹y`.
pub fn x_geodesic(x: &ReducedWord, y: &ReducedWord) -> VertexPath {
    let label = x.left_divide(y);
    VertexPath {
        vertices: (0..=label.len()).map(|i| x.multiply(&label.prefix(i))).collect(),
    }
}

/// The `Y`-geodesic read off the optimal 𝒲-decomposition of `x⁻¹y`.
pub fn y_geodesic(metric: &YMetric, x: &ReducedWord, y: &ReducedWord) -> VertexPath {
    let label = x.left_divide(y);
    let factorization = metric.factorize_dp(&label);
    VertexPath {
        vertices: factorization
            .cuts()
            .into_iter()
            .map(|c| x.multiply(&label.prefix(c)))
            .collect(),
    }
}

/// Symmetrized Hausdorff distance between vertex sets, measured in `d_Y`.
pub fn hausdorff_y(metric: &YMetric, p: &VertexPath, q: &VertexPath) -> Result<usize> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptyPath);
    }
    Ok(directed_hausdorff(metric, p, q).max(directed_hausdorff(metric, q, p)))
}

fn directed_hausdorff(metric: &YMetric, from: &VertexPath, to: &VertexPath) -> usize {
    let targets: HashSet<&ReducedWord> = to.vertices.iter().collect();
    from.vertices
        .iter()
        .map(|p| {
            if targets.contains(p) {
                return 0;
            }
            // distinct vertices are at distance >= 1, so any neighbour settles it
            let labels: Vec<ReducedWord> = to.vertices.iter().map(|q| p.left_divide(q)).collect();
            if labels.iter().any(|l| metric.oracle().is_w_slice(l.letters())) {
                return 1;
            }
            labels.iter().map(|l| metric.length(l)).min().unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

/// `|d_Y(x,x') + d_Y(x',y) - d_Y(x,y)|` for `x'` on the `X`-geodesic `[x,y]`.
pub fn gluing_defect(metric: &YMetric, x: &ReducedWord, mid: &ReducedWord, y: &ReducedWord) -> Result<usize> {
    let label = x.left_divide(y);
    let partial = x.left_divide(mid);
    if partial.len() > label.len() || label.letters()[..partial.len()] != *partial.letters() {
        return Err(Error::NotOnGeodesic {
            vertex: mid.to_string(),
            from: x.to_string(),
            to: y.to_string(),
        });
    }
    let sum = metric.dist(x, mid) + metric.dist(mid, y);
    Ok(sum.abs_diff(metric.dist(x, y)))
}

/// Four-point defect of a quadruple, in half-units: the largest of the three
/// pairwise distance sums minus the middle one.
pub fn four_point_defect_doubled(metric: &YMetric, quad: &[ReducedWord; 4]) -> u64 {
    let d = |i: usize, j: usize| metric.dist(&quad[i], &quad[j]) as u64;
    let mut sums = [d(0, 1) + d(2, 3), d(0, 2) + d(1, 3), d(0, 3) + d(1, 2)];
    sums.sort_unstable();
    sums[2] - sums[1]
}

/// Four-point defect `δ` of a quadruple.
pub fn four_point_defect(metric: &YMetric, quad: &[ReducedWord; 4]) -> f64 {
    four_point_defect_doubled(metric, quad) as f64 / 2.0
}

/// Largest distance from a vertex of the `Y`-geodesic `[1,g]` to the
/// `X`-geodesic `[1,g]`, whose vertices all lie in `F(a,b)`.
pub fn quasiconvexity_probe(metric: &YMetric, g: &ReducedWord) -> Result<usize> {
    if !g.is_c_free() {
        return Err(Error::NotCFree(g.to_string()));
    }
    let one = ReducedWord::identity();
    let ypath = y_geodesic(metric, &one, g);
    let xpath = x_geodesic(&one, g);
    Ok(directed_hausdorff(metric, &ypath, &xpath))
}

/// Maximum observed over samples whose word length falls in `[min_len, max_len]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandMaximum {
    pub min_len: usize,
    pub max_len: usize,
    pub samples: usize,
    pub maximum: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryReport {
    pub experiment: String,
    pub seed: u64,
    pub sample_count: usize,
    /// Largest four-point defect seen (delta experiment).
    pub delta_estimate: Option<f64>,
    /// Largest Hausdorff distance seen (fellow-traveling experiment).
    pub c_estimate: Option<u64>,
    /// Largest raw value of the experiment's statistic.
    pub max_value: u64,
    /// Inputs realizing `max_value`.
    pub max_defect_witness: Vec<ReducedWord>,
    pub bands: Vec<BandMaximum>,
    /// Bound the statistic was checked against, if any.
    pub threshold: Option<u64>,
    pub violations: usize,
}

struct Sample {
    index: u64,
    len: usize,
    value: u64,
    witness: Vec<ReducedWord>,
}

fn run_samples<F>(samples: usize, f: F) -> Vec<Sample>
where
    F: Fn(u64) -> Sample + Sync + Send,
{
    (0..samples as u64).into_par_iter().map(f).collect()
}

fn summarize(
    experiment: &str,
    seed: u64,
    results: &[Sample],
    threshold: Option<u64>,
    bands: &[(usize, usize)],
) -> GeometryReport {
    // ties go to the lowest sample index, independent of scheduling
    let best = results.iter().max_by(|a, b| a.value.cmp(&b.value).then(b.index.cmp(&a.index)));
    let band_maxima = bands
        .iter()
        .map(|&(lo, hi)| {
            let inside: Vec<&Sample> = results.iter().filter(|s| s.len >= lo && s.len <= hi).collect();
            BandMaximum {
                min_len: lo,
                max_len: hi,
                samples: inside.len(),
                maximum: inside.iter().map(|s| s.value).max().unwrap_or(0),
            }
        })
        .collect();
    GeometryReport {
        experiment: experiment.to_string(),
        seed,
        sample_count: results.len(),
        delta_estimate: None,
        c_estimate: None,
        max_value: best.map_or(0, |s| s.value),
        max_defect_witness: best.map(|s| s.witness.clone()).unwrap_or_default(),
        bands: band_maxima,
        threshold,
        violations: threshold.map_or(0, |t| results.iter().filter(|s| s.value > t).count()),
    }
}

/// Random label of exactly `len` letters; odd samples are uniform, even
/// samples are stitched from powers of the coning words.
fn mixed_word<R: Rng>(metric: &YMetric, rng: &mut R, index: u64, len: usize, alphabet: Alphabet) -> ReducedWord {
    if index % 2 == 1 || alphabet == Alphabet::CFree {
        random_reduced_word(rng, len, alphabet)
    } else {
        random_structured_word_of_len(rng, metric.oracle().schedule(), len)
    }
}

/// Hausdorff distance between `[x,y]_X` and `[x,y]_Y` over random pairs with
/// `|x⁻¹y|_A` uniform in `[min_len, max_len]`. Bands are `[min_len, max_len/2]`
/// and `[max_len/2, max_len]`, the last doubling of the length.
pub fn hausdorff_experiment(
    metric: &YMetric,
    samples: usize,
    min_len: usize,
    max_len: usize,
    seed: u64,
) -> GeometryReport {
    let min_len = min_len.min(max_len);
    let results = run_samples(samples, |index| {
        let mut rng = sample_rng(seed, index);
        let len = rng.gen_range(min_len..=max_len);
        let x_len = rng.gen_range(0..=8);
        let x = random_reduced_word(&mut rng, x_len, Alphabet::Full);
        let label = mixed_word(metric, &mut rng, index, len, Alphabet::Full);
        let y = x.multiply(&label);
        let value = hausdorff_y(metric, &x_geodesic(&x, &y), &y_geodesic(metric, &x, &y)).expect("nonempty paths") as u64;
        Sample {
            index,
            len,
            value,
            witness: vec![x, y],
        }
    });
    let mid = (max_len / 2).max(min_len);
    let mut report = summarize("hausdorff", seed, &results, None, &[(min_len, mid), (mid, max_len)]);
    report.c_estimate = Some(report.max_value);
    report
}

/// Four-point defects of random quadruples of words of length `<= max_len`.
pub fn delta_experiment(metric: &YMetric, samples: usize, max_len: usize, seed: u64) -> GeometryReport {
    let results = run_samples(samples, |index| {
        let mut rng = sample_rng(seed, index);
        let quad: [ReducedWord; 4] = std::array::from_fn(|_| {
            let len = rng.gen_range(0..=max_len);
            mixed_word(metric, &mut rng, index, len, Alphabet::Full)
        });
        Sample {
            index,
            len: quad.iter().map(ReducedWord::len).max().unwrap_or(0),
            value: four_point_defect_doubled(metric, &quad),
            witness: quad.to_vec(),
        }
    });
    let mut report = summarize("delta", seed, &results, None, &[]);
    report.delta_estimate = Some(report.max_value as f64 / 2.0);
    report
}

/// Quasiconvexity probe on random `g` in `F(a,b)` with `1 <= |g|_A <= max_len`,
/// checked against `c_hat + 1`.
pub fn quasiconvexity_experiment(
    metric: &YMetric,
    samples: usize,
    max_len: usize,
    c_hat: u64,
    seed: u64,
) -> GeometryReport {
    let results = run_samples(samples, |index| {
        let mut rng = sample_rng(seed, index);
        let len = rng.gen_range(1..=max_len.max(1));
        let g = if index % 2 == 0 {
            random_reduced_word(&mut rng, len, Alphabet::CFree)
        } else {
            c_free_structured(metric, &mut rng, len)
        };
        Sample {
            index,
            len: g.len(),
            value: quasiconvexity_probe(metric, &g).expect("c-free sample") as u64,
            witness: vec![g],
        }
    });
    summarize("qc-probe", seed, &results, Some(c_hat + 1), &[])
}

/// Concatenated pieces of `v_n^{±1}`, so that long Thue–Morse factors occur.
fn c_free_structured<R: Rng>(metric: &YMetric, rng: &mut R, len: usize) -> ReducedWord {
    let schedule = metric.oracle().schedule();
    let mut g = ReducedWord::identity();
    let mut guard = 0;
    while g.len() < len && guard < 4 * len + 8 {
        guard += 1;
        let v = schedule.v(rng.gen_range(1..=32)).expect("n >= 1");
        let start = rng.gen_range(0..v.len());
        let end = rng.gen_range(start + 1..=v.len());
        let mut piece = v.subword(start, end);
        if rng.gen_bool(0.5) {
            piece = piece.inverse();
        }
        g = g.multiply(&piece);
    }
    if g.len() > len {
        g = g.prefix(len);
    }
    if g.is_identity() {
        g = ReducedWord::letter(crate::words::Letter::A);
    }
    g
}

/// Gluing defect at a random vertex of a random `X`-geodesic, checked
/// against `2 * c_hat`.
pub fn gluing_experiment(metric: &YMetric, samples: usize, max_len: usize, c_hat: u64, seed: u64) -> GeometryReport {
    let results = run_samples(samples, |index| {
        let mut rng = sample_rng(seed, index);
        let len = rng.gen_range(1..=max_len.max(1));
        let x_len = rng.gen_range(0..=8);
        let x = random_reduced_word(&mut rng, x_len, Alphabet::Full);
        let label = mixed_word(metric, &mut rng, index, len, Alphabet::Full);
        let cut = rng.gen_range(0..=label.len());
        let y = x.multiply(&label);
        let mid = x.multiply(&label.prefix(cut));
        Sample {
            index,
            len,
            value: gluing_defect(metric, &x, &mid, &y).expect("vertex on geodesic") as u64,
            witness: vec![x, mid, y],
        }
    });
    summarize("gluing", seed, &results, Some(2 * c_hat), &[])
}
