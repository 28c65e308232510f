//! Word length and distance in `Y`.
//!
//! `|w|_Y` is the least number of factors in a graphical decomposition
//! `w = z_1 … z_k` into 𝒲-words. [`YMetric::factorize_dp`] computes it by
//! dynamic programming over all cuts; [`YMetric::factorize_greedy`] takes the
//! longest 𝒲-prefix at every step and is the fast path used for distances.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::woracle::{WOracle, WOracleConfig};
use crate::words::{Letter, ReducedWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorizationMethod {
    Dp,
    Greedy,
}

/// A 𝒲-decomposition of a reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WFactorization {
    pub factors: Vec<ReducedWord>,
    pub method: FactorizationMethod,
}

impl WFactorization {
    /// Number of factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Graphical concatenation of the factors.
    pub fn concatenation(&self) -> Vec<Letter> {
        self.factors.iter().flat_map(|f| f.letters().iter().copied()).collect()
    }

    /// Cut positions `0 = c_0 < c_1 < … < c_k = |w|`.
    pub fn cuts(&self) -> Vec<usize> {
        let mut cuts = Vec::with_capacity(self.factors.len() + 1);
        let mut pos = 0;
        cuts.push(0);
        for f in &self.factors {
            pos += f.len();
            cuts.push(pos);
        }
        cuts
    }
}

/// A nonnegative rational compared exactly.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Fraction {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Fraction {}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// One sample `|g^n|_Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSample {
    pub n: u64,
    pub y_length: u64,
}

/// Bounds on the asymptotic translation length `‖g‖_Y`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TranslationLengthEstimate {
    pub g: ReducedWord,
    pub samples: Vec<PowerSample>,
    /// `min_n |g^n|_Y / n`; the limit is the infimum by subadditivity.
    pub upper: Fraction,
    /// `1/7` for nontrivial `g` in `F(a,b)`, none otherwise.
    pub lower: Option<Fraction>,
    /// Samples violating `|g^n|_Y >= ⌊n/7⌋` (only checked in `F(a,b)`).
    pub power_bound_violations: Vec<PowerSample>,
}

/// Distances in `Y` for a fixed word schedule.
#[derive(Debug, Default)]
pub struct YMetric {
    oracle: WOracle,
}

impl YMetric {
    pub fn new(config: WOracleConfig) -> YMetric {
        YMetric {
            oracle: WOracle::new(config),
        }
    }

    pub fn with_base_length(base_length: usize) -> Result<YMetric> {
        Ok(YMetric::new(WOracleConfig::with_base_length(base_length)?))
    }

    pub fn oracle(&self) -> &WOracle {
        &self.oracle
    }

    /// Optimal decomposition by dynamic programming over all cuts.
    ///
    /// Only same-sign subwords are queried; every other subword fails the
    /// 𝒲-word definition outright.
    pub fn factorize_dp(&self, w: &ReducedWord) -> WFactorization {
        let letters = w.letters();
        let n = letters.len();
        let mut best = vec![usize::MAX; n + 1];
        let mut back = vec![0usize; n + 1];
        best[0] = 0;
        let mut run_start = 0;
        for end in 1..=n {
            if end >= 2 && letters[end - 1].is_positive() != letters[end - 2].is_positive() {
                run_start = end - 1;
            }
            for start in run_start..end {
                if best[start] == usize::MAX || best[start] + 1 >= best[end] {
                    continue;
                }
                if self.oracle.is_w_slice(&letters[start..end]) {
                    best[end] = best[start] + 1;
                    back[end] = start;
                }
            }
        }
        let mut factors = Vec::with_capacity(best[n]);
        let mut end = n;
        while end > 0 {
            let start = back[end];
            factors.push(w.subword(start, end));
            end = start;
        }
        factors.reverse();
        WFactorization {
            factors,
            method: FactorizationMethod::Dp,
        }
    }

    /// Longest-𝒲-prefix decomposition.
    pub fn factorize_greedy(&self, w: &ReducedWord) -> WFactorization {
        let mut factors = Vec::new();
        let mut pos = 0;
        while pos < w.len() {
            let step = self.oracle.longest_w_prefix(w, pos);
            factors.push(w.subword(pos, pos + step));
            pos += step;
        }
        WFactorization {
            factors,
            method: FactorizationMethod::Greedy,
        }
    }

    /// `|w|_Y` by the greedy path; `0` for the identity.
    pub fn length(&self, w: &ReducedWord) -> usize {
        self.length_of_slice(w.letters())
    }

    pub(crate) fn length_of_slice(&self, letters: &[Letter]) -> usize {
        let mut pos = 0;
        let mut count = 0;
        while pos < letters.len() {
            pos += self.oracle.longest_w_prefix_slice(letters, pos);
            count += 1;
        }
        count
    }

    /// `d_Y(x, y) = |x⁻¹y|_Y`.
    pub fn dist(&self, x: &ReducedWord, y: &ReducedWord) -> usize {
        self.length(&x.left_divide(y))
    }

    /// `|g^n|_Y` for `n = 1..=max_power`, with translation-length bounds.
    pub fn power_lengths(&self, g: &ReducedWord, max_power: u64) -> Result<TranslationLengthEstimate> {
        if g.is_identity() {
            return Err(Error::IdentityInput);
        }
        if max_power == 0 {
            return Err(Error::InvalidMaxPower);
        }
        let samples: Vec<PowerSample> = (1..=max_power)
            .into_par_iter()
            .map(|n| PowerSample {
                n,
                y_length: self.length(&g.power(n as i64)) as u64,
            })
            .collect();
        let upper = samples
            .iter()
            .map(|s| Fraction::new(s.y_length, s.n))
            .min()
            .expect("at least one sample");
        let in_f_ab = g.is_c_free();
        let lower = in_f_ab.then(|| Fraction::new(1, 7));
        let power_bound_violations = if in_f_ab {
            samples.iter().copied().filter(|s| s.y_length < s.n / 7).collect()
        } else {
            Vec::new()
        };
        Ok(TranslationLengthEstimate {
            g: g.clone(),
            samples,
            upper,
            lower,
            power_bound_violations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse;

    fn w(s: &str) -> ReducedWord {
        parse(s).unwrap()
    }

    #[test]
    fn dp_examples() {
        let m = YMetric::default();
        for n in 1..=40 {
            let v = m.oracle().schedule().v(n).unwrap();
            assert_eq!(m.factorize_dp(&v).len(), 1, "v({n})");
        }
        let f = m.factorize_dp(&w("acb"));
        assert_eq!(f.factors, vec![w("ac"), w("b")]);
        assert_eq!(m.factorize_dp(&w("a")).len(), 1);
        assert_eq!(m.factorize_dp(&w("aa")).len(), 1);
        assert_eq!(m.factorize_dp(&w("aaa")).len(), 2);
        assert!(m.factorize_dp(&ReducedWord::identity()).is_empty());
    }

    #[test]
    fn greedy_examples_match_dp() {
        let m = YMetric::default();
        for text in ["abbabaab", "acb", "a", "aa", "aaa", "aaaaaa", "acacacBBA", "abcabcabcc"] {
            let z = w(text);
            let g = m.factorize_greedy(&z);
            let d = m.factorize_dp(&z);
            assert_eq!(g.len(), d.len(), "{text}");
            assert_eq!(g.concatenation(), z.letters());
            assert_eq!(m.length(&z), d.len());
        }
    }

    #[test]
    fn dist_examples() {
        let m = YMetric::default();
        let x = w("abCab");
        assert_eq!(m.dist(&x, &x), 0);
        for n in 1..=30 {
            let wn = m.oracle().schedule().w(n).unwrap();
            assert_eq!(m.dist(&ReducedWord::identity(), &wn), 1);
        }
        let p = w("ab").power(14);
        assert!(m.dist(&ReducedWord::identity(), &p) >= 2);
        assert_eq!(m.dist(&w("a"), &w("ab")), 1);
    }

    #[test]
    fn power_length_examples() {
        let m = YMetric::default();
        let est = m.power_lengths(&w("a"), 21).unwrap();
        assert!(est.power_bound_violations.is_empty());
        for s in &est.samples {
            assert!(s.y_length >= s.n / 7);
        }
        assert!(est.upper >= Fraction::new(1, 7));
        assert_eq!(est.lower, Some(Fraction::new(1, 7)));

        let est = m.power_lengths(&w("ac"), 12).unwrap();
        assert!(est.samples.iter().all(|s| s.y_length == 1));
        assert_eq!(est.upper, Fraction::new(1, 12));
        assert_eq!(est.lower, None);

        assert_eq!(m.power_lengths(&ReducedWord::identity(), 3), Err(Error::IdentityInput));
        assert_eq!(m.power_lengths(&w("a"), 0), Err(Error::InvalidMaxPower));
    }

    #[test]
    fn fraction_order() {
        assert!(Fraction::new(1, 7) < Fraction::new(1, 6));
        assert_eq!(Fraction::new(2, 14), Fraction::new(1, 7));
        assert_eq!(Fraction::new(0, 5).to_string(), "0/1");
    }
}
