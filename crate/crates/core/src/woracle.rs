//! Membership in the set of 𝒲-words.
//!
//! A nontrivial reduced word `z` is a 𝒲-word when it is a subword of
//! `w_n^m = (v_n c)^m` for some `n >= 1`, `m != 0`. Positive 𝒲-words
//! generate the coned-off graph `Y` as a Cayley graph.
//!
//! The decision procedure splits a same-sign word at its `c` letters,
//! `z = s_0 c s_1 c … c s_k`:
//!
//! * `k = 0`: `z` must be a Thue–Morse factor;
//! * `k = 1`: `s_1` must be a Thue–Morse prefix and `s_0` must end at a
//!   position `ℓ >= max(L0, |s_1|)` of the Thue–Morse word;
//! * `k >= 2`: every interior block equals the same `v_n`, which pins `n`,
//!   and the outer blocks must be a suffix and a prefix of it.

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::aperiodic::{tm_bytes, WordSchedule};
use crate::error::{Error, Result};
use crate::words::{Letter, ReducedWord};

const DEFAULT_CACHE_CAPACITY: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WOracleConfig {
    pub schedule: WordSchedule,
    /// Thue–Morse factor search scans a prefix of length `factor * |s| + pad`.
    pub recurrence_window_factor: usize,
    pub recurrence_window_pad: usize,
}

impl Default for WOracleConfig {
    fn default() -> Self {
        WOracleConfig {
            schedule: WordSchedule::default(),
            recurrence_window_factor: 16,
            recurrence_window_pad: 64,
        }
    }
}

impl WOracleConfig {
    pub fn with_base_length(base_length: usize) -> Result<WOracleConfig> {
        Ok(WOracleConfig {
            schedule: WordSchedule::new(base_length)?,
            ..WOracleConfig::default()
        })
    }
}

/// A pair `(n, m)` such that the word is a subword of `w_n^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    pub m: i64,
}

/// Decides 𝒲-word membership, memoizing results by word.
#[derive(Debug)]
pub struct WOracle {
    config: WOracleConfig,
    cache: DashMap<Vec<u8>, bool>,
    cache_capacity: usize,
}

impl Default for WOracle {
    fn default() -> Self {
        WOracle::new(WOracleConfig::default())
    }
}

impl WOracle {
    pub fn new(config: WOracleConfig) -> WOracle {
        WOracle {
            config,
            cache: DashMap::new(),
            cache_capacity: DEFAULT_CACHE_CAPACITY,
        }
    }

    pub fn with_base_length(base_length: usize) -> Result<WOracle> {
        Ok(WOracle::new(WOracleConfig::with_base_length(base_length)?))
    }

    pub fn config(&self) -> &WOracleConfig {
        &self.config
    }

    pub fn schedule(&self) -> &WordSchedule {
        &self.config.schedule
    }

    fn window_len(&self, factor_len: usize) -> usize {
        self.config.recurrence_window_factor * factor_len + self.config.recurrence_window_pad
    }

    /// Whether `s` (bytes `b'a'`/`b'b'`) occurs in the infinite Thue–Morse word.
    pub fn is_tm_factor(&self, s: &[u8]) -> bool {
        self.tm_occurrence_end(s, 0).is_some()
    }

    /// Whether a positive `{a,b}`-word is a Thue–Morse factor.
    pub fn is_tm_factor_word(&self, s: &ReducedWord) -> bool {
        match ab_bytes(s.letters()) {
            Some(bytes) => self.is_tm_factor(&bytes),
            None => false,
        }
    }

    /// Smallest `e >= min_end` such that `s` occurs in Thue–Morse ending at `e`.
    fn tm_occurrence_end(&self, s: &[u8], min_end: usize) -> Option<usize> {
        if s.is_empty() {
            return Some(min_end);
        }
        let first_start = min_end.saturating_sub(s.len());
        let window = tm_bytes(first_start + self.window_len(s.len()));
        memchr::memmem::find(&window[first_start..], s).map(|i| first_start + i + s.len())
    }

    /// Whether `z` is a 𝒲-word. The identity is rejected.
    pub fn is_w_word(&self, z: &ReducedWord) -> Result<bool> {
        if z.is_empty() {
            return Err(Error::TrivialWWord);
        }
        Ok(self.is_w_slice(z.letters()))
    }

    /// Membership for a graphical subword of a reduced word; empty slices are not 𝒲-words.
    pub fn is_w_slice(&self, z: &[Letter]) -> bool {
        if z.is_empty() || same_sign(z).is_none() {
            return false;
        }
        if z.len() == 1 {
            return true;
        }
        let key: Vec<u8> = z.iter().map(|l| l.code()).collect();
        if let Some(hit) = self.cache.get(&key) {
            return *hit;
        }
        let result = self.decide(z).is_some();
        if self.cache.len() >= self.cache_capacity {
            self.cache.clear();
        }
        self.cache.insert(key, result);
        result
    }

    /// A witness `(n, m)` from the decision procedure, or `None` for non-members.
    pub fn witness(&self, z: &ReducedWord) -> Result<Option<Witness>> {
        if z.is_empty() {
            return Err(Error::TrivialWWord);
        }
        Ok(self.decide(z.letters()))
    }

    fn decide(&self, z: &[Letter]) -> Option<Witness> {
        let positive = same_sign(z)?;
        let letters: Vec<Letter> = if positive {
            z.to_vec()
        } else {
            z.iter().rev().map(|l| l.inverse()).collect()
        };
        let mut witness = self.decide_positive(&letters)?;
        if !positive {
            witness.m = -witness.m;
        }
        Some(witness)
    }

    fn decide_positive(&self, z: &[Letter]) -> Option<Witness> {
        let schedule = self.config.schedule;
        let l0 = schedule.base_length();
        let blocks: Vec<Vec<u8>> = z
            .split(|l| l.is_c())
            .map(|b| b.iter().map(|l| if *l == Letter::A { b'a' } else { b'b' }).collect())
            .collect();
        let k = blocks.len() - 1;
        let first = &blocks[0];
        let last = &blocks[k];
        let copies = |k: usize| (k + usize::from(!last.is_empty())).max(1) as i64;

        let len = match k {
            0 => {
                let end = self.tm_occurrence_end(first, 0)?;
                end.max(l0)
            }
            1 => {
                if !is_tm_prefix(last) {
                    return None;
                }
                self.tm_occurrence_end(first, l0.max(last.len()))?
            }
            _ => {
                let interior = &blocks[1];
                if blocks[1..k].iter().any(|b| b != interior) {
                    return None;
                }
                let len = interior.len();
                if len < l0 || !is_tm_prefix(interior) {
                    return None;
                }
                if first.len() > len || last.len() > len {
                    return None;
                }
                if !interior.ends_with(first) || !interior.starts_with(last) {
                    return None;
                }
                len
            }
        };
        let n = schedule.index_of_length(len)?;
        Some(Witness { n, m: copies(k) })
    }

    /// Largest `ℓ >= 1` with `w[from..from+ℓ)` a 𝒲-word.
    ///
    /// Relies on 𝒲-words being closed under taking subwords, which makes
    /// membership monotone in `ℓ`.
    pub fn longest_w_prefix(&self, w: &ReducedWord, from: usize) -> usize {
        self.longest_w_prefix_slice(w.letters(), from)
    }

    pub(crate) fn longest_w_prefix_slice(&self, w: &[Letter], from: usize) -> usize {
        assert!(from < w.len(), "from must be inside the word");
        let sign = w[from].is_positive();
        let run = w[from..].iter().take_while(|l| l.is_positive() == sign).count();
        // good is a known member length, bad a known non-member (or past the run)
        let mut good = 1;
        let mut probe = 2;
        let mut bad = loop {
            if probe > run {
                break run + 1;
            }
            if self.is_w_slice(&w[from..from + probe]) {
                good = probe;
                probe *= 2;
            } else {
                break probe;
            }
        };
        while bad - good > 1 {
            let mid = good + (bad - good) / 2;
            if self.is_w_slice(&w[from..from + mid]) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

/// `Some(true)` if all letters are positive, `Some(false)` if all negative.
fn same_sign(z: &[Letter]) -> Option<bool> {
    let first = z.first()?.is_positive();
    z.iter().all(|l| l.is_positive() == first).then_some(first)
}

fn is_tm_prefix(s: &[u8]) -> bool {
    *tm_bytes(s.len()) == *s
}

/// Bytes of a positive `{a,b}`-word, `None` if any other letter occurs.
pub(crate) fn ab_bytes(letters: &[Letter]) -> Option<Vec<u8>> {
    letters
        .iter()
        .map(|l| match *l {
            Letter::A => Some(b'a'),
            Letter::B => Some(b'b'),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::BruteMembership;
    use crate::words::parse;

    fn w(s: &str) -> ReducedWord {
        parse(s).unwrap()
    }

    #[test]
    fn tm_factor_examples() {
        let o = WOracle::default();
        assert!(o.is_tm_factor(b"abba"));
        assert!(!o.is_tm_factor(b"aaa"));
        assert!(!o.is_tm_factor(b"bbb"));
        assert!(!o.is_tm_factor(b"ababa"));
        assert!(o.is_tm_factor(b""));
        assert!(o.is_tm_factor_word(&w("baab")));
        assert!(!o.is_tm_factor_word(&w("bac")));
    }

    #[test]
    fn w_word_examples() {
        let o = WOracle::default();
        assert!(o.is_w_word(&w("c")).unwrap());
        assert!(o.is_w_word(&w("cac")).unwrap());
        assert!(!o.is_w_word(&w("acb")).unwrap());
        assert!(!o.is_w_word(&w("acc")).unwrap());
        assert!(!o.is_w_word(&w("aB")).unwrap());
        assert!(o.is_w_word(&w("CA")).unwrap());
        assert_eq!(o.is_w_word(&ReducedWord::identity()), Err(Error::TrivialWWord));
        for l in Letter::ALL {
            assert!(o.is_w_word(&ReducedWord::letter(l)).unwrap());
        }
    }

    #[test]
    fn witnesses_are_genuine() {
        for l0 in 1..=3 {
            let o = WOracle::with_base_length(l0).unwrap();
            for text in ["c", "cac", "a", "abba", "bcab", "abbcabbca", "CA", "baabcabbabaabbaab", "cabbac"] {
                let z = w(text);
                let Some(wit) = o.witness(&z).unwrap() else {
                    continue;
                };
                let power = o.schedule().w(wit.n).unwrap().power(wit.m);
                assert!(
                    power.to_text().contains(&z.to_text()),
                    "{text}: witness {wit:?} gives {power}"
                );
            }
        }
        let o = WOracle::default();
        assert_eq!(o.witness(&w("cac")).unwrap(), Some(Witness { n: 1, m: 2 }));
        assert_eq!(o.witness(&w("abba")).unwrap(), Some(Witness { n: 4, m: 1 }));
        assert_eq!(o.witness(&w("acb")).unwrap(), None);
    }

    #[test]
    fn longest_prefix_examples() {
        let o = WOracle::default();
        assert_eq!(o.longest_w_prefix(&w("acb"), 0), 2);
        let v5 = o.schedule().v(5).unwrap();
        assert_eq!(o.longest_w_prefix(&v5, 0), 5);
        assert_eq!(o.longest_w_prefix(&w("B"), 0), 1);
        assert_eq!(o.longest_w_prefix(&w("aaab"), 0), 2);
        assert_eq!(o.longest_w_prefix(&w("aaab"), 1), 3);
    }

    #[test]
    fn longest_prefix_matches_linear_scan() {
        let o = WOracle::default();
        let words = ["abbabaabbaababbacabbabaabbacab", "ACBBACBBA", "abcabcabcabcab", "aabbaabbaabb"];
        for text in words {
            let z = w(text);
            for from in 0..z.len() {
                let linear = (1..=z.len() - from)
                    .take_while(|&l| o.is_w_slice(&z.letters()[from..from + l]))
                    .last()
                    .unwrap();
                assert_eq!(o.longest_w_prefix(&z, from), linear, "{text} from {from}");
            }
        }
    }

    #[test]
    fn oracle_agrees_with_brute_force_up_to_length_8() {
        for l0 in 1..=3 {
            let o = WOracle::with_base_length(l0).unwrap();
            let brute = BruteMembership::new(l0, 64, 12, 8);
            let mut checked = 0;
            for len in 1..=8 {
                for z in crate::reference::all_positive_words(len) {
                    assert_eq!(o.is_w_word(&z).unwrap(), brute.contains(&z), "L0={l0} z={z}");
                    checked += 1;
                }
            }
            assert_eq!(checked, (1..=8).map(|k| 3usize.pow(k)).sum::<usize>());
        }
    }

    #[test]
    fn window_covers_all_short_factors() {
        let o = WOracle::default();
        let big = tm_bytes(1 << 16);
        for len in 1..=24 {
            let mut seen = std::collections::HashSet::new();
            for i in 0..=big.len() - len {
                if seen.insert(&big[i..i + len]) {
                    assert!(o.is_tm_factor(&big[i..i + len]));
                }
            }
        }
    }

    #[test]
    fn cache_does_not_change_answers() {
        let o = WOracle::default();
        let z = w("abbabaabc");
        let first = o.is_w_word(&z).unwrap();
        assert!(o.cache_len() > 0);
        assert_eq!(o.is_w_word(&z).unwrap(), first);
    }
}
