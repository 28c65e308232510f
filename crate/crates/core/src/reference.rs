//! Brute-force reference computations.
//!
//! These enumerate powers `w_n^m` literally and never touch the block
//! analysis in [`crate::woracle`] or the factorization code in
//! [`crate::ydist`], so they serve as independent oracles for both.

use std::collections::HashSet;

use crate::aperiodic::WordSchedule;
use crate::words::{Letter, ReducedWord};

/// Every positive subword of length `<= max_len` of `w_n^m`, for
/// `1 <= n <= max_n` and `1 <= m <= max_m`.
pub struct BruteMembership {
    positive: HashSet<Vec<Letter>>,
    max_len: usize,
}

impl BruteMembership {
    pub fn new(base_length: usize, max_n: usize, max_m: usize, max_len: usize) -> BruteMembership {
        let schedule = WordSchedule::new(base_length).expect("base length >= 1");
        let mut positive = HashSet::new();
        for n in 1..=max_n {
            let wn = schedule.w(n).expect("n >= 1");
            for m in 1..=max_m {
                let power = wn.power(m as i64);
                let letters = power.letters();
                for start in 0..letters.len() {
                    for end in start + 1..=letters.len().min(start + max_len) {
                        positive.insert(letters[start..end].to_vec());
                    }
                }
            }
        }
        BruteMembership { positive, max_len }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Whether `z` or `z⁻¹` is a positive enumerated subword.
    pub fn contains(&self, z: &ReducedWord) -> bool {
        self.contains_slice(z.letters())
    }

    pub fn contains_slice(&self, z: &[Letter]) -> bool {
        assert!(z.len() <= self.max_len, "word longer than the enumerated range");
        if z.is_empty() {
            return false;
        }
        if z.iter().all(|l| l.is_positive()) {
            self.positive.contains(z)
        } else if z.iter().all(|l| !l.is_positive()) {
            let inv: Vec<Letter> = z.iter().rev().map(|l| l.inverse()).collect();
            self.positive.contains(&inv)
        } else {
            false
        }
    }

    /// Minimal number of enumerated 𝒲-words whose graphical concatenation is `w`,
    /// by exhaustive dynamic programming over every cut.
    pub fn min_factor_count(&self, w: &ReducedWord) -> usize {
        let n = w.len();
        let mut best = vec![usize::MAX; n + 1];
        best[0] = 0;
        for end in 1..=n {
            for start in end.saturating_sub(self.max_len)..end {
                if best[start] != usize::MAX && self.contains_slice(&w.letters()[start..end]) {
                    best[end] = best[end].min(best[start] + 1);
                }
            }
        }
        best[n]
    }
}

/// All `3^len` positive words of length `len` over `{a, b, c}`.
pub fn all_positive_words(len: usize) -> impl Iterator<Item = ReducedWord> {
    let total = 3usize.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            letters.push([Letter::A, Letter::B, Letter::C][code % 3]);
            code /= 3;
        }
        ReducedWord::from_letters(letters)
    })
}

/// Searches `n <= max_n`, `1 <= |m| <= max_m` for a power `w_n^m` containing `z`.
pub fn brute_witness(schedule: &WordSchedule, z: &ReducedWord, max_n: usize, max_m: i64) -> Option<(usize, i64)> {
    let needle = z.to_text();
    for n in 1..=max_n {
        let wn = schedule.w(n).ok()?;
        for m in (1..=max_m).flat_map(|m| [m, -m]) {
            if wn.power(m).to_text().contains(&needle) {
                return Some((n, m));
            }
        }
    }
    None
}
