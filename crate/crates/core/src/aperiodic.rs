//! The coning schedule `v_n`, built from prefixes of the Thue–Morse word.
//!
//! `v_n` is the Thue–Morse prefix of length `L0 + n - 1` over `{a, b}`, and
//! `w_n = v_n c`. Lengths are pairwise distinct, every length `>= L0` is hit,
//! and each `v_n` is a prefix of `v_{n+1}`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Letter, ReducedWord};

/// Length of the cached Thue–Morse prefix.
const CACHED_TM_LEN: usize = 1 << 20;

/// Thue–Morse letter `i`: `a` when `popcount(i)` is even.
#[inline]
pub fn tm_letter(i: usize) -> Letter {
    if i.count_ones() % 2 == 0 {
        Letter::A
    } else {
        Letter::B
    }
}

/// Thue–Morse prefix as bytes `b'a'`/`b'b'`, for substring search.
pub(crate) fn tm_bytes(len: usize) -> std::borrow::Cow<'static, [u8]> {
    static CACHE: OnceLock<Vec<u8>> = OnceLock::new();
    if len <= CACHED_TM_LEN {
        let cache = CACHE.get_or_init(|| (0..CACHED_TM_LEN).map(tm_byte).collect());
        std::borrow::Cow::Borrowed(&cache[..len])
    } else {
        std::borrow::Cow::Owned((0..len).map(tm_byte).collect())
    }
}

#[inline]
pub(crate) fn tm_byte(i: usize) -> u8 {
    if i.count_ones() % 2 == 0 {
        b'a'
    } else {
        b'b'
    }
}

/// The first `len` letters of the Thue–Morse word over `{a, b}`.
pub fn tm_prefix(len: usize) -> ReducedWord {
    ReducedWord::from_reduced_unchecked((0..len).map(tm_letter).collect())
}

/// True iff no nonempty `u` has `u^7` as a subword of `w`.
pub fn is_7_aperiodic(w: &ReducedWord) -> bool {
    longest_repetition_exponent_at_least(w.letters(), 7).is_none()
}

/// Finds `(start, period)` of some run `s[start..start+k*period)` that is a
/// `k`-th power, scanning periods in increasing order.
pub fn longest_repetition_exponent_at_least<T: PartialEq>(s: &[T], k: usize) -> Option<(usize, usize)> {
    let n = s.len();
    if k == 0 {
        return Some((0, 0));
    }
    for p in 1..=n / k {
        let need = (k - 1) * p;
        // run counts consecutive positions i with s[i] == s[i + p]
        let mut run = 0;
        for i in 0..n - p {
            if s[i] == s[i + p] {
                run += 1;
                if run >= need {
                    return Some((i + 1 - need, p));
                }
            } else {
                run = 0;
            }
        }
    }
    None
}

/// The word schedule `ℓ_n = L0 + n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordSchedule {
    base_length: usize,
}

impl Default for WordSchedule {
    fn default() -> Self {
        WordSchedule { base_length: 1 }
    }
}

impl WordSchedule {
    pub fn new(base_length: usize) -> Result<WordSchedule> {
        if base_length == 0 {
            return Err(Error::InvalidBaseLength);
        }
        Ok(WordSchedule { base_length })
    }

    pub fn base_length(&self) -> usize {
        self.base_length
    }

    /// `|v_n|`.
    pub fn length_of(&self, n: usize) -> Result<usize> {
        if n == 0 {
            return Err(Error::InvalidIndex);
        }
        Ok(self.base_length + n - 1)
    }

    /// The index `n` with `|v_n| = len`, if any.
    pub fn index_of_length(&self, len: usize) -> Option<usize> {
        (len >= self.base_length).then(|| len - self.base_length + 1)
    }

    pub fn v(&self, n: usize) -> Result<ReducedWord> {
        Ok(tm_prefix(self.length_of(n)?))
    }

    pub fn w(&self, n: usize) -> Result<ReducedWord> {
        let v = self.v(n)?;
        let mut letters = v.letters().to_vec();
        letters.push(Letter::C);
        Ok(ReducedWord::from_reduced_unchecked(letters))
    }

    /// `v_1, …, v_count`.
    pub fn words(&self, count: usize) -> Vec<ReducedWord> {
        (1..=count).map(|n| self.v(n).expect("n >= 1")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse;

    fn popcount_oracle(len: usize) -> String {
        (0..len)
            .map(|i: usize| if i.count_ones() % 2 == 0 { 'a' } else { 'b' })
            .collect()
    }

    #[test]
    fn tm_prefix_examples() {
        assert!(tm_prefix(0).is_empty());
        assert_eq!(popcount_oracle(4), "abba");
        assert_eq!(popcount_oracle(8), "abbabaab");
        assert_eq!(tm_prefix(4).to_text(), "abba");
        assert_eq!(tm_prefix(8).to_text(), "abbabaab");
        assert_eq!(std::str::from_utf8(&tm_bytes(8)).unwrap(), "abbabaab");
    }

    #[test]
    fn tm_prefix_matches_morphism() {
        // a -> ab, b -> ba applied to the prefix doubles it
        let p = tm_prefix(256).to_text();
        let doubled: String = p[..128]
            .chars()
            .map(|c| if c == 'a' { "ab" } else { "ba" })
            .collect();
        assert_eq!(doubled, p);
    }

    #[test]
    fn aperiodic_examples() {
        assert!(!is_7_aperiodic(&parse("aaaaaaa").unwrap()));
        assert!(is_7_aperiodic(&parse("aaaaaa").unwrap()));
        assert!(is_7_aperiodic(&parse("abbabaab").unwrap()));
        assert!(!is_7_aperiodic(&parse("ab").unwrap().power(7)));
        assert!(is_7_aperiodic(&parse("ab").unwrap().power(6)));
        assert!(!is_7_aperiodic(&parse("cababababababababc").unwrap()));
        assert!(is_7_aperiodic(&ReducedWord::identity()));
    }

    #[test]
    fn repetition_scan_matches_brute_force() {
        fn brute(s: &[u8], k: usize) -> bool {
            let n = s.len();
            (1..=n / k).any(|p| (0..=n - k * p).any(|st| (0..(k - 1) * p).all(|i| s[st + i] == s[st + i + p])))
        }
        let mut x: u64 = 0x9e37_79b9;
        for _ in 0..2000 {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            let len = (x % 40) as usize;
            let s: Vec<u8> = (0..len).map(|i| ((x >> (i % 60)) & 1) as u8).collect();
            for k in 2..5 {
                assert_eq!(longest_repetition_exponent_at_least(&s, k).is_some(), brute(&s, k), "{s:?} {k}");
            }
        }
    }

    #[test]
    fn schedule_v_and_w() {
        let s = WordSchedule::default();
        assert_eq!(s.v(1).unwrap().to_text(), "a");
        assert_eq!(s.w(1).unwrap().to_text(), "ac");
        assert_eq!(s.v(2).unwrap().to_text(), "ab");
        assert_eq!(s.w(2).unwrap().to_text(), "abc");
        assert_eq!(s.v(0), Err(Error::InvalidIndex));
        assert_eq!(WordSchedule::new(0), Err(Error::InvalidBaseLength));
        let s3 = WordSchedule::new(3).unwrap();
        assert_eq!(s3.v(1).unwrap().to_text(), "abb");
        assert_eq!(s3.index_of_length(2), None);
        assert_eq!(s3.index_of_length(5), Some(3));
    }

    #[test]
    fn schedule_invariants() {
        for l0 in 1..4 {
            let s = WordSchedule::new(l0).unwrap();
            for n in 1..=200 {
                let v = s.v(n).unwrap();
                let next = s.v(n + 1).unwrap();
                assert_eq!(v.len(), l0 + n - 1);
                assert!(v.is_positive() && v.is_c_free());
                assert_eq!(&next.letters()[..v.len()], v.letters());
                assert_eq!(s.w(n).unwrap().last(), Some(Letter::C));
            }
        }
    }

    #[test]
    fn schedule_is_7_aperiodic_up_to_512() {
        let s = WordSchedule::default();
        for n in 1..=512 {
            assert!(is_7_aperiodic(&s.v(n).unwrap()), "v({n})");
        }
        // Thue–Morse is overlap-free, in particular cube-free
        let p = tm_prefix(2048);
        assert!(longest_repetition_exponent_at_least(p.letters(), 3).is_none());
    }
}
