//! Seeded random words.
//!
//! Every sample index gets its own ChaCha stream, so results do not depend on
//! how samples are spread across worker threads.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::aperiodic::WordSchedule;
use crate::words::{Letter, ReducedWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Alphabet {
    /// `{a, b, c}^{±1}`
    Full,
    /// `{a, b}^{±1}`, i.e. elements of `F(a,b)`
    CFree,
}

impl Alphabet {
    fn letters(self) -> &'static [Letter] {
        match self {
            Alphabet::Full => &Letter::ALL,
            Alphabet::CFree => &[Letter::A, Letter::B, Letter::A_INV, Letter::B_INV],
        }
    }
}

/// Independent generator for sample `index` under `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform random freely reduced word of exactly `len` letters.
pub fn random_reduced_word<R: Rng + ?Sized>(rng: &mut R, len: usize, alphabet: Alphabet) -> ReducedWord {
    let pool = alphabet.letters();
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = *pool.choose(rng).expect("nonempty alphabet");
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    ReducedWord::from_letters(letters)
}

/// Random nontrivial reduced word of length in `1..=max_len`.
pub fn random_nontrivial_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize, alphabet: Alphabet) -> ReducedWord {
    let len = rng.gen_range(1..=max_len.max(1));
    random_reduced_word(rng, len, alphabet)
}

/// Random reduced word of length in `1..=max_len` assembled from subwords of
/// powers `w_n^{±m}`, so that long 𝒲-factors actually occur.
pub fn random_structured_word<R: Rng + ?Sized>(
    rng: &mut R,
    schedule: &WordSchedule,
    max_len: usize,
) -> ReducedWord {
    let target = rng.gen_range(1..=max_len.max(1));
    random_structured_word_of_len(rng, schedule, target)
}

/// As [`random_structured_word`], aiming for exactly `target` letters.
///
/// Free cancellation can occasionally leave the word shorter; it is then
/// padded with uniform letters.
pub fn random_structured_word_of_len<R: Rng + ?Sized>(
    rng: &mut R,
    schedule: &WordSchedule,
    target: usize,
) -> ReducedWord {
    let mut word = ReducedWord::identity();
    let mut guard = 0;
    while word.len() < target && guard < 4 * target + 8 {
        guard += 1;
        let piece = if rng.gen_bool(0.25) {
            let l = *Letter::ALL.choose(rng).expect("nonempty");
            ReducedWord::letter(l)
        } else {
            let n = rng.gen_range(1..=24);
            let m = rng.gen_range(1..=4);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let power = schedule.w(n).expect("n >= 1").power(sign * m);
            let start = rng.gen_range(0..power.len());
            let end = rng.gen_range(start + 1..=power.len());
            power.subword(start, end)
        };
        word = word.multiply(&piece);
    }
    if word.len() > target {
        word = word.prefix(target);
    }
    if word.len() < target {
        let pad = random_reduced_word(rng, target - word.len() + 1, Alphabet::Full);
        word = word.multiply(&pad);
        while word.len() < target {
            let l = *Letter::ALL.choose(rng).expect("nonempty");
            if word.last() != Some(l.inverse()) {
                word = word.multiply(&ReducedWord::letter(l));
            }
        }
        word = word.prefix(target);
    }
    word
}
