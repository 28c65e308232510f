mod common;

use common::{nontrivial_word, positive_word};
use conewords::reference::{brute_witness, BruteMembership};
use conewords::woracle::WOracle;
use conewords::ReducedWord;
use proptest::prelude::*;
use std::sync::OnceLock;

fn brute(l0: usize) -> &'static BruteMembership {
    static CELLS: [OnceLock<BruteMembership>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CELLS[l0 - 1].get_or_init(|| BruteMembership::new(l0, 64, 12, 12))
}

/// Random 𝒲-word: a subword of some w_n^{±m}.
fn w_word() -> impl Strategy<Value = (usize, ReducedWord)> {
    (1usize..=3, 1usize..=40, 1i64..=4, any::<bool>(), any::<u64>(), any::<u64>()).prop_map(
        |(l0, n, m, neg, a, b)| {
            let oracle = WOracle::with_base_length(l0).unwrap();
            let p = oracle.schedule().w(n).unwrap().power(if neg { -m } else { m });
            let start = (a % p.len() as u64) as usize;
            let end = start + 1 + (b % (p.len() - start) as u64) as usize;
            (l0, p.subword(start, end))
        },
    )
}

proptest! {
    #[test]
    fn oracle_matches_brute_on_signed_words(l0 in 1usize..=3, z in nontrivial_word(12)) {
        let oracle = WOracle::with_base_length(l0).unwrap();
        prop_assert_eq!(oracle.is_w_word(&z).unwrap(), brute(l0).contains(&z));
    }

    #[test]
    fn factor_closed((l0, z) in w_word()) {
        let oracle = WOracle::with_base_length(l0).unwrap();
        prop_assert!(oracle.is_w_word(&z).unwrap());
        for i in 0..z.len() {
            for j in i + 1..=z.len().min(i + 30) {
                prop_assert!(oracle.is_w_word(&z.subword(i, j)).unwrap(), "{} [{}..{})", z, i, j);
            }
        }
    }

    #[test]
    fn sign_rule(l0 in 1usize..=3, z in nontrivial_word(30)) {
        let oracle = WOracle::with_base_length(l0).unwrap();
        prop_assert_eq!(oracle.is_w_word(&z).unwrap(), oracle.is_w_word(&z.inverse()).unwrap());
    }

    #[test]
    fn witness_agrees_with_brute_search(l0 in 1usize..=3, z in positive_word(10)) {
        let oracle = WOracle::with_base_length(l0).unwrap();
        let witness = oracle.witness(&z).unwrap();
        let found = brute_witness(oracle.schedule(), &z, 64, 12);
        prop_assert_eq!(witness.is_some(), found.is_some());
        if let Some(w) = witness {
            let power = oracle.schedule().w(w.n).unwrap().power(w.m);
            prop_assert!(power.to_text().contains(&z.to_text()));
        }
    }

    #[test]
    fn longest_prefix_is_maximal((l0, z) in w_word(), extra in nontrivial_word(8)) {
        let oracle = WOracle::with_base_length(l0).unwrap();
        let w = z.multiply(&extra);
        let best = oracle.longest_w_prefix(&w, 0);
        prop_assert!(oracle.is_w_word(&w.prefix(best)).unwrap());
        if best < w.len() {
            prop_assert!(!oracle.is_w_word(&w.prefix(best + 1)).unwrap());
        }
    }
}

#[test]
fn random_non_factors_rejected() {
    use rand::{Rng, SeedableRng};
    let oracle = WOracle::default();
    let tm: String = conewords::aperiodic::tm_prefix(1 << 16).to_text();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let mut rejected = 0;
    while rejected < 1000 {
        let len = rng.gen_range(3..=24);
        let s: String = (0..len).map(|_| if rng.gen_bool(0.5) { 'a' } else { 'b' }).collect();
        if !tm.contains(&s) {
            assert!(!oracle.is_tm_factor(s.as_bytes()), "{s}");
            rejected += 1;
        }
    }
}
