mod common;

use common::{c_free_word, nontrivial_word, word};
use conewords::{ReducedWord, YMetric};
use proptest::prelude::*;
use std::sync::OnceLock;

fn metric() -> &'static YMetric {
    static METRIC: OnceLock<YMetric> = OnceLock::new();
    METRIC.get_or_init(YMetric::default)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn greedy_equals_dp(w in word(200)) {
        let m = metric();
        let dp = m.factorize_dp(&w);
        let greedy = m.factorize_greedy(&w);
        prop_assert_eq!(dp.len(), greedy.len());
        prop_assert_eq!(dp.concatenation(), w.letters().to_vec());
        for f in dp.factors.iter().chain(&greedy.factors) {
            prop_assert!(m.oracle().is_w_word(f).unwrap());
        }
    }

    #[test]
    fn subadditive_powers(g in nontrivial_word(10), a in 1i64..=12, b in 1i64..=12) {
        let m = metric();
        prop_assert!(m.length(&g.power(a + b)) <= m.length(&g.power(a)) + m.length(&g.power(b)));
    }

    #[test]
    fn metric_axioms(x in word(60), y in word(60), z in word(60)) {
        let m = metric();
        prop_assert_eq!(m.dist(&x, &y), m.dist(&y, &x));
        prop_assert!(m.dist(&x, &z) <= m.dist(&x, &y) + m.dist(&y, &z));
        prop_assert_eq!(m.dist(&x, &y) == 0, x == y);
    }

    #[test]
    fn left_invariant(g in word(20), x in word(40), y in word(40)) {
        let m = metric();
        prop_assert_eq!(m.dist(&g.multiply(&x), &g.multiply(&y)), m.dist(&x, &y));
    }

    #[test]
    fn y_length_at_most_word_length(w in word(80)) {
        prop_assert!(metric().length(&w) <= w.len());
    }
}

#[test]
fn aperiodicity_bound_on_random_f_ab() {
    use conewords::sampling::{random_reduced_word, sample_rng, Alphabet};
    use rand::Rng;
    let m = metric();
    for i in 0..50 {
        let mut rng = sample_rng(21, i);
        let len = rng.gen_range(1..=8);
        let g = random_reduced_word(&mut rng, len, Alphabet::CFree);
        for n in 1..=49u64 {
            let y = m.length(&g.power(n as i64)) as u64;
            assert!(y >= n / 7, "g={g} n={n} |g^n|_Y={y}");
        }
    }
}

#[test]
fn orbit_map_is_not_proper() {
    let m = metric();
    let one = ReducedWord::identity();
    for l0 in 1..=3 {
        let m = YMetric::with_base_length(l0).unwrap();
        for n in [1, 10, 100, 1000] {
            let v = m.oracle().schedule().v(n).unwrap();
            assert_eq!(v.len(), l0 + n - 1);
            assert_eq!(m.dist(&one, &v), 1);
        }
    }
    assert_eq!(m.dist(&one, &m.oracle().schedule().w(500).unwrap()), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_ab_powers_respect_seventh(g in c_free_word(8).prop_filter("nontrivial", |g| !g.is_identity())) {
        let est = metric().power_lengths(&g, 28).unwrap();
        prop_assert!(est.power_bound_violations.is_empty());
        prop_assert!(est.upper >= est.lower.unwrap());
    }
}
