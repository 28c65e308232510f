mod common;

use common::{cyclic_word, nontrivial_word, word};
use conewords::words::common_root;
use proptest::prelude::*;

proptest! {
    #[test]
    fn inverse_cancels(x in word(40)) {
        prop_assert!(x.multiply(&x.inverse()).is_identity());
        prop_assert!(x.inverse().multiply(&x).is_identity());
    }

    #[test]
    fn product_length_bounded(x in word(40), y in word(40)) {
        prop_assert!(x.multiply(&y).len() <= x.len() + y.len());
    }

    #[test]
    fn associative(x in word(30), y in word(30), z in word(30)) {
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
    }

    #[test]
    fn power_matches_repeated_product(x in word(12), n in -6i64..=6) {
        let mut expected = conewords::ReducedWord::identity();
        let step = if n < 0 { x.inverse() } else { x.clone() };
        for _ in 0..n.unsigned_abs() {
            expected = expected.multiply(&step);
        }
        prop_assert_eq!(x.power(n), expected);
    }

    #[test]
    fn cyclic_reduce_round_trip(x in word(40)) {
        let c = x.cyclic_reduce();
        prop_assert!(c.core.is_cyclically_reduced());
        prop_assert_eq!(c.original(), x);
    }

    #[test]
    fn root_of_power(x in nontrivial_word(20), n in 1i64..=10) {
        let (r0, e0) = x.primitive_root().unwrap();
        let (r, e) = x.power(n).primitive_root().unwrap();
        prop_assert_eq!(&r, &r0);
        prop_assert_eq!(e, n as u64 * e0);
        prop_assert!(r.is_root_free());
        prop_assert_eq!(r.power(e as i64), x.power(n));
    }

    /// Common root exists iff the periodic words u1^∞ and u2^∞ agree on
    /// their first |u1| + |u2| letters.
    #[test]
    fn common_root_matches_overlap_test(
        base in cyclic_word(6),
        r in 1i64..=5,
        s in 1i64..=5,
        other in cyclic_word(40),
        related in any::<bool>(),
    ) {
        let u1 = base.power(r);
        let u2 = if related { base.power(s) } else { other };
        prop_assume!(u1.len() <= 40 && u2.len() <= 40);
        let need = u1.len() + u2.len();
        let periodic = |u: &conewords::ReducedWord| -> Vec<conewords::Letter> {
            u.letters().iter().copied().cycle().take(need).collect()
        };
        let overlap = periodic(&u1) == periodic(&u2);
        let found = common_root(&u1, &u2);
        prop_assert_eq!(found.is_some(), overlap);
        if let Some(c) = found {
            prop_assert_eq!(c.root.power(c.first_exponent as i64), u1);
            prop_assert_eq!(c.root.power(c.second_exponent as i64), u2);
            prop_assert!(c.root.is_root_free());
        }
    }
}
