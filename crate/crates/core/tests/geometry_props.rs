mod common;

use common::{c_free_word, word};
use conewords::geometry::{
    four_point_defect, gluing_defect, hausdorff_y, quasiconvexity_probe, x_geodesic, y_geodesic,
};
use conewords::YMetric;
use proptest::prelude::*;
use std::sync::OnceLock;

fn metric() -> &'static YMetric {
    static METRIC: OnceLock<YMetric> = OnceLock::new();
    METRIC.get_or_init(YMetric::default)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hausdorff_symmetric_and_small(x in word(10), u in word(80)) {
        let m = metric();
        let y = x.multiply(&u);
        let p = x_geodesic(&x, &y);
        let q = y_geodesic(m, &x, &y);
        let h = hausdorff_y(m, &p, &q).unwrap();
        prop_assert_eq!(h, hausdorff_y(m, &q, &p).unwrap());
        prop_assert_eq!(h == 0, p.vertices == q.vertices);
        prop_assert_eq!(q.len(), m.dist(&x, &y));
        prop_assert!(h <= 1);
    }

    #[test]
    fn four_point_invariances(
        a in word(30), b in word(30), c in word(30), d in word(30), h in word(15),
    ) {
        let m = metric();
        let quad = [a, b, c, d];
        let base = four_point_defect(m, &quad);
        let perms = [[1, 0, 2, 3], [2, 3, 0, 1], [3, 1, 2, 0], [0, 2, 3, 1]];
        for p in perms {
            let q = p.map(|i| quad[i].clone());
            prop_assert_eq!(four_point_defect(m, &q), base);
        }
        let shifted = quad.clone().map(|q| h.multiply(&q));
        prop_assert_eq!(four_point_defect(m, &shifted), base);
    }

    #[test]
    fn gluing_within_twice_c_plus_one(x in word(10), u in word(120), cut in any::<prop::sample::Index>()) {
        let m = metric();
        let y = x.multiply(&u);
        let mid = x.multiply(&u.prefix(cut.index(u.len() + 1)));
        prop_assert!(gluing_defect(m, &x, &mid, &y).unwrap() <= 2 * (1 + 1));
    }

    #[test]
    fn quasiconvex_orbit(g in c_free_word(120)) {
        prop_assert!(quasiconvexity_probe(metric(), &g).unwrap() <= 2);
    }
}

#[test]
fn running_c_hat_is_flat_across_lengths() {
    use conewords::geometry::hausdorff_experiment;
    let m = metric();
    let short = hausdorff_experiment(m, 60, 50, 100, 4).c_estimate.unwrap();
    let long = hausdorff_experiment(m, 60, 200, 400, 4).c_estimate.unwrap();
    assert!(long <= short + 1, "short {short} long {long}");
}
