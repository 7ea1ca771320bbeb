mod common;

use common::*;
use edge_detect::*;
use proptest::prelude::*;

fn step_field(a: f64, b: f64, h: f64, tilt: f64) -> impl Fn(f64) -> f64 {
    move |x| tilt * x + if x > a && x < b { h } else { 0.0 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minmod_sign_consistency(rows in prop::collection::vec(prop::collection::vec(-3.0f64..3.0, 24), 1..6)) {
        let m = minmod_combine(&rows).unwrap();
        for (i, &v) in m.iter().enumerate() {
            let all_pos = rows.iter().all(|r| r[i] > 0.0);
            let all_neg = rows.iter().all(|r| r[i] < 0.0);
            if !all_pos && !all_neg {
                prop_assert_eq!(v, 0.0);
            } else {
                for r in &rows {
                    prop_assert!(v.abs() <= r[i].abs());
                    prop_assert!(v * r[i] > 0.0);
                }
                prop_assert!(rows.iter().any(|r| r[i] == v));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn negation_equivariance(a in -0.8f64..-0.1, w in 0.3f64..0.7, h in 0.5f64..2.0, tilt in -0.3f64..0.3) {
        let b = (a + w).min(0.85);
        let f = step_field(a, b, h, tilt);
        let pos = detect_fn(60, &f);
        let neg = detect_fn(60, |x| -f(x));
        for (p, n) in pos.profile.minmod.iter().zip(&neg.profile.minmod) {
            prop_assert!((p + n).abs() < 1e-12);
        }
        prop_assert_eq!(pos.report.label, neg.report.label);
        prop_assert_eq!(pos.report.edges.len(), neg.report.edges.len());
        for (p, n) in pos.report.edges.iter().zip(&neg.report.edges) {
            prop_assert_eq!(p.location, n.location);
            prop_assert_eq!(p.sign, -n.sign);
        }
    }

    #[test]
    fn edges_invariant_under_positive_scaling(a in -0.8f64..-0.1, w in 0.3f64..0.7, scale in 0.05f64..20.0) {
        let b = (a + w).min(0.85);
        let f = step_field(a, b, 1.0, 0.0);
        let base = detect_fn(60, &f);
        let scaled = detect_fn(60, |x| scale * f(x));
        let grid = spectral_core::build_grid(60).unwrap();
        prop_assert_eq!(base.report.edges.len(), scaled.report.edges.len());
        for (p, q) in base.report.edges.iter().zip(&scaled.report.edges) {
            prop_assert!((p.location - q.location).abs() <= grid.local_spacing(p.location));
            prop_assert_eq!(p.sign, q.sign);
        }
    }
}

#[test]
fn smooth_label_never_carries_edges() {
    for f in [gaussian(0.0, 0.15), gaussian(0.3, 0.3)] {
        let d = detect_fn(60, f);
        if d.report.label == Label::Smooth {
            assert!(d.report.edges.is_empty());
        }
    }
}
