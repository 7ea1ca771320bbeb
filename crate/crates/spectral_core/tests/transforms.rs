use proptest::prelude::*;
use spectral_core::*;

fn t_oracle(n: usize, x: f64) -> f64 {
    (n as f64 * x.clamp(-1.0, 1.0).acos()).cos()
}

fn ops(order: usize) -> SpectralOperators {
    build_operators(&build_grid(order).unwrap())
}

fn tophat(x: f64) -> f64 {
    if x > -0.7 && x < -0.2 {
        1.0
    } else {
        0.0
    }
}

fn uniform(n: usize) -> Vec<f64> {
    (0..n).map(|i| -1.0 + 2.0 * i as f64 / (n - 1) as f64).collect()
}

/// (2m-1)!! / (2m)!! * pi, the Chebyshev-weighted integral of x^(2m).
fn weighted_even_moment(m: u32) -> f64 {
    (1..=m).fold(std::f64::consts::PI, |acc, k| acc * (2 * k - 1) as f64 / (2 * k) as f64)
}

#[test]
fn small_grids() {
    let g = build_grid(2).unwrap();
    assert_eq!(g.nodes(), &[-1.0, 0.0, 1.0]);
    let g = build_grid(1).unwrap();
    assert_eq!(g.nodes(), &[-1.0, 1.0]);
}

#[test]
fn nodes_match_cosine_formula() {
    for n in [3, 8, 17, 60] {
        let g = build_grid(n).unwrap();
        for (i, &x) in g.nodes().iter().enumerate() {
            let expect = -(std::f64::consts::PI * i as f64 / n as f64).cos();
            assert!((x - expect).abs() < 1e-15);
        }
    }
}

#[test]
fn weighted_moments_at_order_eight() {
    let g = build_grid(8).unwrap();
    let pi = std::f64::consts::PI;
    assert!((g.weights().iter().sum::<f64>() - pi).abs() < 1e-13);
    assert!((g.integrate(|x| x * x) - pi / 2.0).abs() < 1e-13);
}

#[test]
fn quadrature_exact_to_degree_2n_minus_1() {
    for n in [4usize, 8, 16] {
        let g = build_grid(n).unwrap();
        for deg in 0..=(2 * n - 1) as u32 {
            let got = g.integrate(|x| x.powi(deg as i32));
            let want = if deg % 2 == 1 { 0.0 } else { weighted_even_moment(deg / 2) };
            let err = (got - want).abs() / want.abs().max(1.0);
            assert!(err < 1e-12, "N={n} degree {deg}: {got} vs {want}");
        }
    }
}

#[test]
fn constant_and_linear_analyse_to_unit_vectors() {
    let o = ops(8);
    let ones = vec![1.0; 9];
    let a = analyze(&ones, &o).unwrap();
    assert!((a[0] - 1.0).abs() < 1e-14 && a[1..].iter().all(|v| v.abs() < 1e-14));
    let lin = analyze(o.grid().nodes(), &o).unwrap();
    for (k, v) in lin.iter().enumerate() {
        assert!((v - if k == 1 { 1.0 } else { 0.0 }).abs() < 1e-14);
    }
    assert!(analyze(&[0.0; 9], &o).unwrap().iter().all(|v| *v == 0.0));
}

#[test]
fn t3_is_recovered() {
    let o = ops(8);
    let nodal: Vec<f64> = o.grid().nodes().iter().map(|&x| t_oracle(3, x)).collect();
    let a = analyze(&nodal, &o).unwrap();
    for (k, v) in a.iter().enumerate() {
        assert!((v - if k == 3 { 1.0 } else { 0.0 }).abs() < 1e-12, "slot {k}: {v}");
    }
}

#[test]
fn analyze_rejects_wrong_length() {
    assert!(analyze(&[1.0, 2.0], &ops(4)).is_err());
}

#[test]
fn gaussian_round_trip_at_sixty() {
    let o = ops(60);
    let nodal: Vec<f64> = o.grid().nodes().iter().map(|x| (-x * x / (2.0 * 0.0225)).exp()).collect();
    let modal = analyze(&nodal, &o).unwrap();
    let back = synthesize(&modal, o.grid().nodes()).unwrap();
    for (a, b) in nodal.iter().zip(&back) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn diff_nodal_exact_below_order() {
    let o = ops(12);
    // p(x) = sum_k c_k T_k with degree 11 = N - 1
    let c: Vec<f64> = (0..12).map(|k| ((k * 7 % 5) as f64 - 2.0) / (k + 1) as f64).collect();
    let x = o.grid().nodes();
    let p: Vec<f64> = x.iter().map(|&xi| c.iter().enumerate().map(|(k, ck)| ck * t_oracle(k, xi)).sum()).collect();
    // derivative oracle via central differences of the closed form would be noisy; use T_k' = k U_{k-1}
    let u = |k: usize, xi: f64| -> f64 {
        if k == 0 {
            return 0.0;
        }
        if xi.abs() == 1.0 {
            return (k * k) as f64 * xi.signum().powi(k as i32 + 1);
        }
        let th = xi.acos();
        k as f64 * (k as f64 * th).sin() / th.sin()
    };
    let dp_exact: Vec<f64> = x.iter().map(|&xi| c.iter().enumerate().map(|(k, ck)| ck * u(k, xi)).sum()).collect();
    for (a, b) in o.differentiate(&p).iter().zip(&dp_exact) {
        assert!((a - b).abs() < 1e-8, "{a} vs {b}");
    }
}

#[test]
fn diff_nodal_is_composed_product() {
    let o = ops(20);
    let prod = &o.synthesis * &o.diff_modal * &o.analysis;
    assert!((prod - &o.diff_nodal).amax() < 1e-10);
}

#[test]
fn synthesize_examples() {
    assert!((synthesize(&[0.0, 1.0], &[0.5]).unwrap()[0] - 0.5).abs() < 1e-15);
    assert!((synthesize(&[0.0, 0.0, 1.0], &[0.0]).unwrap()[0] + 1.0).abs() < 1e-15);
    assert!(synthesize(&[1.0, 1.0], &[-1.0000001]).is_err());
}

fn overshoot_near(modal: &[f64], edge: f64) -> f64 {
    let xs: Vec<f64> = uniform(1000).into_iter().filter(|x| (x - edge).abs() < 0.15).collect();
    let vals = synthesize(modal, &xs).unwrap();
    vals.iter().cloned().fold(f64::MIN, f64::max) - 1.0
}

#[test]
fn tophat_projection_shows_classical_gibbs_overshoot() {
    // exact Chebyshev projection coefficients of the tophat (closed form in theta)
    let (t1, t2) = ((-0.2f64).acos(), (-0.7f64).acos());
    let pi = std::f64::consts::PI;
    let modal: Vec<f64> = (0..=60)
        .map(|n| {
            if n == 0 {
                (t2 - t1) / pi
            } else {
                let nf = n as f64;
                2.0 / (pi * nf) * ((nf * t2).sin() - (nf * t1).sin())
            }
        })
        .collect();
    let os = overshoot_near(&modal, -0.7);
    assert!((os - 0.0895).abs() < 0.02, "overshoot {os}");
}

#[test]
fn tophat_interpolant_overshoot() {
    // the collocation (interpolating) partial sum overshoots more than the
    // projection; the amount depends on where the jump falls between nodes
    let o = ops(60);
    let nodal: Vec<f64> = o.grid().nodes().iter().map(|&x| tophat(x)).collect();
    let modal = analyze(&nodal, &o).unwrap();
    let os = overshoot_near(&modal, -0.7);
    assert!(os > 0.0895 && os < 0.15, "overshoot {os}");
}

#[test]
fn downsample_examples() {
    let mut t2 = vec![0.0; 61];
    t2[2] = 1.0;
    let d = downsample(&t2, 10).unwrap();
    for (k, v) in d.iter().enumerate() {
        assert!((v - if k == 2 { 1.0 } else { 0.0 }).abs() < 1e-12);
    }
    assert_eq!(downsample(&t2, 60).unwrap(), t2);
    assert!(downsample(&t2, 61).is_err());
    assert!(downsample(&t2, 0).is_err());
}

#[test]
fn downsample_matches_recollocation_oracle() {
    let o60 = ops(60);
    let nodal: Vec<f64> = o60.grid().nodes().iter().map(|&x| tophat(x)).collect();
    let modal = analyze(&nodal, &o60).unwrap();
    let g30 = build_grid(30).unwrap();
    // oracle: naive trig evaluation of S_60 at the 31 nodes, then discrete projection
    let samples: Vec<f64> =
        g30.nodes().iter().map(|&x| modal.iter().enumerate().map(|(n, a)| a * t_oracle(n, x)).sum()).collect();
    let oracle: Vec<f64> = (0..=30)
        .map(|k| {
            g30.nodes()
                .iter()
                .zip(g30.weights())
                .zip(&samples)
                .map(|((&x, &w), &s)| s * t_oracle(k, x) * w)
                .sum::<f64>()
                / g30.norms()[k]
        })
        .collect();
    let got = downsample(&modal, 30).unwrap();
    for (a, b) in got.iter().zip(&oracle) {
        assert!((a - b).abs() < 1e-10);
    }
}

fn sup_error(f: fn(f64) -> f64, n: usize, xs: &[f64]) -> f64 {
    let o = ops(n);
    let nodal: Vec<f64> = o.grid().nodes().iter().map(|&x| f(x)).collect();
    let modal = analyze(&nodal, &o).unwrap();
    let vals = synthesize(&modal, xs).unwrap();
    xs.iter().zip(&vals).map(|(&x, v)| (f(x) - v).abs()).fold(0.0, f64::max)
}

#[test]
fn spectral_convergence_for_analytic_functions() {
    let xs = uniform(1000);
    let fs: [fn(f64) -> f64; 2] = [f64::exp, |x| (6.0 * x).sin()];
    for f in fs {
        let errs: Vec<f64> = (4..=40).step_by(2).map(|n| sup_error(f, n, &xs)).collect();
        for w in errs.windows(2) {
            // monotone until the rounding floor
            assert!(w[1] <= w[0] || w[0] < 1e-13, "{errs:?}");
        }
        assert!(*errs.last().unwrap() < 1e-10);
    }
}

#[test]
fn tophat_converges_no_faster_than_first_order() {
    let l2 = |n: usize| -> f64 {
        let o = ops(n);
        let nodal: Vec<f64> = o.grid().nodes().iter().map(|&x| tophat(x)).collect();
        let modal = analyze(&nodal, &o).unwrap();
        // error measured on a fine independent grid
        let fine = build_grid(2000).unwrap();
        let vals = synthesize(&modal, fine.nodes()).unwrap();
        fine.nodes()
            .iter()
            .zip(fine.weights())
            .zip(&vals)
            .map(|((&x, &w), v)| (v - tophat(x)).powi(2) * w)
            .sum::<f64>()
            .sqrt()
    };
    let (e20, e40, e80) = (l2(20), l2(40), l2(80));
    assert!(e40 > e20 / 2.0 * 0.999 || e80 > e40 / 2.0 * 0.999, "{e20} {e40} {e80}");
    assert!(e80 > e20 / 4.0);
}

proptest! {
    #[test]
    fn parseval_identity(vals in prop::collection::vec(-5.0f64..5.0, 17)) {
        let o = ops(16);
        let modal = analyze(&vals, &o).unwrap();
        let lhs: f64 = vals.iter().zip(o.grid().weights()).map(|(u, w)| u * u * w).sum();
        let rhs: f64 = modal.iter().zip(o.grid().norms()).map(|(a, g)| a * a * g).sum();
        prop_assert!((lhs - rhs).abs() < 1e-10 * lhs.max(1.0));
    }

    #[test]
    fn nodal_round_trip(vals in prop::collection::vec(-5.0f64..5.0, 25)) {
        let o = ops(24);
        let f = SpectralField::from_nodal(&o, vals.clone()).unwrap();
        let back = synthesize(f.modal(), o.grid().nodes()).unwrap();
        for (a, b) in vals.iter().zip(&back) {
            prop_assert!((a - b).abs() < 1e-10 * f.max_abs().max(1.0));
        }
    }

    #[test]
    fn downsample_preserves_low_degree(coefs in prop::collection::vec(-2.0f64..2.0, 9), m in 12usize..40) {
        let mut modal = vec![0.0; m + 1];
        modal[..9].copy_from_slice(&coefs);
        let d = downsample(&modal, 8).unwrap();
        for (a, b) in d.iter().zip(&coefs) {
            prop_assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn clenshaw_matches_trig_oracle(coefs in prop::collection::vec(-1.0f64..1.0, 1..40), x in -1.0f64..1.0) {
        let got = synthesize(&coefs, &[x]).unwrap()[0];
        let want: f64 = coefs.iter().enumerate().map(|(n, c)| c * t_oracle(n, x)).sum();
        prop_assert!((got - want).abs() < 1e-12);
    }
}
