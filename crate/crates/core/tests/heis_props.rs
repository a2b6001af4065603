use beurling::heis::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn real_point() -> impl Strategy<Value = HeisPoint> {
    (-5.0f64..5.0, -5.0f64..5.0, -5.0f64..5.0).prop_map(|(y, z, x)| HeisPoint::real(y, z, x))
}

fn complex_point() -> impl Strategy<Value = HeisPoint> {
    let c = || (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(a, b)| Complex64::new(a, b));
    (c(), c(), c()).prop_map(|(y, z, x)| HeisPoint::new(y, z, x))
}

fn label() -> impl Strategy<Value = RHeisLabel> {
    prop_oneof![
        (1i64..20, any::<bool>()).prop_map(|(n, neg)| RHeisLabel::Discrete(if neg { -n } else { n })),
        (-8i32..8, -8i32..8).prop_map(|(r, s)| RHeisLabel::Character { r: r as f64 / 4.0, s: s as f64 / 4.0 }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn group_axioms(g in prop_oneof![real_point(), complex_point()],
                    h in prop_oneof![real_point(), complex_point()],
                    k in prop_oneof![real_point(), complex_point()]) {
        let left = heis_mul(&heis_mul(&g, &h), &k);
        let right = heis_mul(&g, &heis_mul(&h, &k));
        prop_assert!(left.max_abs_diff(&right) < 1e-12);
        prop_assert!(heis_mul(&g, &HeisPoint::identity()).max_abs_diff(&g) == 0.0);
        prop_assert!(heis_mul(&HeisPoint::identity(), &g).max_abs_diff(&g) == 0.0);
        prop_assert!(heis_mul(&g, &g.inverse()).max_abs_diff(&HeisPoint::identity()) < 1e-12);
        prop_assert!(heis_mul(&g.inverse(), &g).max_abs_diff(&HeisPoint::identity()) < 1e-12);
    }

    #[test]
    fn bch_correction_is_central(x in -5.0f64..5.0, y in -5.0f64..5.0) {
        let p = heis_mul(&heis_exp(x, y, 0.0), &heis_exp(-x, -y, 0.0));
        prop_assert!(p.y.norm() < 1e-12 && p.x.norm() < 1e-12);
        if x * y == 0.0 {
            prop_assert!(p.max_abs_diff(&HeisPoint::identity()) < 1e-12);
        }
    }

    #[test]
    fn fusion_is_commutative_and_additive(a in label(), b in label()) {
        let ab = rheis_tensor(&a, &b).unwrap();
        prop_assert_eq!(ab, rheis_tensor(&b, &a).unwrap());
        match (a, b) {
            (RHeisLabel::Discrete(n), RHeisLabel::Discrete(m)) if n + m != 0 => {
                prop_assert_eq!(ab, RHeisLabel::Discrete(n + m))
            }
            (RHeisLabel::Discrete(n), RHeisLabel::Character { .. }) => prop_assert_eq!(ab, RHeisLabel::Discrete(n)),
            _ => {}
        }
    }
}

#[test]
fn dilation_preserves_l2_norm() {
    let g = GaussianFactor::gaussian(1.3);
    for n in [1.0, 2.0, 4.0, 8.0, 16.0] {
        let d = g.dilate(n);
        let h = 1e-3 / n;
        let s: f64 = (-20_000..=20_000).map(|k| d.eval(k as f64 * h).norm_sqr()).sum();
        let numeric = (s * h).sqrt();
        assert!((numeric / g.l2_norm() - 1.0).abs() < 1e-6, "N = {n}");
    }
}

#[test]
fn kernel_matches_direct_on_gaussian_family() {
    let spec = beurling::quadrature::QuadratureSpec { basis: 6, ..Default::default() };
    for alphas in [[1.0, 1.0, 1.0], [0.5, 2.0, 1.5]] {
        let f = TestFunction::gaussian(alphas);
        for a in [-1.0, -0.5, 0.5, 1.0, 2.0] {
            let k = heis_fourier(&f, a, &spec, FourierMethod::Kernel).unwrap().matrix;
            let d = heis_fourier(&f, a, &spec, FourierMethod::Direct).unwrap().matrix;
            assert!((&k - &d).norm() <= 1e-4 * k.norm(), "a = {a}");
        }
    }
}
