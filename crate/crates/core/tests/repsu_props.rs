use beurling::repsu::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn weights(n: usize, max_lambda1: u32) -> Vec<HighestWeight> {
    beurling::weights::weights_up_to(n, max_lambda1)
}

fn random_sl(n: usize, r: &mut ChaCha8Rng) -> ComplexDiagonal {
    let mut e: Vec<Complex64> = (0..n - 1)
        .map(|_| Complex64::from_polar(r.gen_range(-0.7f64..0.7).exp(), r.gen_range(-PI..PI)))
        .collect();
    let p: Complex64 = e.iter().product();
    e.push(p.inv());
    ComplexDiagonal::sl(e, 1e-12).unwrap()
}

#[test]
fn su2_dimension_law() {
    for a in 0..=50u32 {
        let w = HighestWeight::new(2, vec![a]).unwrap();
        assert_eq!(enumerate_tableaux(&w).unwrap().len(), a as usize + 1);
    }
}

#[test]
fn brute_and_closed_norms_agree() {
    let mut r = ChaCha8Rng::seed_from_u64(17);
    for n in 2..=4 {
        let ds: Vec<_> = (0..20).map(|_| random_sl(n, &mut r)).collect();
        for w in weights(n, 6) {
            for d in &ds {
                let b = complexified_norm(&w, d, NormMethod::Brute).unwrap();
                let c = complexified_norm(&w, d, NormMethod::Closed).unwrap();
                assert!((b - c).abs() <= 1e-12 * c, "{w}: {b} vs {c}");
            }
        }
    }
}

#[test]
fn pieri_conserves_dimension() {
    for n in 2..=4 {
        for w in weights(n, 5) {
            for k in 1..n {
                let total: u128 = tensor_with_fundamental(&w, k).unwrap().iter().map(|b| b.dimension()).sum();
                assert_eq!(total, w.dimension() * HighestWeight::fundamental(n, k).dimension(), "{w} x {k}");
            }
        }
    }
}

#[test]
fn clebsch_gordan_conserves_dimension() {
    for a in 0..=12u32 {
        for b in 0..=12u32 {
            let s: u32 = tensor_decompose_su2(a, b).iter().map(|c| c + 1).sum();
            assert_eq!(s, (a + 1) * (b + 1));
        }
    }
}

#[test]
fn branching_conserves_dimension() {
    for n in [3, 4] {
        for w in weights(n, 4) {
            let s: u128 = branch_to_sun1(&w).unwrap().iter().map(|p| p.dimension()).sum();
            assert_eq!(s, w.dimension(), "{w}");
        }
    }
}

#[test]
fn tableau_count_matches_weyl_dimension() {
    for n in 2..=4 {
        for w in weights(n, 4) {
            assert_eq!(enumerate_tableaux(&w).unwrap().len() as u128, w.dimension(), "{w}");
        }
    }
}

proptest! {
    #[test]
    fn lambda_round_trip(a in prop::collection::vec(0u32..20, 1..5)) {
        let w = HighestWeight::new(a.len() + 1, a.clone()).unwrap();
        let back = HighestWeight::from_lambda(&w.lambda()).unwrap();
        prop_assert_eq!(back.a(), &a[..]);
    }

    #[test]
    fn tableaux_are_semistandard(a in prop::collection::vec(0u32..3, 1..4)) {
        let w = HighestWeight::new(a.len() + 1, a).unwrap();
        for t in enumerate_tableaux(&w).unwrap() {
            for row in &t.rows {
                prop_assert!(row.windows(2).all(|p| p[0] <= p[1]));
            }
            for pair in t.rows.windows(2) {
                for (j, v) in pair[1].iter().enumerate() {
                    prop_assert!(pair[0][j] < *v);
                }
            }
            prop_assert_eq!(t.content.iter().sum::<u32>(), w.boxes());
        }
    }

    #[test]
    fn characters_are_multiplicative(
        a in 0u32..=10, b in 0u32..=10,
        logm in 0.5f64.ln()..2f64.ln(), arg in -PI..PI,
    ) {
        let x = Complex64::from_polar(logm.exp(), arg);
        let lhs = su2_character(a, x) * su2_character(b, x);
        let rhs: Complex64 = tensor_decompose_su2(a, b).iter().map(|&c| su2_character(c, x)).sum();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * lhs.norm().max(1.0));
    }

    #[test]
    fn norm_is_submultiplicative(
        a in prop::collection::vec(0u32..4, 2..=3), k in 1usize..=3, seed in any::<u64>(),
    ) {
        let n = a.len() + 1;
        let k = 1 + (k - 1) % (n - 1);
        let w = HighestWeight::new(n, a).unwrap();
        let d = random_sl(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let nw = complexified_norm(&w, &d, NormMethod::Closed).unwrap();
        let nf = complexified_norm(&HighestWeight::fundamental(n, k), &d, NormMethod::Closed).unwrap();
        for b in tensor_with_fundamental(&w, k).unwrap() {
            let nb = complexified_norm(&b, &d, NormMethod::Closed).unwrap();
            prop_assert!(nb <= nw * nf * (1.0 + 1e-12), "{b}: {nb} > {nw} * {nf}");
        }
    }
}
