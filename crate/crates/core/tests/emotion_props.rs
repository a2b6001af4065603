use beurling::emotion::*;
use beurling::linalg::CMatrix;
use beurling::weights::WeightDescriptor;
use num_complex::Complex64;
use proptest::prelude::*;

const N: usize = 12;

fn interior_close(a: &CMatrix, b: &CMatrix) -> bool {
    let d = a.nrows();
    (1..d - 1).all(|j| (0..d).all(|i| (a[(i, j)] - b[(i, j)]).norm() <= 1e-12))
}

fn bracket(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

proptest! {
    #[test]
    fn scalar_coproduct_inequality(m in -1e3f64..1e3, n in -1e3f64..1e3, r in 0.0f64..1e3, s in 0.0f64..1e3) {
        let lhs = ((m + n).powi(2) + (r + s).powi(2)).sqrt();
        let rhs = (m * m + r * r).sqrt() + (n * n + s * s).sqrt();
        prop_assert!(lhs <= rhs + 1e-12 * rhs.max(1.0));
    }

    #[test]
    fn lie_brackets_on_interior(r in 0.1f64..5.0) {
        let s = e2_lie_op(Generator::S, r, N).unwrap().matrix;
        let x = e2_lie_op(Generator::X, r, N).unwrap().matrix;
        let y = e2_lie_op(Generator::Y, r, N).unwrap().matrix;
        prop_assert!(interior_close(&bracket(&s, &x), &y));
        prop_assert!(interior_close(&bracket(&s, &y), &(-&x)));
        prop_assert!(interior_close(&bracket(&x, &y), &CMatrix::zeros(2 * N + 1, 2 * N + 1)));
    }

    #[test]
    fn generators_are_skew_adjoint(r in 0.1f64..5.0) {
        for g in [Generator::S, Generator::X, Generator::Y] {
            let m = e2_lie_op(g, r, N).unwrap().matrix;
            let sum = &m + m.adjoint();
            prop_assert!(sum.iter().all(|z| z.norm() <= 1e-15));
        }
    }

    #[test]
    fn verdict_is_invariant_under_real_translation(
        theta in -3.0f64..3.0, tx in -2.0f64..2.0, ty in -2.0f64..2.0,
        ix in -1.5f64..1.5, iy in -1.5f64..1.5, lz in -1.5f64..1.5, rx in -1.0f64..1.0, arg in -3.0f64..3.0,
    ) {
        let norm2 = ix * ix + iy * iy + lz * lz;
        prop_assume!((norm2.sqrt() - 1.0).abs() > 1e-9);
        let d = WeightDescriptor::E2Lap { t: 1.0 };
        let p = E2CPoint::new(Complex64::new(rx, ix), Complex64::new(0.3, iy), Complex64::from_polar(lz.exp(), arg)).unwrap();
        let g = E2CPoint::new(tx.into(), ty.into(), Complex64::from_polar(1.0, theta)).unwrap();
        let base = e2_spectrum_member(&p, &d).unwrap().status;
        prop_assert_eq!(e2_spectrum_member(&g.mul(&p), &d).unwrap().status, base);
    }
}

#[test]
fn truncated_shift_part_is_bounded_by_2rs() {
    for (r, s) in [(1.0, 1.0), (1.0, 2.0), (3.0, 0.5), (0.2, 7.0)] {
        for n in [1usize, 5, 10, 50, 100] {
            let b = e2_coproduct_laplacian(r, s, n).unwrap().b_norm();
            assert!(b <= 2.0 * r * s, "(r, s, N) = ({r}, {s}, {n})");
        }
        assert!(e2_coproduct_laplacian(r, s, 100).unwrap().b_norm() >= 1.99 * r * s);
    }
}
