use beurling::linalg::CMatrix;
use beurling::repsu::{ComplexDiagonal, HighestWeight};
use beurling::speccompact::*;
use beurling::weights::{Scaled, WeightDescriptor};
use beurling::Status;
use nalgebra::DVector;
use num_complex::Complex64;
use proptest::prelude::*;

fn diag(x: &[f64]) -> CMatrix {
    CMatrix::from_diagonal(&DVector::from_iterator(x.len(), x.iter().map(|&v| Complex64::new(v, 0.0))))
}

#[test]
fn sweep_agrees_with_closed_form() {
    let rhos = [0.3, 0.4, 0.5, 0.7, 1.0, 1.2, 1.5, 2.0, 2.5, 3.0];
    let mut compared = 0;
    for beta in [1.0, 1.5, 2.0, 3.0] {
        let w = WeightDescriptor::LenExp { beta };
        for rho in rhos {
            let closed = spectrum_member_central_exp(&diag(&[rho, 1.0 / rho]), beta, 1e-12).unwrap();
            let sweep = spectrum_sweep(&ComplexDiagonal::real(&[rho, 1.0 / rho]).unwrap(), &w, 200, 1e-3).unwrap();
            if (rho.ln().abs() - beta.ln()).abs() < 1e-3 {
                assert_ne!(sweep.status, Status::Out, "rho = {rho}, beta = {beta}");
                continue;
            }
            assert_eq!(sweep.status, closed.status, "rho = {rho}, beta = {beta}");
            compared += 1;
        }
    }
    assert!(compared >= 30);
}

#[test]
fn verdicts_are_invariant_under_scaling() {
    let w = WeightDescriptor::LenExp { beta: 2.0 };
    for rho in [0.3, 0.7, 1.0, 1.5, 3.0] {
        let d = ComplexDiagonal::real(&[rho, 1.0 / rho]).unwrap();
        let base = spectrum_sweep(&d, &w, 200, 1e-3).unwrap().status;
        for factor in [1e-3, 0.5, 7.0, 1e4] {
            let scaled = Scaled { inner: &w, factor };
            assert_eq!(spectrum_sweep(&d, &scaled, 200, 1e-3).unwrap().status, base, "rho = {rho}, c = {factor}");
        }
    }
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| Complex64::new(a, b))
}

fn sl_matrix(n: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec(complex(), n * n).prop_filter_map("near singular", move |v| {
        let m = CMatrix::from_vec(n, n, v);
        let det = m.determinant();
        if det.norm() < 0.05 {
            return None;
        }
        let scale = det.powf(1.0 / n as f64);
        Some(m.map(|z| z / scale))
    })
}

proptest! {
    #[test]
    fn inverse_reverses_singular_values(m in prop_oneof![sl_matrix(2), sl_matrix(3)]) {
        let s = singular_values(&m).unwrap();
        let inv = m.clone().try_inverse().unwrap();
        let t = singular_values(&inv).unwrap();
        for (a, b) in s.iter().zip(t.iter().rev()) {
            prop_assert!((a * b - 1.0).abs() < 1e-10, "{s:?} vs {t:?}");
        }
    }

    #[test]
    fn beurling_norm_is_monotone_in_the_weight(
        beta in 1.0f64..3.0, extra in 0.0f64..2.0,
        entries in prop::collection::vec(complex(), 1 + 4 + 9),
    ) {
        let mut c = FourierCoefficients::new();
        c.insert(HighestWeight::trivial(2), CMatrix::from_vec(1, 1, entries[..1].to_vec())).unwrap();
        c.insert(HighestWeight::new(2, vec![1]).unwrap(), CMatrix::from_vec(2, 2, entries[1..5].to_vec())).unwrap();
        c.insert(HighestWeight::new(2, vec![2]).unwrap(), CMatrix::from_vec(3, 3, entries[5..].to_vec())).unwrap();
        let lo = beurling_norm(&c, &WeightDescriptor::LenExp { beta }).unwrap();
        let hi = beurling_norm(&c, &WeightDescriptor::LenExp { beta: beta + extra }).unwrap();
        prop_assert!(lo <= hi * (1.0 + 1e-12));
    }
}
