//! Operator-valued Fourier transform on `ℍ`, evaluated two ways on a truncated
//! Hermite basis: through the integral kernel, and by direct quadrature of the
//! representation formula `π^a(y,z,x)ξ(t) = e^{−ia(ty−z)} ξ(t−x)`.
//!
//! Test functions are finite sums of separable products and the group
//! function is `F = f̂`, the unitary Fourier transform of `f` on `ℝ³`
//! (convention `ĝ(s) = (2π)^{−1/2} ∫ g(t) e^{−ist} dt`).

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::numeric::NeumaierC;
use crate::quadrature::{hermite_functions, hermite_polynomials, Envelope, GaussHermite, QuadratureSpec};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// `g(t) = P(t − c) e^{−α(t−c)²/2} e^{iωt}` with `P(u) = Σ_k p_k u^k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussianFactor {
    pub alpha: f64,
    pub center: f64,
    pub freq: f64,
    pub poly: Vec<Complex64>,
}

impl GaussianFactor {
    pub fn gaussian(alpha: f64) -> Self {
        Self {
            alpha,
            center: 0.0,
            freq: 0.0,
            poly: vec![Complex64::new(1.0, 0.0)],
        }
    }

    fn poly_at(&self, u: f64) -> Complex64 {
        self.poly.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, p| acc * u + p)
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let u = t - self.center;
        self.poly_at(u) * (-0.5 * self.alpha * u * u).exp() * Complex64::from_polar(1.0, self.freq * t)
    }

    /// Closed-form unitary Fourier transform. With `ν = s − ω`,
    /// `ĝ(s) = e^{−iνc} α^{−1/2} e^{−ν²/(2α)} Σ_k p_k (−i)^k (2α)^{−k/2} H_k(ν/√(2α))`.
    pub fn fourier(&self, s: f64) -> Complex64 {
        let nu = s - self.freq;
        let scale = (2.0 * self.alpha).sqrt();
        let h = hermite_polynomials(self.poly.len(), nu / scale);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut mi_k = Complex64::new(1.0, 0.0);
        let mut sc = 1.0;
        for (k, p) in self.poly.iter().enumerate() {
            acc += p * mi_k * (h[k] / sc);
            mi_k *= Complex64::new(0.0, -1.0);
            sc *= scale;
        }
        acc * Complex64::from_polar(1.0, -nu * self.center) * (-nu * nu / (2.0 * self.alpha)).exp()
            / self.alpha.sqrt()
    }

    /// Gaussian envelope of `|g|`.
    pub fn envelope(&self) -> Envelope {
        Envelope::new(self.center, self.alpha / 2.0)
    }

    /// Gaussian envelope of `|ĝ|`.
    pub fn fourier_envelope(&self) -> Envelope {
        Envelope::new(self.freq, 1.0 / (2.0 * self.alpha))
    }

    /// `g′`, again in the family.
    pub fn derivative(&self) -> Self {
        let deg = self.poly.len();
        let mut q = vec![Complex64::new(0.0, 0.0); deg + 1];
        for (k, p) in self.poly.iter().enumerate() {
            if k > 0 {
                q[k - 1] += p * k as f64;
            }
            q[k + 1] -= p * self.alpha;
            q[k] += p * Complex64::new(0.0, self.freq);
        }
        Self {
            poly: q,
            ..self.clone()
        }
    }

    /// `√N g(N t)`.
    pub fn dilate(&self, n: f64) -> Self {
        let root = n.sqrt();
        let mut pow = root;
        let poly = self
            .poly
            .iter()
            .map(|p| {
                let v = p * pow;
                pow *= n;
                v
            })
            .collect();
        Self {
            alpha: self.alpha * n * n,
            center: self.center / n,
            freq: self.freq * n,
            poly,
        }
    }

    /// `‖g‖₂` by Gauss–Hermite quadrature matched to `|g|²`.
    pub fn l2_norm(&self) -> f64 {
        let gh = GaussHermite::new(self.poly.len() + 8);
        let env = Envelope::new(self.center, self.alpha);
        gh.integrate(env, |t| Complex64::new(self.eval(t).norm_sqr(), 0.0)).re.sqrt()
    }
}

/// `coeff · g₁(p) g₂(q) g₃(r)` on `ℝ³`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparableTerm {
    pub coeff: Complex64,
    pub factors: [GaussianFactor; 3],
}

/// A finite sum of separable terms.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TestFunction {
    pub terms: Vec<SeparableTerm>,
}

impl TestFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^{−(α₁p² + α₂q² + α₃r²)/2}`.
    pub fn gaussian(alphas: [f64; 3]) -> Self {
        Self {
            terms: vec![SeparableTerm {
                coeff: Complex64::new(1.0, 0.0),
                factors: alphas.map(GaussianFactor::gaussian),
            }],
        }
    }

    pub fn validate(&self) -> Result<()> {
        for t in &self.terms {
            for f in &t.factors {
                if !(f.alpha > 0.0 && f.alpha.is_finite()) {
                    return Err(Error::InvalidParameter(format!("Gaussian width must be > 0, got {}", f.alpha)));
                }
            }
        }
        Ok(())
    }
}

/// How [`heis_fourier`] evaluates the matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FourierMethod {
    Kernel,
    Direct,
}

/// Matrix `⟨F̂(a) φ_j, φ_i⟩` on the first `basis` Hermite functions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncatedOperator {
    pub basis: usize,
    pub matrix: CMatrix,
    /// Relative Frobenius difference against a rule with 3/4 of the nodes.
    pub error_estimate: f64,
}

/// Kernel of `F̂(a)`: `K(t, x) = 2π f₁(−at) f₂(a) f̂₃(t − x)`.
pub fn heis_kernel(f: &TestFunction, a: f64, t: f64, x: f64) -> Complex64 {
    let mut acc = NeumaierC::default();
    for term in &f.terms {
        let [f1, f2, f3] = &term.factors;
        acc.add(term.coeff * 2.0 * PI * f1.eval(-a * t) * f2.eval(a) * f3.fourier(t - x));
    }
    acc.value()
}

fn kernel_matrix(f: &TestFunction, a: f64, basis: usize, gh: &GaussHermite) -> CMatrix {
    let hermite_env = Envelope::new(0.0, 0.5);
    let mut m = CMatrix::zeros(basis, basis);
    for term in &f.terms {
        let [f1, f2, f3] = &term.factors;
        let pref = term.coeff * 2.0 * PI * f2.eval(a);
        let e1 = Envelope::new(-f1.center / a, f1.alpha * a * a / 2.0);
        let e3 = f3.fourier_envelope();
        let t_env = hermite_env.times(e1).times(e3.convolve(hermite_env));
        let mut acc = vec![NeumaierC::default(); basis * basis];
        for (t, wt) in gh.adapted(t_env) {
            let phi_t = hermite_functions(basis, t);
            let g = pref * f1.eval(-a * t) * wt;
            let x_env = Envelope::new(t - e3.center, e3.kappa).times(hermite_env);
            let mut xj = vec![NeumaierC::default(); basis];
            for (x, wx) in gh.adapted(x_env) {
                let k = f3.fourier(t - x) * wx;
                for (j, p) in hermite_functions(basis, x).iter().enumerate() {
                    xj[j].add(k * *p);
                }
            }
            for i in 0..basis {
                for j in 0..basis {
                    acc[i * basis + j].add(g * phi_t[i] * xj[j].value());
                }
            }
        }
        for i in 0..basis {
            for j in 0..basis {
                m[(i, j)] += acc[i * basis + j].value();
            }
        }
    }
    m
}

fn direct_matrix(f: &TestFunction, a: f64, basis: usize, gh: &GaussHermite) -> CMatrix {
    let hermite_env = Envelope::new(0.0, 0.5);
    let mut m = CMatrix::zeros(basis, basis);
    for term in &f.terms {
        let [f1, f2, f3] = &term.factors;
        let (e1, e2, e3) = (f1.fourier_envelope(), f2.fourier_envelope(), f3.fourier_envelope());
        // z: ∫ F₂(z) e^{iaz} dz
        let zint = gh.integrate(e2, |z| f2.fourier(z) * Complex64::from_polar(1.0, a * z));
        // envelope of t ↦ ∫ F₁(y) e^{−iaty} dy, from the width of F₁
        let y_t_env = Envelope::new(-f1.center / a, a * a / (4.0 * e1.kappa));
        let t_env = hermite_env.times(y_t_env).times(e3.convolve(hermite_env));
        let pref = term.coeff * zint;
        let mut acc = vec![NeumaierC::default(); basis * basis];
        for (t, wt) in gh.adapted(t_env) {
            let phi_t = hermite_functions(basis, t);
            let yint = gh.integrate(e1, |y| f1.fourier(y) * Complex64::from_polar(1.0, -a * t * y));
            let x_env = e3.times(Envelope::new(t, 0.5));
            let mut xj = vec![NeumaierC::default(); basis];
            for (x, wx) in gh.adapted(x_env) {
                let k = f3.fourier(x) * wx;
                for (j, p) in hermite_functions(basis, t - x).iter().enumerate() {
                    xj[j].add(k * *p);
                }
            }
            let g = pref * yint * wt;
            for i in 0..basis {
                for j in 0..basis {
                    acc[i * basis + j].add(g * phi_t[i] * xj[j].value());
                }
            }
        }
        for i in 0..basis {
            for j in 0..basis {
                m[(i, j)] += acc[i * basis + j].value();
            }
        }
    }
    m
}

/// `F̂(a) = ∫ F(g) π^a(g) dg` compressed to the first `spec.basis` Hermite
/// functions, with `F` the Fourier transform of `f`.
///
/// The error estimate compares against a rule with 3/4 of the nodes; above
/// `spec.tolerance` the call fails with [`Error::GridTooCoarse`].
pub fn heis_fourier(f: &TestFunction, a: f64, spec: &QuadratureSpec, method: FourierMethod) -> Result<TruncatedOperator> {
    if a == 0.0 || !a.is_finite() {
        return Err(Error::InvalidParameter(format!("a must be a nonzero real, got {a}")));
    }
    if spec.basis == 0 || spec.nodes < 8 {
        return Err(Error::InvalidParameter("need basis >= 1 and at least 8 nodes".into()));
    }
    f.validate()?;
    let eval = |nodes: usize| {
        let gh = GaussHermite::new(nodes);
        match method {
            FourierMethod::Kernel => kernel_matrix(f, a, spec.basis, &gh),
            FourierMethod::Direct => direct_matrix(f, a, spec.basis, &gh),
        }
    };
    let full = eval(spec.nodes);
    let coarse = eval((spec.nodes * 3 / 4).max(8));
    let scale = full.norm();
    let error_estimate = if scale == 0.0 { 0.0 } else { (&full - &coarse).norm() / scale };
    if error_estimate > spec.tolerance {
        return Err(Error::GridTooCoarse {
            estimate: error_estimate,
            tolerance: spec.tolerance,
        });
    }
    Ok(TruncatedOperator {
        basis: spec.basis,
        matrix: full,
        error_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trapezoid_fourier(g: &GaussianFactor, s: f64) -> Complex64 {
        let h = 1e-3;
        let mut acc = NeumaierC::default();
        let span = 12.0 / g.alpha.sqrt();
        let n = (span / h) as i64;
        for k in -n..=n {
            let t = g.center + k as f64 * h;
            acc.add(g.eval(t) * Complex64::from_polar(1.0, -s * t));
        }
        acc.value() * h / (2.0 * PI).sqrt()
    }

    #[test]
    fn closed_form_transform_matches_quadrature() {
        let g = GaussianFactor {
            alpha: 1.7,
            center: 0.4,
            freq: -0.8,
            poly: vec![Complex64::new(1.0, 0.5), Complex64::new(-0.3, 0.0), Complex64::new(0.2, 0.1)],
        };
        for s in [-2.0, -0.5, 0.0, 0.3, 1.9] {
            let d = (g.fourier(s) - trapezoid_fourier(&g, s)).norm();
            assert!(d < 1e-12, "s = {s}: {d}");
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let g = GaussianFactor {
            alpha: 0.9,
            center: -0.3,
            freq: 1.1,
            poly: vec![Complex64::new(0.5, 0.0), Complex64::new(1.0, -0.2)],
        };
        let d = g.derivative();
        let h = 1e-5;
        for t in [-1.0, 0.0, 0.7] {
            let fd = (g.eval(t + h) - g.eval(t - h)) / (2.0 * h);
            assert!((d.eval(t) - fd).norm() < 1e-8);
        }
    }

    #[test]
    fn zero_function_gives_zero_operator() {
        let spec = QuadratureSpec { basis: 4, ..Default::default() };
        let m = heis_fourier(&TestFunction::zero(), 1.0, &spec, FourierMethod::Direct).unwrap();
        assert_eq!(m.matrix, CMatrix::zeros(4, 4));
    }

    #[test]
    fn kernel_flips_sign_for_odd_third_factor() {
        let mut f = TestFunction::gaussian([1.0, 0.5, 2.0]);
        f.terms[0].factors[2].poly = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        for (t, x) in [(0.3, -0.4), (1.2, 0.1), (-0.5, 0.9)] {
            let k = heis_kernel(&f, 0.8, t, x);
            let flipped = {
                let term = &f.terms[0];
                let [f1, f2, f3] = &term.factors;
                2.0 * PI * f1.eval(-0.8 * t) * f2.eval(0.8) * f3.fourier(x - t)
            };
            assert!((k + flipped).norm() < 1e-14 * (1.0 + k.norm()));
            assert!(k.norm() > 1e-6);
        }
    }

    #[test]
    fn kernel_and_direct_agree_for_shifted_family() {
        let spec = QuadratureSpec { basis: 5, nodes: 64, tolerance: 1e-6 };
        let f = TestFunction {
            terms: vec![SeparableTerm {
                coeff: Complex64::new(0.7, -0.2),
                factors: [
                    GaussianFactor { alpha: 1.3, center: 0.2, freq: 0.3, poly: vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)] },
                    GaussianFactor { alpha: 0.8, center: -0.1, freq: 0.0, poly: vec![Complex64::new(1.0, 0.0)] },
                    GaussianFactor { alpha: 1.0, center: 0.0, freq: -0.4, poly: vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.3)] },
                ],
            }],
        };
        for a in [-1.0, 0.7] {
            let k = heis_fourier(&f, a, &spec, FourierMethod::Kernel).unwrap().matrix;
            let d = heis_fourier(&f, a, &spec, FourierMethod::Direct).unwrap().matrix;
            let rel = (&k - &d).norm() / k.norm();
            assert!(rel < 1e-8, "a = {a}: {rel}");
        }
    }

    #[test]
    fn dilation_norms() {
        let g = GaussianFactor::gaussian(1.0);
        let (n0, d0) = (g.l2_norm(), g.derivative().l2_norm());
        for n in [1.0, 2.0, 4.0, 8.0, 16.0] {
            let gn = g.dilate(n);
            assert!((gn.l2_norm() / n0 - 1.0).abs() < 1e-12);
            assert!((gn.derivative().l2_norm() / (n * d0) - 1.0).abs() < 1e-12);
        }
    }
}
