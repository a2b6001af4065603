//! Gauss–Hermite quadrature and Hermite functions.

use crate::linalg::SymTridiagonal;
use crate::numeric::NeumaierC;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Hermite functions `φ_0(t), …, φ_{count-1}(t)`, orthonormal in `L²(ℝ)`,
/// from the three-term recurrence
/// `φ_{k+1} = √(2/(k+1)) t φ_k − √(k/(k+1)) φ_{k−1}`.
pub fn hermite_functions(count: usize, t: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    let phi0 = std::f64::consts::PI.powf(-0.25) * (-0.5 * t * t).exp();
    out.push(phi0);
    if count == 1 {
        return out;
    }
    out.push(std::f64::consts::SQRT_2 * t * phi0);
    for k in 1..count - 1 {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * t * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
        out.push(next);
    }
    out
}

/// Physicists' Hermite polynomials `H_0(x), …, H_{count-1}(x)`.
pub fn hermite_polynomials(count: usize, x: f64) -> Vec<f64> {
    let mut h = Vec::with_capacity(count);
    for k in 0..count {
        let v = match k {
            0 => 1.0,
            1 => 2.0 * x,
            _ => 2.0 * x * h[k - 1] - 2.0 * (k - 1) as f64 * h[k - 2],
        };
        h.push(v);
    }
    h
}

/// A Gaussian envelope `exp(−κ (t − center)²)` used to place quadrature nodes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Envelope {
    pub center: f64,
    pub kappa: f64,
}

impl Envelope {
    pub fn new(center: f64, kappa: f64) -> Self {
        Self { center, kappa }
    }

    /// Envelope of a product.
    pub fn times(self, other: Envelope) -> Envelope {
        let kappa = self.kappa + other.kappa;
        Envelope {
            center: (self.kappa * self.center + other.kappa * other.center) / kappa,
            kappa,
        }
    }

    /// Envelope of a convolution.
    pub fn convolve(self, other: Envelope) -> Envelope {
        Envelope {
            center: self.center + other.center,
            kappa: self.kappa * other.kappa / (self.kappa + other.kappa),
        }
    }
}

/// Gauss–Hermite rule for `∫ g(u) e^{−u²} du`, stored with the weight removed
/// so that `∫ f(t) dt ≈ σ Σ_k W_k f(c + σ u_k)`.
#[derive(Clone, Debug)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    /// `W_k = w_k e^{u_k²} = 1 / Σ_{j<n} φ_j(u_k)²`.
    pub scaled_weights: Vec<f64>,
}

impl GaussHermite {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "need at least one node");
        let jacobi = SymTridiagonal::new(
            vec![0.0; n],
            (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect(),
        );
        let mut nodes = jacobi.eigenvalues();
        for u in nodes.iter_mut() {
            // Newton polish on φ_n using φ_n' = √(n/2) φ_{n−1} − (u) φ_n.
            for _ in 0..3 {
                let phi = hermite_functions(n + 1, *u);
                let d = (n as f64 / 2.0).sqrt() * phi[n - 1] - *u * phi[n];
                if d != 0.0 {
                    let step = phi[n] / d;
                    if step.is_finite() {
                        *u -= step;
                    }
                }
            }
        }
        let scaled_weights = nodes
            .iter()
            .map(|&u| {
                let s: f64 = hermite_functions(n, u).iter().map(|p| p * p).sum();
                1.0 / s
            })
            .collect();
        Self {
            nodes,
            scaled_weights,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Sample points and weights for `∫ f(t) dt` adapted to an envelope.
    pub fn adapted(&self, env: Envelope) -> impl Iterator<Item = (f64, f64)> + '_ {
        let sigma = 1.0 / env.kappa.sqrt();
        self.nodes
            .iter()
            .zip(&self.scaled_weights)
            .map(move |(&u, &w)| (env.center + sigma * u, sigma * w))
    }

    /// `∫ f(t) dt` for `f` with roughly the given Gaussian envelope.
    pub fn integrate(&self, env: Envelope, mut f: impl FnMut(f64) -> Complex64) -> Complex64 {
        let mut acc = NeumaierC::default();
        for (t, w) in self.adapted(env) {
            acc.add(f(t) * w);
        }
        acc.value()
    }
}

/// Quadrature settings for the Heisenberg Fourier computations.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Number of Hermite functions in the truncated basis.
    pub basis: usize,
    /// Gauss–Hermite nodes per axis.
    pub nodes: usize,
    /// Largest accepted relative error estimate.
    pub tolerance: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            basis: 8,
            nodes: 64,
            tolerance: 1e-6,
        }
    }
}
