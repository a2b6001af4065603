//! Spectrum membership and Beurling–Fourier norms for SU(n).

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::numeric::{self, Neumaier};
use crate::report::{Evidence, Status, Verdict};
use crate::repsu::{self, ComplexDiagonal, HighestWeight, NormMethod};
use crate::weights::{self, AbelianWeight, CentralWeight, WeightDescriptor};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// Default tolerance on `| |det A| − 1 |`.
pub const DEFAULT_DET_TOL: f64 = 1e-10;
/// Default half-width of the inconclusive band for growth factors.
pub const DEFAULT_SWEEP_DELTA: f64 = 1e-3;
/// Slack for closed-form boundary comparisons (log scale).
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Finitely supported Fourier coefficients `π ↦ f̂(π)` on SU(n).
#[derive(Clone, Debug, Default)]
pub struct FourierCoefficients {
    blocks: BTreeMap<HighestWeight, CMatrix>,
}

impl FourierCoefficients {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets `f̂(π)`; the matrix must be `d_π × d_π`.
    pub fn insert(&mut self, w: HighestWeight, m: CMatrix) -> Result<()> {
        let d = w.dimension();
        if m.nrows() as u128 != d || m.ncols() as u128 != d {
            return Err(Error::Dimension(format!(
                "{w} has dimension {d}, got a {}x{} block",
                m.nrows(),
                m.ncols()
            )));
        }
        self.blocks.insert(w, m);
        Ok(())
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&HighestWeight, &CMatrix)> {
        self.blocks.iter()
    }
}

/// `Σ_π d_π ‖W(π) f̂(π)‖₁` for a central or torus-extended weight.
pub fn beurling_norm(c: &FourierCoefficients, d: &WeightDescriptor) -> Result<f64> {
    let mut total = Neumaier::default();
    for (w, m) in c.blocks() {
        let dim = w.dimension() as f64;
        let term = match d {
            WeightDescriptor::Torus { betas } => {
                if betas.len() + 1 != w.n() {
                    return Err(Error::Dimension(format!(
                        "torus weight has {} parameters, SU({}) needs {}",
                        betas.len(),
                        w.n(),
                        w.n() - 1
                    )));
                }
                let wf = AbelianWeight::from_descriptor(d)?;
                let diag = weights::torus_extended_weight(&wf, w)?;
                let mut scaled = m.clone();
                for (i, wi) in diag.iter().enumerate() {
                    scaled.row_mut(i).scale_mut(*wi);
                }
                linalg::trace_norm(&scaled)
            }
            _ => d.log_weight(w)?.exp() * linalg::trace_norm(m),
        };
        total.add(dim * term);
    }
    Ok(total.value())
}

/// Descending singular values; see [`linalg::singular_values`].
pub fn singular_values(a: &CMatrix) -> Result<Vec<f64>> {
    linalg::singular_values(a)
}

fn check_det(sigma: &[f64], det_tol: f64) -> Result<()> {
    let det: f64 = sigma.iter().product();
    if (det - 1.0).abs() > det_tol {
        return Err(Error::Determinant(det));
    }
    Ok(())
}

/// Closed-form membership for the central weight `β^{λ₁}`:
/// in iff `σ₁⋯σ_k ≤ β` for `1 ≤ k ≤ n−1`. Boundary points are in.
pub fn spectrum_member_central_exp(a: &CMatrix, beta: f64, det_tol: f64) -> Result<Verdict> {
    if !(beta >= 1.0) {
        return Err(Error::InvalidParameter(format!("beta must be >= 1, got {beta}")));
    }
    let sigma = singular_values(a)?;
    check_det(&sigma, det_tol)?;
    let n = sigma.len();
    let lb = beta.ln();
    let mut prefix = 0.0;
    let mut margin = f64::INFINITY;
    let mut worst = 1;
    let mut verdict_evidence = Vec::new();
    for (k, s) in sigma.iter().enumerate().take(n - 1) {
        prefix += s.ln();
        verdict_evidence.push(Evidence::Quantity {
            name: format!("log(sigma_1..sigma_{})", k + 1),
            value: prefix,
        });
        if lb - prefix < margin {
            margin = lb - prefix;
            worst = k + 1;
        }
    }
    if n == 1 {
        margin = lb;
    }
    let mut v = Verdict::from_margin(margin, BOUNDARY_TOL)
        .with_witness(format!("k = {worst}"))
        .quantity("log_beta", lb);
    v.evidence.extend(verdict_evidence);
    Ok(v)
}

/// Closed-form membership for the torus-extended weight `∏ β_j^{|x_j|}` on a
/// diagonal representative: in iff `1/β_j ≤ |x_j| ≤ β_j` for `j ≤ n−1`.
pub fn spectrum_member_torus_extended(d: &CMatrix, betas: &[f64], det_tol: f64) -> Result<Verdict> {
    if !d.is_square() {
        return Err(Error::NotDiagonal);
    }
    let n = d.nrows();
    for i in 0..n {
        for j in 0..n {
            if i != j && d[(i, j)] != Complex64::new(0.0, 0.0) {
                return Err(Error::NotDiagonal);
            }
        }
    }
    let x = ComplexDiagonal::new((0..n).map(|i| d[(i, i)]).collect())?;
    spectrum_member_torus_diagonal(&x, betas, det_tol)
}

/// [`spectrum_member_torus_extended`] for a diagonal given by its entries.
pub fn spectrum_member_torus_diagonal(x: &ComplexDiagonal, betas: &[f64], det_tol: f64) -> Result<Verdict> {
    let n = x.n();
    if betas.len() + 1 != n {
        return Err(Error::Dimension(format!("need {} betas for SU({n}), got {}", n - 1, betas.len())));
    }
    if let Some(b) = betas.iter().find(|b| !(**b >= 1.0)) {
        return Err(Error::InvalidParameter(format!("beta must be >= 1, got {b}")));
    }
    let moduli: Vec<f64> = x.entries().iter().map(|z| z.norm()).collect();
    check_det(&moduli, det_tol)?;
    let mut margin = f64::INFINITY;
    let mut worst = 1;
    for (j, (m, b)) in moduli.iter().zip(betas).enumerate() {
        let slack = b.ln() - m.ln().abs();
        if slack < margin {
            margin = slack;
            worst = j + 1;
        }
    }
    Ok(Verdict::from_margin(margin, BOUNDARY_TOL).with_witness(format!("j = {worst}")))
}

/// Sweep of `r_λ = ‖π_λ,ℂ(D)‖ / w(λ)` over `λ₁ ≤ L`, classified by the
/// geometric growth factor fitted along rays `λ = k·a`.
///
/// Rays are the fundamental directions plus `(1, …, 1)`; the factor of a ray
/// is `exp` of the least-squares slope of `log r` over `k ∈ [K/2, K]`. The
/// verdict is out above `1 + δ`, in below `1 − δ` and inconclusive between.
pub fn spectrum_sweep(d: &ComplexDiagonal, w: &dyn CentralWeight, l: u32, delta: f64) -> Result<Verdict> {
    let n = d.n();
    if n < 2 {
        return Err(Error::InvalidParameter("SU(n) needs n >= 2".into()));
    }
    if l < 4 {
        return Err(Error::InvalidParameter("sweep horizon must be at least 4".into()));
    }
    let log_ratio = |hw: &HighestWeight| -> Result<f64> {
        Ok(repsu::log_complexified_norm(hw, d, NormMethod::Closed)? - w.log_weight(hw)?)
    };

    let mut rays: Vec<Vec<u32>> = (0..n - 1)
        .map(|k| {
            let mut a = vec![0; n - 1];
            a[k] = 1;
            a
        })
        .collect();
    if n > 2 {
        rays.push(vec![1; n - 1]);
    }

    let mut traces = Vec::new();
    let mut best: Option<(f64, Vec<u32>)> = None;
    for ray in rays {
        let step: u32 = ray.iter().sum();
        let kmax = l / step;
        let logs: Vec<f64> = (0..=kmax)
            .map(|k| log_ratio(&HighestWeight::new(n, ray.iter().map(|v| v * k).collect())?))
            .collect::<Result<_>>()?;
        let lo = (kmax / 2) as usize;
        let ks: Vec<f64> = (lo..=kmax as usize).map(|k| k as f64).collect();
        let slope = numeric::slope(&ks, &logs[lo..]).unwrap_or(0.0);
        let factor = slope.exp();
        if best.as_ref().is_none_or(|(f, _)| factor > *f) {
            best = Some((factor, ray.clone()));
        }
        traces.push(Evidence::RatioTrace {
            ray,
            log_ratios: logs,
            growth_factor: factor,
        });
    }
    let (factor, ray) = best.expect("at least one ray");

    // Full window supremum when it is small enough to enumerate.
    let count = binomial(l as u128 + n as u128 - 1, n as u128 - 1);
    let mut evidence = traces;
    if count <= 200_000 {
        let mut sup = f64::NEG_INFINITY;
        let mut arg = Vec::new();
        for hw in weights::weights_up_to(n, l) {
            let v = log_ratio(&hw)?;
            if v > sup {
                sup = v;
                arg = hw.a().iter().map(|&x| x as f64).collect();
            }
        }
        evidence.push(Evidence::GridSup {
            label: "log r over lambda_1 <= L".into(),
            log_sup: sup,
            argmax: arg,
            samples: count as usize,
        });
    }

    let status = if factor > 1.0 + delta {
        Status::Out
    } else if factor < 1.0 - delta {
        Status::In
    } else {
        Status::Inconclusive
    };
    let mut v = Verdict::new(status, -factor.ln())
        .with_witness(format!("ray a = {ray:?}"))
        .quantity("growth_factor", factor)
        .quantity("delta", delta);
    if status == Status::Inconclusive {
        v = v.with_reason("growth factor within the inconclusive band");
    }
    v.evidence.extend(evidence);
    Ok(v)
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut r = 1u128;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `|χ_a(x)χ_b(x) − Σ_c χ_c(x)| / (1 + |χ_a(x)χ_b(x)|)` over the
/// Clebsch–Gordan decomposition of `π_a ⊗ π_b`.
pub fn evaluation_multiplicativity_check(x: Complex64, a: u32, b: u32) -> f64 {
    let lhs = repsu::su2_character(a, x) * repsu::su2_character(b, x);
    let mut rhs = numeric::NeumaierC::default();
    for c in repsu::tensor_decompose_su2(a, b) {
        rhs.add(repsu::su2_character(c, x));
    }
    (lhs - rhs.value()).norm() / (1.0 + lhs.norm())
}
