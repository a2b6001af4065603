//! Quasianalyticity of abelian weights and Shilov radii `ρ_w(μ)` for the
//! annuli of weighted torus algebras.

use crate::numeric::{self, Neumaier};
use crate::report::{Evidence, Status, Verdict};
use crate::weights::WeightFunction;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Tolerance on fitted exponents.
pub const EXPONENT_TOL: f64 = 0.05;
/// Relative closeness to an annulus bound that makes a verdict inconclusive.
pub const ANNULUS_BAND: f64 = 1e-3;

/// Classification of `Σ_{n∈ℤ} log w(nx) / (1 + n²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesClass {
    Convergent,
    Divergent,
    Inconclusive,
}

/// Fit of the two-sided term `a_n ≈ c / (n^p (log n)^q)` on `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermFit {
    pub lo: u64,
    pub hi: u64,
    pub p: f64,
    pub q: f64,
    pub class: SeriesClass,
}

/// Result of [`quasianalytic_test`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesDiagnostics {
    /// `(n, Σ_{|k| ≤ n} term_k)` at decades and at the horizon.
    pub partial_sums: Vec<(u64, f64)>,
    /// Fit on the full window, absent when the tail terms vanish.
    pub fit: Option<TermFit>,
    /// Fits on the lower and upper halves of the window (log scale).
    pub half_fits: Vec<TermFit>,
    pub tolerance: f64,
    /// Constant subtracted from `log w` so that all sampled terms are `≥ 0`.
    pub shift: f64,
    pub classification: SeriesClass,
}

fn classify(p: f64, q: f64, tol: f64) -> SeriesClass {
    if p > 1.0 + tol {
        SeriesClass::Convergent
    } else if p < 1.0 - tol {
        SeriesClass::Divergent
    } else if q > 1.0 + tol {
        SeriesClass::Convergent
    } else {
        SeriesClass::Divergent
    }
}

fn fit_terms(terms: &[f64], lo: u64, hi: u64, tol: f64) -> Option<TermFit> {
    let ns: Vec<u64> = {
        let mut v: Vec<u64> = numeric::geomspace(lo as f64, hi as f64, 64)
            .into_iter()
            .map(|x| x.round() as u64)
            .collect();
        v.dedup();
        v
    };
    let pts: Vec<(f64, f64, f64)> = ns
        .iter()
        .filter(|&&n| terms[n as usize] > 0.0)
        .map(|&n| {
            let ln = (n as f64).ln();
            (ln, ln.ln(), terms[n as usize].ln())
        })
        .collect();
    if pts.len() < 8 {
        return None;
    }
    let x1: Vec<f64> = pts.iter().map(|p| p.0).collect();
    let x2: Vec<f64> = pts.iter().map(|p| p.1).collect();
    let y: Vec<f64> = pts.iter().map(|p| p.2).collect();
    let beta = numeric::least_squares(&[x1, x2], &y)?;
    let (p, q) = (-beta[1], -beta[2]);
    Some(TermFit {
        lo,
        hi,
        p,
        q,
        class: classify(p, q, tol),
    })
}

/// Partial sums and term-asymptotics fit for
/// `Σ_{n∈ℤ} log w(nx)/(1 + n²)` up to `|n| ≤ horizon` (`horizon ≥ 1000`).
///
/// The fit window is `[horizon/100, horizon]`; the classification is the
/// full-window verdict when both half-window fits agree with it, and
/// inconclusive otherwise.
pub fn quasianalytic_test(w: &dyn WeightFunction, x: &[f64], horizon: u64) -> SeriesDiagnostics {
    let horizon = horizon.max(1000);
    let scaled = |n: f64| -> Vec<f64> { x.iter().map(|v| v * n).collect() };
    let logs_pos: Vec<f64> = (0..=horizon).map(|n| w.log_value(&scaled(n as f64))).collect();
    let logs_neg: Vec<f64> = (0..=horizon).map(|n| w.log_value(&scaled(-(n as f64)))).collect();
    let min = logs_pos.iter().chain(&logs_neg).copied().fold(f64::INFINITY, f64::min);
    let shift = min.min(0.0);

    let terms: Vec<f64> = (0..=horizon as usize)
        .map(|n| {
            if n == 0 {
                logs_pos[0] - shift
            } else {
                (logs_pos[n] + logs_neg[n] - 2.0 * shift) / (1.0 + (n * n) as f64)
            }
        })
        .collect();

    let mut partial_sums = Vec::new();
    let mut acc = Neumaier::default();
    let mut next = 1u64;
    for (n, t) in terms.iter().enumerate() {
        acc.add(*t);
        if n as u64 == next || n as u64 == horizon {
            partial_sums.push((n as u64, acc.value()));
            next = next.saturating_mul(10);
        }
    }

    let lo = horizon / 100;
    let mid = ((lo as f64) * (horizon as f64)).sqrt().round() as u64;
    let fit = fit_terms(&terms, lo, horizon, EXPONENT_TOL);
    let half_fits: Vec<TermFit> = [(lo, mid), (mid, horizon)]
        .into_iter()
        .filter_map(|(a, b)| fit_terms(&terms, a, b, EXPONENT_TOL))
        .collect();

    let tail_zero = terms[lo as usize..].iter().all(|&t| t == 0.0);
    let classification = match &fit {
        None if tail_zero => SeriesClass::Convergent,
        None => SeriesClass::Inconclusive,
        Some(f) => {
            if half_fits.len() == 2 && half_fits.iter().all(|h| h.class == f.class) {
                f.class
            } else {
                SeriesClass::Inconclusive
            }
        }
    };
    SeriesDiagnostics {
        partial_sums,
        fit,
        half_fits,
        tolerance: EXPONENT_TOL,
        shift,
        classification,
    }
}

/// Result of [`shilov_radius`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShilovRadius {
    /// `w(Kμ)^{1/K}`.
    pub rho: f64,
    /// `(2^j, w(2^j μ)^{1/2^j})` for `2^j ≤ K`.
    pub dyadic: Vec<(u64, f64)>,
    /// Whether the dyadic values are non-increasing.
    pub monotone: bool,
}

/// Estimate of `ρ_w(μ) = lim_k w(kμ)^{1/k}` at horizon `K ≥ 1`.
pub fn shilov_radius(w: &dyn WeightFunction, mu: &[f64], k: u64) -> ShilovRadius {
    let k = k.max(1);
    let at = |m: u64| -> f64 {
        let x: Vec<f64> = mu.iter().map(|v| v * m as f64).collect();
        (w.log_value(&x) / m as f64).exp()
    };
    let mut dyadic = Vec::new();
    let mut m = 1u64;
    while m <= k {
        dyadic.push((m, at(m)));
        m = match m.checked_mul(2) {
            Some(v) => v,
            None => break,
        };
    }
    let monotone = dyadic.windows(2).all(|p| p[1].1 <= p[0].1 * (1.0 + 1e-12));
    ShilovRadius {
        rho: at(k),
        dyadic,
        monotone,
    }
}

/// Membership of `z ∈ (ℂ*)ⁿ` in the annulus
/// `1/ρ_w(−μ) ≤ |z^μ| ≤ ρ_w(μ)` for every tested direction `μ`.
///
/// Radii come from [`shilov_radius`] at horizon `K`. A value of `|z^μ|`
/// within relative [`ANNULUS_BAND`] of an estimated bound is inconclusive,
/// except `|z^μ| = 1` with both estimates `≥ 1`, which is decided as inside.
pub fn torus_annulus_member(z: &[Complex64], w: &dyn WeightFunction, directions: &[Vec<f64>], k: u64) -> crate::error::Result<Verdict> {
    use crate::error::Error;
    if directions.is_empty() {
        return Err(Error::InvalidParameter("need at least one direction".into()));
    }
    if z.iter().any(|v| v.norm() == 0.0) {
        return Err(Error::InvalidParameter("z must have nonzero entries".into()));
    }
    let mut status = Status::In;
    let mut margin = f64::INFINITY;
    let mut evidence = Vec::new();
    let mut witness = None;
    for mu in directions {
        if mu.len() != z.len() {
            return Err(Error::Dimension(format!("direction {mu:?} does not match n = {}", z.len())));
        }
        let log_zmu: f64 = mu.iter().zip(z).map(|(m, v)| m * v.norm().ln()).sum();
        let neg: Vec<f64> = mu.iter().map(|v| -v).collect();
        let hi = shilov_radius(w, mu, k).rho.ln();
        let lo = -shilov_radius(w, &neg, k).rho.ln();
        evidence.push(Evidence::Quantity { name: format!("log|z^mu| for mu = {mu:?}"), value: log_zmu });
        evidence.push(Evidence::Quantity { name: format!("log rho(mu) for mu = {mu:?}"), value: hi });
        evidence.push(Evidence::Quantity { name: format!("-log rho(-mu) for mu = {mu:?}"), value: lo });
        let m = (log_zmu - lo).min(hi - log_zmu);
        let this = if log_zmu.abs() <= 1e-15 && lo <= 0.0 && hi >= 0.0 {
            Status::In
        } else if (log_zmu - lo).abs() <= ANNULUS_BAND || (hi - log_zmu).abs() <= ANNULUS_BAND {
            Status::Inconclusive
        } else if m >= 0.0 {
            Status::In
        } else {
            Status::Out
        };
        if m < margin {
            margin = m;
        }
        let rank = |s: Status| match s {
            Status::In => 0,
            Status::Inconclusive => 1,
            Status::Out => 2,
        };
        if rank(this) > rank(status) {
            status = this;
            witness = Some(format!("mu = {mu:?}"));
        }
    }
    let mut v = Verdict::new(status, margin);
    v.evidence = evidence;
    v.witness = witness;
    Ok(v)
}
