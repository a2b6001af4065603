//! Weight families on duals of SU(n), abelian groups, the Heisenberg groups
//! and E(2), and sweeps that verify their defining inequalities.
//!
//! Values are handled as logarithms throughout so that `β^{λ₁}` never
//! overflows.

mod descriptor;

pub use descriptor::WeightDescriptor;

use crate::error::{Error, Result};
use crate::heis::RHeisLabel;
use crate::report::Report;
use crate::repsu::{self, HighestWeight};
use serde::{Deserialize, Serialize};

/// Relative slack used when comparing logarithms of weights.
pub const LOG_TOL: f64 = 1e-12;

/// A scalar weight on the unitary dual of SU(n).
pub trait CentralWeight: Sync {
    fn log_weight(&self, w: &HighestWeight) -> Result<f64>;

    fn label(&self) -> String;
}

/// A positive function on `ℝᵏ` or `ℤᵏ`, evaluated in log scale.
pub trait WeightFunction: Sync {
    fn log_value(&self, x: &[f64]) -> f64;

    fn value(&self, x: &[f64]) -> f64 {
        self.log_value(x).exp()
    }
}

impl CentralWeight for WeightDescriptor {
    fn log_weight(&self, w: &HighestWeight) -> Result<f64> {
        let su2_only = |family: &str| -> Result<u32> {
            if w.n() == 2 {
                Ok(w.a()[0])
            } else {
                Err(Error::Inapplicable {
                    family: family.into(),
                    target: format!("SU({}) (defined on SU(2) only)", w.n()),
                })
            }
        };
        match *self {
            WeightDescriptor::Dim { alpha } => Ok(alpha * (w.dimension() as f64).ln()),
            WeightDescriptor::LenPoly { alpha } => Ok(alpha * (1.0 + w.length() as f64).ln()),
            WeightDescriptor::LenExp { beta } => Ok(w.length() as f64 * beta.ln()),
            WeightDescriptor::LapExp { beta } => {
                let n = su2_only("lapexp")? as f64;
                Ok((n * (n + 2.0)).sqrt() * beta.ln())
            }
            WeightDescriptor::LapPoly { m } => {
                let n = su2_only("lappoly")? as f64;
                Ok(m as f64 * (1.0 + n * (n + 2.0)).ln())
            }
            _ => Err(Error::Inapplicable {
                family: self.family().into(),
                target: "SU(n) as a central weight".into(),
            }),
        }
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

/// A central weight given by a closure returning the weight (not its log).
pub struct FnCentral<F> {
    pub name: String,
    pub f: F,
}

impl<F: Fn(&HighestWeight) -> f64 + Sync> CentralWeight for FnCentral<F> {
    fn log_weight(&self, w: &HighestWeight) -> Result<f64> {
        Ok((self.f)(w).ln())
    }

    fn label(&self) -> String {
        self.name.clone()
    }
}

/// `c · w` for a positive constant `c`.
pub struct Scaled<'a> {
    pub inner: &'a dyn CentralWeight,
    pub factor: f64,
}

impl CentralWeight for Scaled<'_> {
    fn log_weight(&self, w: &HighestWeight) -> Result<f64> {
        Ok(self.inner.log_weight(w)? + self.factor.ln())
    }

    fn label(&self) -> String {
        format!("{}*{}", self.factor, self.inner.label())
    }
}

/// Weight functions on `ℝᵏ`/`ℤᵏ` built from abelian descriptors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum AbelianWeight {
    /// `∏ β_j^{|x_j|}`; coordinates beyond the listed `β`s are ignored.
    Exponential { log_betas: Vec<f64> },
    /// `β^{‖x‖₂}`.
    Radial { log_beta: f64 },
    /// `∏ (1 + |x_j|)^s`.
    Polynomial { s: f64 },
    /// `∏ exp(|x_j| / log(e + |x_j|))`.
    Shilov,
}

impl AbelianWeight {
    pub fn from_descriptor(d: &WeightDescriptor) -> Result<Self> {
        match d {
            WeightDescriptor::AbelExp { betas } | WeightDescriptor::Torus { betas } => Ok(Self::Exponential {
                log_betas: betas.iter().map(|b| b.ln()).collect(),
            }),
            WeightDescriptor::AbelRadial { beta } => Ok(Self::Radial { log_beta: beta.ln() }),
            WeightDescriptor::PolyW { s } => Ok(Self::Polynomial { s: *s }),
            WeightDescriptor::Shilov => Ok(Self::Shilov),
            other => Err(Error::Inapplicable {
                family: other.family().into(),
                target: "an abelian group".into(),
            }),
        }
    }
}

impl WeightFunction for AbelianWeight {
    fn log_value(&self, x: &[f64]) -> f64 {
        match self {
            Self::Exponential { log_betas } => x.iter().zip(log_betas).map(|(v, lb)| v.abs() * lb).sum(),
            Self::Radial { log_beta } => x.iter().map(|v| v * v).sum::<f64>().sqrt() * log_beta,
            Self::Polynomial { s } => x.iter().map(|v| s * v.abs().ln_1p()).sum(),
            Self::Shilov => x
                .iter()
                .map(|v| v.abs() / (std::f64::consts::E + v.abs()).ln())
                .sum(),
        }
    }
}

/// A weight function given by a closure returning the weight value.
pub struct FnWeight<F>(pub F);

impl<F: Fn(&[f64]) -> f64 + Sync> WeightFunction for FnWeight<F> {
    fn log_value(&self, x: &[f64]) -> f64 {
        (self.0)(x).ln()
    }
}

/// Label of an irreducible representation on which a central weight is
/// evaluated.
#[derive(Clone, Debug, PartialEq)]
pub enum DualLabel {
    SuN(HighestWeight),
    /// `π^r` of E(2), `r > 0`.
    E2 { r: f64 },
    /// Schrödinger representation `π^a` of ℍ, `a ≠ 0`.
    Heis { a: f64 },
    RHeis(RHeisLabel),
}

/// `log w(π)` for a central weight.
///
/// Non-SU labels take one-dimensional abelian families (`abelexp` with one
/// `β`, `abelradial`, `polyw`, `shilov`) evaluated at the label's scalar
/// parameter: `r` for E(2), `−a` for ℍ, `n` for `π^n` of the reduced
/// Heisenberg group. Characters of the reduced group carry weight 1.
pub fn log_central_weight(d: &WeightDescriptor, label: &DualLabel) -> Result<f64> {
    d.validate()?;
    let scalar = |x: f64, target: &str| -> Result<f64> {
        match d {
            WeightDescriptor::AbelExp { betas } if betas.len() == 1 => {}
            WeightDescriptor::AbelRadial { .. } | WeightDescriptor::PolyW { .. } | WeightDescriptor::Shilov => {}
            _ => {
                return Err(Error::Inapplicable {
                    family: d.family().into(),
                    target: target.into(),
                })
            }
        }
        Ok(AbelianWeight::from_descriptor(d)?.log_value(&[x]))
    };
    match label {
        DualLabel::SuN(w) => d.log_weight(w),
        DualLabel::E2 { r } => {
            if !(*r > 0.0) {
                return Err(Error::InvalidParameter(format!("E(2) label r must be > 0, got {r}")));
            }
            scalar(*r, "the dual of E(2)")
        }
        DualLabel::Heis { a } => {
            if *a == 0.0 {
                return Err(Error::InvalidParameter("Heisenberg label a must be nonzero".into()));
            }
            scalar(-a, "the dual of the Heisenberg group")
        }
        DualLabel::RHeis(RHeisLabel::Discrete(n)) => scalar(*n as f64, "the reduced Heisenberg dual"),
        DualLabel::RHeis(_) => scalar(0.0, "the reduced Heisenberg dual").map(|_| 0.0),
    }
}

/// `w(π)` for a central weight.
pub fn central_weight(d: &WeightDescriptor, label: &DualLabel) -> Result<f64> {
    log_central_weight(d, label).map(f64::exp)
}

/// Diagonal of the torus-extended weight on `π_λ`: entry
/// `w(t_n − t₁, …, t_n − t_{n−1})` per tableau, in enumeration order.
pub fn torus_extended_weight(wfun: &dyn WeightFunction, w: &HighestWeight) -> Result<Vec<f64>> {
    Ok(torus_extended_log_weight(wfun, w)?.into_iter().map(f64::exp).collect())
}

/// Logarithms of [`torus_extended_weight`].
pub fn torus_extended_log_weight(wfun: &dyn WeightFunction, w: &HighestWeight) -> Result<Vec<f64>> {
    let n = w.n();
    Ok(repsu::enumerate_tableaux(w)?
        .iter()
        .map(|t| {
            let x: Vec<f64> = (0..n - 1)
                .map(|j| t.content[n - 1] as f64 - t.content[j] as f64)
                .collect();
            wfun.log_value(&x)
        })
        .collect())
}

/// Block values of the weight extended from SU(n−1): one entry per summand of
/// the restriction, in [`repsu::branch_to_sun1`] order.
pub fn sun1_extended_weight(inner: &dyn CentralWeight, w: &HighestWeight) -> Result<Vec<(HighestWeight, f64)>> {
    repsu::branch_to_sun1(w)?
        .into_iter()
        .map(|mu| {
            let v = inner.log_weight(&mu)?.exp();
            Ok((mu, v))
        })
        .collect()
}

/// All a-coordinates of SU(n) with `λ₁ ≤ max_len`, in lexicographic order.
pub fn weights_up_to(n: usize, max_len: u32) -> Vec<HighestWeight> {
    let mut out = Vec::new();
    let mut a = vec![0u32; n - 1];
    fn rec(i: usize, left: u32, a: &mut Vec<u32>, n: usize, out: &mut Vec<HighestWeight>) {
        if i == a.len() {
            out.push(HighestWeight::new(n, a.clone()).expect("valid a-coordinates"));
            return;
        }
        for v in 0..=left {
            a[i] = v;
            rec(i + 1, left - v, a, n, out);
        }
    }
    rec(0, max_len, &mut a, n, &mut out);
    out
}

/// Verifies `w(b) ≤ w(a) w(Λ^k)` over Pieri outputs with `λ₁(a) ≤ L`, and on
/// SU(2) additionally `w(c) ≤ w(a) w(b)` over all Clebsch–Gordan triples
/// with `a, b ≤ L`.
pub fn check_submultiplicative_compact(d: &dyn CentralWeight, n: usize, l: u32) -> Result<Report> {
    let mut report = Report::new();
    let fund: Vec<f64> = (1..n)
        .map(|k| d.log_weight(&HighestWeight::fundamental(n, k)))
        .collect::<Result<_>>()?;
    for a in weights_up_to(n, l) {
        let la = d.log_weight(&a)?;
        for k in 1..n {
            for b in repsu::tensor_with_fundamental(&a, k)? {
                let lb = d.log_weight(&b)?;
                report.check(|| format!("{a} x fund{k} -> {b}"), lb, la + fund[k - 1], LOG_TOL);
            }
        }
    }
    if n == 2 {
        let logs: Vec<f64> = (0..=2 * l)
            .map(|c| d.log_weight(&HighestWeight::new(2, vec![c]).expect("SU(2) label")))
            .collect::<Result<_>>()?;
        for a in 0..=l {
            for b in 0..=l {
                for c in repsu::tensor_decompose_su2(a, b) {
                    report.check(
                        || format!("(a,b,c) = ({a},{b},{c})"),
                        logs[c as usize],
                        logs[a as usize] + logs[b as usize],
                        LOG_TOL,
                    );
                }
            }
        }
    }
    report.notes.push(format!("{} on SU({n}), window L = {l}", d.label()));
    Ok(report)
}

/// Domain of the samples fed to [`exponential_growth_bound`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Integer,
    Real,
}

/// A cubical sample grid `{x : |x_i| ≤ radius}` of spacing `step`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleGrid {
    pub dim: usize,
    pub domain: Domain,
    pub radius: f64,
    pub step: f64,
}

impl SampleGrid {
    pub fn integer(dim: usize, radius: i64) -> Self {
        Self {
            dim,
            domain: Domain::Integer,
            radius: radius as f64,
            step: 1.0,
        }
    }

    fn axis(&self) -> Vec<f64> {
        let m = (self.radius / self.step).floor() as i64;
        (-m..=m).map(|i| i as f64 * self.step).collect()
    }

    fn points(&self) -> Vec<Vec<f64>> {
        let axis = self.axis();
        let mut pts = vec![Vec::new()];
        for _ in 0..self.dim {
            pts = pts
                .into_iter()
                .flat_map(|p| {
                    axis.iter().map(move |&v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        pts
    }
}

/// Constants of an at-most-exponential bound `w(x) ≤ C ∏ ρ_i^{|x_i|}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthBound {
    pub c: f64,
    pub rho: Vec<f64>,
    pub checked: usize,
}

/// Fits `m_i = sup_{|t| ≤ 1} w(t e_i)`, sets `C = ∏ m_i`, `ρ_i = m_i`, and
/// checks `w(x) ≤ C ∏ ρ_i^{|x_i|}` on every sample.
pub fn exponential_growth_bound(wfun: &dyn WeightFunction, grid: &SampleGrid) -> Result<GrowthBound> {
    if grid.dim == 0 || !(grid.step > 0.0) || !(grid.radius >= 0.0) {
        return Err(Error::InvalidParameter("sample grid needs dim >= 1, step > 0, radius >= 0".into()));
    }
    let local: Vec<f64> = match grid.domain {
        Domain::Integer => vec![-1.0, 0.0, 1.0],
        Domain::Real => crate::numeric::linspace(-1.0, 1.0, 65),
    };
    let log_m: Vec<f64> = (0..grid.dim)
        .map(|i| {
            local
                .iter()
                .map(|&t| {
                    let mut x = vec![0.0; grid.dim];
                    x[i] = t;
                    wfun.log_value(&x)
                })
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let log_c: f64 = log_m.iter().sum();
    let points = grid.points();
    for x in &points {
        let lv = wfun.log_value(x);
        let lb = log_c + x.iter().zip(&log_m).map(|(v, lm)| v.abs() * lm).sum::<f64>();
        if lv > lb + LOG_TOL * lb.abs().max(1.0) || lv.is_nan() {
            return Err(Error::GrowthBoundViolated {
                point: x.clone(),
                log_value: lv,
                log_bound: lb,
            });
        }
    }
    Ok(GrowthBound {
        c: log_c.exp(),
        rho: log_m.iter().map(|l| l.exp()).collect(),
        checked: points.len(),
    })
}
