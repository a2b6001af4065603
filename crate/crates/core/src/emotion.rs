//! The Euclidean motion group E(2) and its complexification
//! `E(2)_ℂ ≅ ℂ² × ℂ*`.
//!
//! Irreducibles `π^r` (`r > 0`) act on `ℓ²(ℤ)` with basis `e_n`; the
//! Laplacian acts diagonally by `n² + r²`.

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, SymTridiagonal};
use crate::numeric;
use crate::report::{Evidence, Report, Status, Verdict};
use crate::weights::{WeightDescriptor, LOG_TOL};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Tolerance for boundary comparisons and for treating values as zero.
const ZERO_TOL: f64 = 1e-12;
/// Largest log-increment of the bound across the window edge that still
/// counts as a stabilized supremum.
const EDGE_TOL: f64 = 1e-6;

/// A point `(x, y, z)` of `E(2)_ℂ`, `z ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct E2CPoint {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl E2CPoint {
    pub fn new(x: Complex64, y: Complex64, z: Complex64) -> Result<Self> {
        if z.norm() == 0.0 || !z.is_finite() {
            return Err(Error::InvalidParameter("z must be a nonzero finite complex number".into()));
        }
        Ok(Self { x, y, z })
    }

    /// `A = √((Im x)² + (Im y)²)`.
    pub fn a(&self) -> f64 {
        self.x.im.hypot(self.y.im)
    }

    /// `s` with `z = e^{is}` and `0 ≤ Re s < 2π`; `Im s = −log|z|`.
    pub fn s(&self) -> Complex64 {
        let mut arg = self.z.arg();
        if arg < 0.0 {
            arg += 2.0 * PI;
        }
        if arg >= 2.0 * PI {
            arg -= 2.0 * PI;
        }
        Complex64::new(arg, -self.z.norm().ln())
    }

    pub fn is_real(&self) -> bool {
        self.x.im.abs() <= ZERO_TOL && self.y.im.abs() <= ZERO_TOL && (self.z.norm() - 1.0).abs() <= ZERO_TOL
    }

    /// `(x, y, z)·(x′, y′, z′) = ((x, y) + ρ(z)(x′, y′), z z′)`, with `ρ`
    /// extended holomorphically: `cos s = (z + 1/z)/2`, `sin s = (z − 1/z)/(2i)`.
    pub fn mul(&self, other: &Self) -> Self {
        let zi = self.z.inv();
        let c = (self.z + zi) * 0.5;
        let s = (self.z - zi) / Complex64::new(0.0, 2.0);
        Self {
            x: self.x + c * other.x - s * other.y,
            y: self.y + s * other.x + c * other.y,
            z: self.z * other.z,
        }
    }
}

/// `exp(sS + xX + yY) = ((sin s/s) x + ((cos s − 1)/s) y,
/// ((1 − cos s)/s) x + (sin s/s) y, e^{is})`, equal to `(x, y, 1)` at `s = 0`.
pub fn e2_exp(s: f64, x: f64, y: f64) -> E2CPoint {
    let (sinc, cosc) = if s.abs() < 1e-4 {
        let s2 = s * s;
        (1.0 - s2 / 6.0 + s2 * s2 / 120.0, -s / 2.0 + s * s2 / 24.0)
    } else {
        (s.sin() / s, (s.cos() - 1.0) / s)
    };
    E2CPoint {
        x: Complex64::new(sinc * x + cosc * y, 0.0),
        y: Complex64::new(-cosc * x + sinc * y, 0.0),
        z: Complex64::from_polar(1.0, s),
    }
}

/// Generators of the Lie algebra of E(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    S,
    X,
    Y,
}

/// A matrix on the window `|n| ≤ N` (index `n + N`), or on pairs
/// `(m, n)` with `|m|, |n| ≤ N` (index `(m + N)(2N + 1) + n + N`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct E2TruncatedOperator {
    pub window: usize,
    pub matrix: CMatrix,
}

impl E2TruncatedOperator {
    pub fn index(&self, n: i64) -> usize {
        (n + self.window as i64) as usize
    }

    /// `M e_n` as a vector on the window.
    pub fn apply_basis(&self, n: i64) -> Vec<Complex64> {
        self.matrix.column(self.index(n)).iter().copied().collect()
    }
}

/// `∂π^r(T)` on `|n| ≤ N`:
/// `S e_n = −in e_n`, `X e_n = (ir/2)(e_{n−1} + e_{n+1})`,
/// `Y e_n = (r/2)(e_{n+1} − e_{n−1})`.
pub fn e2_lie_op(t: Generator, r: f64, window: usize) -> Result<E2TruncatedOperator> {
    if !(r > 0.0) {
        return Err(Error::InvalidParameter(format!("r must be > 0, got {r}")));
    }
    let dim = 2 * window + 1;
    let mut m = CMatrix::zeros(dim, dim);
    let nn = window as i64;
    for n in -nn..=nn {
        let j = (n + nn) as usize;
        match t {
            Generator::S => m[(j, j)] = Complex64::new(0.0, -(n as f64)),
            Generator::X | Generator::Y => {
                let (down, up) = match t {
                    Generator::X => (Complex64::new(0.0, r / 2.0), Complex64::new(0.0, r / 2.0)),
                    _ => (Complex64::new(-r / 2.0, 0.0), Complex64::new(r / 2.0, 0.0)),
                };
                if n > -nn {
                    m[(j - 1, j)] = down;
                }
                if n < nn {
                    m[(j + 1, j)] = up;
                }
            }
        }
    }
    Ok(E2TruncatedOperator { window, matrix: m })
}

/// Weight on the dual of E(2) built from the Laplacian.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LaplacianWeight {
    /// `(1 + n² + r²)^m`.
    Poly { m: u32 },
    /// `exp(t √(n² + r²))`.
    Exp { t: f64 },
}

/// Value of the Laplacian weight on `e_n` in `π^r`.
pub fn e2_laplacian_weight(kind: LaplacianWeight, r: f64, n: i64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::InvalidParameter(format!("r must be > 0, got {r}")));
    }
    let q = (n * n) as f64 + r * r;
    match kind {
        LaplacianWeight::Poly { m } if m >= 1 => Ok((1.0 + q).powi(m as i32)),
        LaplacianWeight::Exp { t } if t > 0.0 => Ok((t * q.sqrt()).exp()),
        _ => Err(Error::InvalidParameter("need m >= 1 or t > 0".into())),
    }
}

/// Output of [`e2_complexified_norm`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexifiedNorm {
    /// `e^{rA} sup_{|n| ≤ N} e^{n Im s − t√(n² + r²)}`.
    pub bound: f64,
    /// Operator norm of the assembled truncated matrix.
    pub truncated_norm: f64,
    /// The maximizing `n`.
    pub argmax: i64,
}

/// `n Im s + rA − t√(n² + r²)`, the log of one factor of the bound.
fn bound_exponent(n: i64, r: f64, im_s: f64, a: f64, t: f64) -> f64 {
    n as f64 * im_s + r * a - t * ((n * n) as f64 + r * r).sqrt()
}

/// Norm of `π^r_ℂ(p) W_t(r)^{−1}` on the window `|n| ≤ N`.
///
/// The operator factors as a multiplication by
/// `e^{ir(x cos θ + y sin θ)}` (sampled on `4N + 1` nodes) after the diagonal
/// `e_n ↦ e^{−ins} w(n, r)^{−1} e_n`. Fails when the supremum over `n` is
/// still increasing at the window edge.
pub fn e2_complexified_norm(p: &E2CPoint, t: f64, r: f64, window: usize) -> Result<ComplexifiedNorm> {
    if !(t > 0.0 && r > 0.0) {
        return Err(Error::InvalidParameter("t and r must be > 0".into()));
    }
    let nn = window as i64;
    let s = p.s();
    let a = p.a();
    let exps: Vec<f64> = (-nn..=nn).map(|n| bound_exponent(n, r, s.im, a, t)).collect();
    let (imax, &emax) = exps
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.total_cmp(y.1))
        .expect("nonempty window");
    let argmax = imax as i64 - nn;
    if window > 0 && argmax.abs() == nn {
        let inner = exps[(imax as i64 - argmax.signum()) as usize];
        if emax - inner > EDGE_TOL {
            return Err(Error::WindowTooSmall { window });
        }
    }

    let dim = 2 * window + 1;
    let nodes = 4 * window + 1;
    let mult: Vec<Complex64> = (0..nodes)
        .map(|k| {
            let th = 2.0 * PI * k as f64 / nodes as f64;
            (Complex64::new(0.0, r) * (p.x * th.cos() + p.y * th.sin())).exp()
        })
        .collect();
    // Fourier coefficients c_d = (1/M) Σ_k s(θ_k) e^{−idθ_k}, |d| ≤ 2N.
    let coeff = |d: i64| -> Complex64 {
        let mut acc = numeric::NeumaierC::default();
        for (k, v) in mult.iter().enumerate() {
            let th = 2.0 * PI * k as f64 / nodes as f64;
            acc.add(v * Complex64::from_polar(1.0, -(d as f64) * th));
        }
        acc.value() / nodes as f64
    };
    let coeffs: Vec<Complex64> = (-2 * nn..=2 * nn).map(coeff).collect();
    let mut m = CMatrix::zeros(dim, dim);
    for (jn, n) in (-nn..=nn).enumerate() {
        let diag = (Complex64::new(0.0, -(n as f64)) * s).exp()
            / e2_laplacian_weight(LaplacianWeight::Exp { t }, r, n)?;
        for (im, mm) in (-nn..=nn).enumerate() {
            m[(im, jn)] = coeffs[(mm - n + 2 * nn) as usize] * diag;
        }
    }
    Ok(ComplexifiedNorm {
        bound: emax.exp(),
        truncated_norm: linalg::operator_norm(&m),
        argmax,
    })
}

/// Closed-form membership:
/// `e2lap(t)`: `(Im x)² + (Im y)² + (log|z|)² ≤ t²`;
/// `abelradial(β)` on `H_{X,Y}`: `(Im x)² + (Im y)² ≤ (log β)²` and `|z| = 1`;
/// `abelexp(β₁, β₂)` on `H_{X,Y}`: `|x′| ≤ log β₁`, `|y′| ≤ log β₂` with
/// `(x′, y′) = ρ(z)^{−1}(Im x, Im y)` and `|z| = 1`;
/// `abelexp(β)` on `H_S`: `Im x = Im y = 0` and `1/β ≤ |z| ≤ β`.
pub fn e2_spectrum_member(p: &E2CPoint, d: &WeightDescriptor) -> Result<Verdict> {
    d.validate()?;
    let log_z = p.z.norm().ln();
    let a = p.a();
    let v = match d {
        WeightDescriptor::E2Lap { t } => {
            let radius = (a * a + log_z * log_z).sqrt();
            Verdict::from_margin(t - radius, ZERO_TOL).quantity("radius", radius)
        }
        WeightDescriptor::AbelRadial { beta } => {
            let margin = (beta.ln() - a).min(-log_z.abs());
            Verdict::from_margin(margin, ZERO_TOL).quantity("A", a).quantity("log|z|", log_z)
        }
        WeightDescriptor::AbelExp { betas } if betas.len() == 2 => {
            let phase = p.z / p.z.norm();
            let (c, s) = (phase.re, phase.im);
            let xp = c * p.x.im + s * p.y.im;
            let yp = -s * p.x.im + c * p.y.im;
            let margin = (betas[0].ln() - xp.abs()).min(betas[1].ln() - yp.abs()).min(-log_z.abs());
            Verdict::from_margin(margin, ZERO_TOL).quantity("x_im", xp).quantity("y_im", yp)
        }
        WeightDescriptor::AbelExp { betas } if betas.len() == 1 => {
            let margin = (betas[0].ln() - log_z.abs()).min(-a);
            Verdict::from_margin(margin, ZERO_TOL).quantity("log|z|", log_z)
        }
        other => {
            return Err(Error::Inapplicable {
                family: other.to_string(),
                target: "E(2)".into(),
            })
        }
    };
    Ok(v)
}

/// Numerical classification for `e2lap(t)`: supremum of
/// `n Im s + rA − t√(n² + r²)` over `|n| ≤ n_max` and the `r` grid.
/// Bounded (in) when the supremum is `≤ tol`, out when it exceeds `band`,
/// inconclusive between.
pub fn e2_spectrum_sweep(p: &E2CPoint, t: f64, n_max: i64, r_grid: &[f64], band: f64) -> Verdict {
    let im_s = p.s().im;
    let a = p.a();
    let (sup, n_at, r_at) = r_grid
        .par_iter()
        .map(|&r| {
            let mut best = (f64::NEG_INFINITY, 0i64, r);
            for n in -n_max..=n_max {
                let v = bound_exponent(n, r, im_s, a, t);
                if v > best.0 {
                    best = (v, n, r);
                }
            }
            best
        })
        .reduce(
            || (f64::NEG_INFINITY, 0, 0.0),
            |x, y| if y.0 > x.0 || (y.0 == x.0 && (y.2, y.1) < (x.2, x.1)) { y } else { x },
        );
    let status = if sup <= ZERO_TOL {
        Status::In
    } else if sup > band {
        Status::Out
    } else {
        Status::Inconclusive
    };
    Verdict::new(status, -sup).with_evidence(Evidence::GridSup {
        label: "n Im s + rA - t sqrt(n^2 + r^2)".into(),
        log_sup: sup,
        argmax: vec![n_at as f64, r_at],
        samples: r_grid.len() * (2 * n_max as usize + 1),
    })
}

/// Sparse vector on pair indices `(m, n)`.
pub type PairVector = Vec<((i64, i64), f64)>;

/// The two parts of `Γ(∂λ(−Δ))` on `π^r ⊗ π^s`, truncated to
/// `|m|, |n| ≤ N`: the diagonal `A` with entries `(m+n)² + r² + s²` and the
/// shift part `B = rs(e_{m−1,n+1} + e_{m+1,n−1})`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoproductLaplacian {
    pub r: f64,
    pub s: f64,
    pub window: usize,
}

impl CoproductLaplacian {
    fn nn(&self) -> i64 {
        self.window as i64
    }

    /// Diagonal entry of `A` at `e_{m,n}`.
    pub fn a_entry(&self, m: i64, n: i64) -> f64 {
        ((m + n) * (m + n)) as f64 + self.r * self.r + self.s * self.s
    }

    /// `A e_{m,n}` and `B e_{m,n}` as lists of `((m′, n′), coefficient)`.
    pub fn apply_basis(&self, m: i64, n: i64) -> (PairVector, PairVector) {
        let nn = self.nn();
        let rs = self.r * self.s;
        let inside = |(a, b): (i64, i64)| a.abs() <= nn && b.abs() <= nn;
        let b = [(m - 1, n + 1), (m + 1, n - 1)]
            .into_iter()
            .filter(|&q| inside(q))
            .map(|q| (q, rs))
            .collect();
        (vec![((m, n), self.a_entry(m, n))], b)
    }

    /// `B` restricted to the anti-diagonals `m + n = k`, which it preserves;
    /// each block is a path with edge weight `rs`.
    pub fn b_blocks(&self) -> Vec<(i64, SymTridiagonal)> {
        let nn = self.nn();
        let rs = self.r * self.s;
        (-2 * nn..=2 * nn)
            .map(|k| {
                let len = (2 * nn + 1 - k.abs()) as usize;
                (k, SymTridiagonal::new(vec![0.0; len], vec![rs; len - 1]))
            })
            .collect()
    }

    /// Operator norm of the truncated `B`.
    pub fn b_norm(&self) -> f64 {
        self.b_blocks().iter().map(|(_, t)| t.norm()).fold(0.0, f64::max)
    }

    /// Dense `B` on the pair window (small windows only).
    pub fn b_dense(&self) -> CMatrix {
        let nn = self.nn();
        let side = 2 * self.window + 1;
        let idx = |m: i64, n: i64| ((m + nn) as usize) * side + (n + nn) as usize;
        let mut b = CMatrix::zeros(side * side, side * side);
        for m in -nn..=nn {
            for n in -nn..=nn {
                for ((m2, n2), v) in self.apply_basis(m, n).1 {
                    b[(idx(m2, n2), idx(m, n))] = Complex64::new(v, 0.0);
                }
            }
        }
        b
    }
}

pub fn e2_coproduct_laplacian(r: f64, s: f64, window: usize) -> Result<CoproductLaplacian> {
    if !(r > 0.0 && s > 0.0) {
        return Err(Error::InvalidParameter("r and s must be > 0".into()));
    }
    Ok(CoproductLaplacian { r, s, window })
}

/// Checks `sup_{|r−s| ≤ a ≤ r+s} w(a) ≤ w(r) w(s)` on each sample, with the
/// supremum taken over `resolution` evenly spaced points (endpoints
/// included, `a = 0` excluded).
pub fn e2_radial_submult(wfun: &dyn Fn(f64) -> f64, samples: &[(f64, f64)], resolution: usize) -> Report {
    let mut report = Report::new();
    let res = resolution.max(2);
    for &(r, s) in samples {
        let lo = (r - s).abs();
        let sup = numeric::linspace(lo, r + s, res)
            .into_iter()
            .filter(|&a| a > 0.0)
            .map(|a| wfun(a).ln())
            .fold(f64::NEG_INFINITY, f64::max);
        report.check(|| format!("(r,s) = ({r},{s})"), sup, wfun(r).ln() + wfun(s).ln(), LOG_TOL);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exp_examples() {
        let p = e2_exp(0.0, 1.0, 2.0);
        assert_eq!((p.x, p.y, p.z), (c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)));
        let p = e2_exp(PI, 0.0, 0.0);
        assert!((p.z - c(-1.0, 0.0)).norm() < 1e-15 && p.x.norm() == 0.0);
        let p = e2_exp(1e-8, 1.0, 0.0);
        assert!((p.x - c(1.0, 0.0)).norm() < 1e-7 && p.y.norm() < 1e-7 && (p.z - c(1.0, 0.0)).norm() < 1e-7);
        // series branch agrees with the closed form near the switch
        let (a, b) = (e2_exp(0.99e-4, 0.3, -0.7), e2_exp(1.01e-4, 0.3, -0.7));
        assert!((a.x - b.x).norm() < 1e-5 && (a.y - b.y).norm() < 1e-5);
    }

    #[test]
    fn exp_is_a_one_parameter_group_in_s() {
        // exp(sS) exp(s′S) = exp((s+s′)S) and exp(xX) exp(yY) = (x, y, 1)
        let p = e2_exp(0.4, 0.0, 0.0).mul(&e2_exp(0.9, 0.0, 0.0));
        assert!((p.z - e2_exp(1.3, 0.0, 0.0).z).norm() < 1e-15);
        let q = e2_exp(0.0, 0.5, 0.0).mul(&e2_exp(0.0, 0.0, 0.25));
        assert_eq!((q.x, q.y), (c(0.5, 0.0), c(0.25, 0.0)));
    }

    #[test]
    fn lie_op_examples() {
        let s = e2_lie_op(Generator::S, 1.0, 3).unwrap();
        for n in -3..=3i64 {
            assert_eq!(s.matrix[(s.index(n), s.index(n))], c(0.0, -(n as f64)));
        }
        let x = e2_lie_op(Generator::X, 2.0, 3).unwrap();
        let v = x.apply_basis(0);
        assert_eq!((v[x.index(-1)], v[x.index(1)]), (c(0.0, 1.0), c(0.0, 1.0)));
        assert_eq!(v.iter().filter(|z| z.norm() > 0.0).count(), 2);
        let y = e2_lie_op(Generator::Y, 2.0, 3).unwrap();
        let v = y.apply_basis(0);
        assert_eq!((v[y.index(-1)], v[y.index(1)]), (c(-1.0, 0.0), c(1.0, 0.0)));
    }

    #[test]
    fn laplacian_weight_examples() {
        let v = e2_laplacian_weight(LaplacianWeight::Exp { t: 1.0 }, 4.0, 3).unwrap();
        assert!((v - 5f64.exp()).abs() < 1e-10);
        assert_eq!(e2_laplacian_weight(LaplacianWeight::Poly { m: 1 }, 1.0, 0).unwrap(), 2.0);
        let v = e2_laplacian_weight(LaplacianWeight::Exp { t: 2.0 }, 1e-9, 0).unwrap();
        assert!((v - 1.0).abs() < 1e-8);
    }

    #[test]
    fn complexified_norm_examples() {
        let p = E2CPoint::new(c(0.3, 0.0), c(-1.0, 0.0), c(0.0, 1.0)).unwrap();
        let out = e2_complexified_norm(&p, 1.0, 0.7, 10).unwrap();
        assert!((out.bound - (-0.7f64).exp()).abs() < 1e-14);
        assert!(out.truncated_norm <= out.bound * (1.0 + 1e-12));

        let t: f64 = 1.0;
        let p = E2CPoint::new(c(0.0, 0.0), c(0.0, 0.0), c((-t).exp(), 0.0)).unwrap();
        let out = e2_complexified_norm(&p, t, 0.05, 40).unwrap();
        assert!(out.bound <= 1.0 && out.bound > 0.99);

        let p = E2CPoint::new(c(0.0, 0.0), c(0.0, 0.0), c((-1.5f64).exp(), 0.0)).unwrap();
        assert!(matches!(e2_complexified_norm(&p, 1.0, 0.5, 20), Err(Error::WindowTooSmall { .. })));
    }

    #[test]
    fn spectrum_examples() {
        let lap = WeightDescriptor::E2Lap { t: 1.0 };
        let p = E2CPoint::new(c(0.0, 0.5), c(0.0, 0.5), c(0.5f64.exp(), 0.0)).unwrap();
        assert_eq!(e2_spectrum_member(&p, &lap).unwrap().status, Status::In);
        let p = E2CPoint::new(c(0.0, 1.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(e2_spectrum_member(&p, &lap).unwrap().status, Status::In);
        let p = E2CPoint::new(c(0.0, 0.0), c(0.0, 0.0), c(3.0, 0.0)).unwrap();
        let sub_s = WeightDescriptor::AbelExp { betas: vec![2.0] };
        assert_eq!(e2_spectrum_member(&p, &sub_s).unwrap().status, Status::Out);
        let radial = WeightDescriptor::AbelRadial { beta: 2.0 };
        let p = E2CPoint::new(c(1.0, 0.4), c(0.0, 0.4), c(0.0, 1.0)).unwrap();
        assert_eq!(e2_spectrum_member(&p, &radial).unwrap().status, Status::In);
        let p = E2CPoint::new(c(1.0, 0.4), c(0.0, 0.4), c(0.0, 1.1)).unwrap();
        assert_eq!(e2_spectrum_member(&p, &radial).unwrap().status, Status::Out);
        assert!(e2_spectrum_member(&p, &WeightDescriptor::Dim { alpha: 1.0 }).is_err());
    }

    #[test]
    fn box_weight_uses_rotated_imaginary_part() {
        // g = rotation by π/2, X′ = (0.5, 0): Im(x, y) = ρ(i)(0.5, 0) = (0, 0.5)
        let w = WeightDescriptor::AbelExp { betas: vec![1.8, 1.2] };
        let p = E2CPoint::new(c(0.0, 0.0), c(0.0, 0.5), c(0.0, 1.0)).unwrap();
        assert_eq!(e2_spectrum_member(&p, &w).unwrap().status, Status::In);
        let p = E2CPoint::new(c(0.0, 0.0), c(0.0, 0.5), c(1.0, 0.0)).unwrap();
        assert_eq!(e2_spectrum_member(&p, &w).unwrap().status, Status::Out);
    }

    #[test]
    fn coproduct_examples() {
        let (r, s) = (1.5, 0.5);
        let cl = e2_coproduct_laplacian(r, s, 4).unwrap();
        let (a, b) = cl.apply_basis(0, 0);
        assert_eq!(a, vec![((0, 0), r * r + s * s)]);
        assert_eq!(b, vec![((-1, 1), r * s), ((1, -1), r * s)]);
        let dense = linalg::operator_norm(&cl.b_dense());
        assert!((dense - cl.b_norm()).abs() < 1e-12);
        assert!(cl.b_norm() <= 2.0 * r * s);
        let big = e2_coproduct_laplacian(r, s, 100).unwrap();
        assert!(big.b_norm() >= 1.99 * r * s);
    }

    #[test]
    fn radial_submult_examples() {
        let samples: Vec<(f64, f64)> = (1..8).flat_map(|i| (1..8).map(move |j| (i as f64 * 0.7, j as f64 * 0.3))).collect();
        assert!(e2_radial_submult(&|a| 1.7f64.powf(a), &samples, 101).passed);
        let r = e2_radial_submult(&|a| 2f64.powf(a * a), &[(1.0, 1.0)], 101);
        assert!(!r.passed);
        assert!(e2_radial_submult(&|_| 1.5, &samples, 11).passed);
        assert!(!e2_radial_submult(&|_| 0.5, &samples, 11).passed);
    }
}
