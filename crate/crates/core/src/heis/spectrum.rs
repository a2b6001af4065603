//! Spectrum membership for weights extended from the abelian subgroup
//! `H_{Y,Z}` of `ℍ`.

use super::HeisPoint;
use crate::report::{Evidence, Status, Verdict};
use crate::weights::{AbelianWeight, WeightFunction};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Tolerance for treating an imaginary part as zero.
const ZERO_TOL: f64 = 1e-12;

/// Sample grid over `(a, b) ∈ [−radius, radius]²` for the cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeisGrid {
    pub radius: f64,
    pub steps: usize,
    /// Half-width of the inconclusive band on the fitted growth rate.
    pub band: f64,
}

impl Default for HeisGrid {
    fn default() -> Self {
        Self {
            radius: 50.0,
            steps: 201,
            band: 1e-3,
        }
    }
}

/// `p = g·exp(i(y′Y + z′Z))` with `g` real.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CartanForm {
    pub g: HeisPoint,
    pub y_im: f64,
    pub z_im: f64,
}

impl CartanForm {
    /// `None` when `Im x ≠ 0`, i.e. the imaginary direction leaves `𝔥`.
    pub fn of(p: &HeisPoint) -> Option<Self> {
        if p.x.im.abs() > ZERO_TOL {
            return None;
        }
        let (x0, y_im) = (p.x.re, p.y.im);
        let z_im = p.z.im - x0 * y_im;
        Some(Self {
            g: HeisPoint::real(p.y.re, p.z.re, x0),
            y_im,
            z_im,
        })
    }
}

fn outside_h() -> Verdict {
    Verdict::new(Status::Out, f64::NEG_INFINITY).with_reason("direction outside 𝔥")
}

/// Growth of `log Φ(a,b) = y′a + z′b − log w(a,b)` between the inner half and
/// the outer shell of the grid, per unit radius.
fn grid_check(y: f64, z: f64, w: &dyn WeightFunction, grid: &HeisGrid) -> (Status, f64, Evidence) {
    let axis = crate::numeric::linspace(-grid.radius, grid.radius, grid.steps.max(3));
    let half = grid.radius / 2.0;
    let (inner, outer, arg) = axis
        .par_iter()
        .map(|&a| {
            let mut inner = f64::NEG_INFINITY;
            let mut outer = (f64::NEG_INFINITY, [0.0, 0.0]);
            for &b in &axis {
                let v = y * a + z * b - w.log_value(&[a, b]);
                if a.abs().max(b.abs()) <= half {
                    inner = inner.max(v);
                } else if v > outer.0 {
                    outer = (v, [a, b]);
                }
            }
            (inner, outer.0, outer.1)
        })
        .reduce(
            || (f64::NEG_INFINITY, f64::NEG_INFINITY, [0.0, 0.0]),
            |l, r| {
                let outer = if r.1 > l.1 || (r.1 == l.1 && r.2 < l.2) { (r.1, r.2) } else { (l.1, l.2) };
                (l.0.max(r.0), outer.0, outer.1)
            },
        );
    let rate = (outer - inner) / half;
    let status = if rate > grid.band {
        Status::Out
    } else if rate < -grid.band {
        Status::In
    } else {
        Status::Inconclusive
    };
    let evidence = Evidence::GridSup {
        label: "log Phi on the outer shell".into(),
        log_sup: outer.max(inner),
        argmax: arg.to_vec(),
        samples: axis.len() * axis.len(),
    };
    (status, rate, evidence)
}

/// Membership of `p` in the spectrum for a built-in abelian weight on
/// `H_{Y,Z}` (coordinates `(a, b)`), decided by closed form:
/// box `|y′| ≤ log β₁, |z′| ≤ log β₂`; radial `y′² + z′² ≤ (log β)²`;
/// polynomial and Shilov weights only admit `y′ = z′ = 0`.
/// The grid supremum is attached as a cross-check.
pub fn heis_spectrum_member(p: &HeisPoint, w: &AbelianWeight, grid: &HeisGrid) -> Verdict {
    let Some(c) = CartanForm::of(p) else {
        return outside_h();
    };
    let (y, z) = (c.y_im, c.z_im);
    let margin = match w {
        AbelianWeight::Exponential { log_betas } => {
            let b1 = log_betas.first().copied().unwrap_or(0.0);
            let b2 = log_betas.get(1).copied().unwrap_or(0.0);
            (b1 - y.abs()).min(b2 - z.abs())
        }
        AbelianWeight::Radial { log_beta } => log_beta - y.hypot(z),
        AbelianWeight::Polynomial { .. } | AbelianWeight::Shilov => -y.hypot(z),
    };
    let (gstatus, rate, ev) = grid_check(y, z, w, grid);
    let mut v = Verdict::from_margin(margin, ZERO_TOL)
        .quantity("y_im", y)
        .quantity("z_im", z)
        .quantity("grid_growth_rate", rate)
        .with_evidence(ev);
    if gstatus != Status::Inconclusive && gstatus != v.status {
        v = v.with_reason(format!("grid cross-check reports {gstatus} on the finite window"));
    }
    v
}

/// Grid-only membership for an arbitrary weight function on `H_{Y,Z}`.
pub fn heis_spectrum_member_grid(p: &HeisPoint, w: &dyn WeightFunction, grid: &HeisGrid) -> Verdict {
    let Some(c) = CartanForm::of(p) else {
        return outside_h();
    };
    let (status, rate, ev) = grid_check(c.y_im, c.z_im, w, grid);
    let mut v = Verdict::new(status, -rate).quantity("grid_growth_rate", rate).with_evidence(ev);
    if status == Status::Inconclusive {
        v = v.with_reason("grid growth rate within the inconclusive band");
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn point(y_im: f64, z_im: f64) -> HeisPoint {
        HeisPoint::new(Complex64::new(0.3, y_im), Complex64::new(-1.0, z_im), Complex64::new(0.0, 0.0))
    }

    #[test]
    fn box_weight_examples() {
        let w = AbelianWeight::Exponential { log_betas: vec![2.0, 1.0] };
        let g = HeisGrid::default();
        assert_eq!(heis_spectrum_member(&point(1.5, 0.5), &w, &g).status, Status::In);
        assert_eq!(heis_spectrum_member(&point(2.5, 0.0), &w, &g).status, Status::Out);
        let r = AbelianWeight::Radial { log_beta: 1.0 };
        assert_eq!(heis_spectrum_member(&point(0.0, 0.0), &r, &g).status, Status::In);
    }

    #[test]
    fn cartan_form_uses_real_x() {
        // g = (0, 0, 2), X' = (1, 0.5): p = (i, 0.5i + 2i, 2)
        let p = HeisPoint::new(Complex64::new(0.0, 1.0), Complex64::new(0.0, 2.5), Complex64::new(2.0, 0.0));
        let c = CartanForm::of(&p).unwrap();
        assert!((c.y_im - 1.0).abs() < 1e-15 && (c.z_im - 0.5).abs() < 1e-15);
    }

    #[test]
    fn imaginary_x_is_out() {
        let p = HeisPoint::new(0.0.into(), 0.0.into(), Complex64::new(0.0, 0.1));
        let v = heis_spectrum_member(&p, &AbelianWeight::Radial { log_beta: 5.0 }, &HeisGrid::default());
        assert_eq!(v.status, Status::Out);
        assert_eq!(v.reason.as_deref(), Some("direction outside 𝔥"));
    }

    #[test]
    fn grid_only_agrees_away_from_boundary() {
        let w = AbelianWeight::Radial { log_beta: 1.0 };
        let g = HeisGrid::default();
        assert_eq!(heis_spectrum_member_grid(&point(0.3, 0.4), &w, &g).status, Status::In);
        assert_eq!(heis_spectrum_member_grid(&point(0.9, 0.9), &w, &g).status, Status::Out);
        assert_eq!(heis_spectrum_member_grid(&point(0.6, 0.8), &w, &g).status, Status::Inconclusive);
    }
}
