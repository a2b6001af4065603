//! The Heisenberg group `ℍ` in coordinates `(y, z, x)`, its Schrödinger
//! representations `π^a`, and the reduced Heisenberg group.

mod fourier;
mod reduced;
mod spectrum;

pub use fourier::{
    heis_fourier, heis_kernel, FourierMethod, GaussianFactor, SeparableTerm, TestFunction, TruncatedOperator,
};
pub use reduced::{rheis_central_weight_check, rheis_plancherel_atom, rheis_tensor, RHeisLabel};
pub use spectrum::{heis_spectrum_member, heis_spectrum_member_grid, CartanForm, HeisGrid};

use crate::error::{Error, Result};
use crate::weights::WeightFunction;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A point of `ℍ_ℂ ≅ ℂ³`; real coordinates give `ℍ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeisPoint {
    pub y: Complex64,
    pub z: Complex64,
    pub x: Complex64,
}

impl HeisPoint {
    pub fn new(y: Complex64, z: Complex64, x: Complex64) -> Self {
        Self { y, z, x }
    }

    pub fn real(y: f64, z: f64, x: f64) -> Self {
        Self::new(y.into(), z.into(), x.into())
    }

    pub fn identity() -> Self {
        Self::real(0.0, 0.0, 0.0)
    }

    /// `(−y, −z + xy, −x)`.
    pub fn inverse(&self) -> Self {
        Self::new(-self.y, -self.z + self.x * self.y, -self.x)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.y - other.y)
            .norm()
            .max((self.z - other.z).norm())
            .max((self.x - other.x).norm())
    }
}

/// `(y, z, x)·(y′, z′, x′) = (y + y′, z + z′ + x y′, x + x′)`.
pub fn heis_mul(g: &HeisPoint, h: &HeisPoint) -> HeisPoint {
    HeisPoint::new(g.y + h.y, g.z + h.z + g.x * h.y, g.x + h.x)
}

/// `exp(xX + yY + zZ) = (y, z + xy/2, x)`.
pub fn heis_exp(x: f64, y: f64, z: f64) -> HeisPoint {
    heis_exp_complex(x.into(), y.into(), z.into())
}

/// Holomorphic extension of [`heis_exp`].
pub fn heis_exp_complex(x: Complex64, y: Complex64, z: Complex64) -> HeisPoint {
    HeisPoint::new(y, z + x * y * 0.5, x)
}

/// Symbol of the weight operator on `π^a`: `W(a)ξ(t) = w(at, −a) ξ(t)`.
pub fn heis_weight_symbol(wfun: &dyn WeightFunction, a: f64, t: f64) -> Result<f64> {
    if a == 0.0 {
        return Err(Error::InvalidParameter("a must be nonzero".into()));
    }
    Ok(wfun.value(&[a * t, -a]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{AbelianWeight, FnWeight};

    #[test]
    fn product_examples() {
        let g = HeisPoint::real(1.5, -2.0, 0.25);
        assert_eq!(heis_mul(&HeisPoint::identity(), &g), g);
        assert_eq!(heis_mul(&HeisPoint::real(1.0, 0.0, 0.0), &HeisPoint::real(0.0, 0.0, 1.0)), HeisPoint::real(1.0, 0.0, 1.0));
        assert_eq!(heis_mul(&HeisPoint::real(0.0, 0.0, 1.0), &HeisPoint::real(1.0, 0.0, 0.0)), HeisPoint::real(1.0, 1.0, 1.0));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(heis_exp(0.0, 0.0, 0.0), HeisPoint::identity());
        assert_eq!(heis_exp(2.0, 3.0, 0.0), HeisPoint::real(3.0, 3.0, 2.0));
        assert_eq!(heis_exp(0.0, 0.0, 5.0), HeisPoint::real(0.0, 5.0, 0.0));
    }

    #[test]
    fn weight_symbol_examples() {
        let (b1, b2): (f64, f64) = (1.3, 2.1);
        let w = AbelianWeight::Exponential { log_betas: vec![b1.ln(), b2.ln()] };
        assert!((heis_weight_symbol(&w, 1.0, 2.0).unwrap() - b1 * b1 * b2).abs() < 1e-12);
        assert_eq!(heis_weight_symbol(&FnWeight(|_: &[f64]| 1.0), 0.7, 3.0).unwrap(), 1.0);
        let r = AbelianWeight::Radial { log_beta: b2.ln() };
        assert!((heis_weight_symbol(&r, 1.0, 0.0).unwrap() - b2).abs() < 1e-12);
        assert!(heis_weight_symbol(&r, 0.0, 1.0).is_err());
    }
}
