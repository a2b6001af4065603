//! The reduced Heisenberg group `ℍ_r = ℍ/ℤZ`: fusion rules of its dual,
//! central-weight inequalities and Plancherel atoms.

use crate::error::{Error, Result};
use crate::report::Report;
use crate::weights::LOG_TOL;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Irreducible (or aggregate) representation of the reduced Heisenberg group.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum RHeisLabel {
    /// `π^n`, `n ≠ 0`.
    Discrete(i64),
    /// The character `χ_{r,s}(y, z, x) = e^{i(ry + sx)}`.
    Character { r: f64, s: f64 },
    /// `π⁰`, the direct integral of all characters.
    Aggregate,
}

impl fmt::Display for RHeisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Discrete(n) => write!(f, "pi^{n}"),
            Self::Character { r, s } => write!(f, "chi_{{{r},{s}}}"),
            Self::Aggregate => write!(f, "pi^0"),
        }
    }
}

impl RHeisLabel {
    fn validate(&self) -> Result<()> {
        match self {
            Self::Discrete(0) => Err(Error::InvalidParameter("discrete label must be nonzero".into())),
            Self::Character { r, s } if !(r.is_finite() && s.is_finite()) => {
                Err(Error::InvalidParameter("character parameters must be finite".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Fusion rules:
/// `π^n ⊗ π^m ≅ π^{n+m}` (`n ≠ −m`), `π^n ⊗ π^{−n} ≅ π⁰`,
/// `π^n ⊗ χ ≅ π^n`, `χ_{r,s} ⊗ χ_{r′,s′} = χ_{r+r′,s+s′}`.
///
/// `π⁰` is treated as the integral of characters: `π⁰ ⊗ π^n` is a multiple of
/// `π^n` and `π⁰ ⊗ χ`, `π⁰ ⊗ π⁰` are multiples of `π⁰`.
pub fn rheis_tensor(l1: &RHeisLabel, l2: &RHeisLabel) -> Result<RHeisLabel> {
    use RHeisLabel::*;
    l1.validate()?;
    l2.validate()?;
    Ok(match (*l1, *l2) {
        (Discrete(n), Discrete(m)) => {
            if n + m == 0 {
                Aggregate
            } else {
                Discrete(n + m)
            }
        }
        (Discrete(n), _) | (_, Discrete(n)) => Discrete(n),
        (Character { r, s }, Character { r: r2, s: s2 }) => Character { r: r + r2, s: s + s2 },
        _ => Aggregate,
    })
}

/// Checks, for `0 < |n|, |m| ≤ window` and the `(r, s)` samples:
/// `w(n+m) ≤ w(n)w(m)` (`n ≠ −m`), `sup w(r,s) ≤ w(n)w(−n)`,
/// `w(n) ≤ w(r,s)w(n)` and `w(r+r′, s+s′) ≤ w(r,s)w(r′,s′)`.
/// `w(0)` is the sampled supremum of `w(r, s)`.
pub fn rheis_central_weight_check(
    wz: &dyn Fn(i64) -> f64,
    wc: &dyn Fn(f64, f64) -> f64,
    window: i64,
    rs_samples: &[(f64, f64)],
) -> Report {
    let mut report = Report::new();
    let lz = |n: i64| wz(n).ln();
    let lc = |r: f64, s: f64| wc(r, s).ln();
    let log_sup = rs_samples.iter().map(|&(r, s)| lc(r, s)).fold(f64::NEG_INFINITY, f64::max);
    let nonzero: Vec<i64> = (-window..=window).filter(|&n| n != 0).collect();
    for &n in &nonzero {
        for &m in &nonzero {
            if n + m != 0 {
                report.check(|| format!("w({}) <= w({n})w({m})", n + m), lz(n + m), lz(n) + lz(m), LOG_TOL);
            }
        }
        if !rs_samples.is_empty() {
            report.check(|| format!("sup w(r,s) <= w({n})w({})", -n), log_sup, lz(n) + lz(-n), LOG_TOL);
        }
        for &(r, s) in rs_samples {
            report.check(|| format!("w({n}) <= w({r},{s})w({n})"), lz(n), lc(r, s) + lz(n), LOG_TOL);
        }
    }
    for &(r, s) in rs_samples {
        for &(r2, s2) in rs_samples {
            report.check(
                || format!("w({},{}) <= w({r},{s})w({r2},{s2})", r + r2, s + s2),
                lc(r + r2, s + s2),
                lc(r, s) + lc(r2, s2),
                LOG_TOL,
            );
        }
    }
    report.notes.push(format!("w(0) := sup w(r,s) = {}", log_sup.exp()));
    report
}

/// Plancherel mass of `{π^n}`: `|n| / (2π)`.
pub fn rheis_plancherel_atom(n: i64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("the atom is defined for n != 0".into()));
    }
    Ok(n.unsigned_abs() as f64 / (2.0 * std::f64::consts::PI))
}
