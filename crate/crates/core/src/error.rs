//! Error type shared by every computation module.

use thiserror::Error;

/// Failures raised by the library. Violations of checked inequalities are not
/// errors; they are collected in a [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),

    #[error("instance too large: {count} tableaux exceeds the cap of {cap}")]
    TooLarge { count: u128, cap: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("weight family `{family}` does not apply to {target}")]
    Inapplicable { family: String, target: String },

    #[error("matrix is singular (smallest singular value {0:e})")]
    Singular(f64),

    #[error("|det| = {0} is not 1 within tolerance")]
    Determinant(f64),

    #[error("expected a diagonal matrix")]
    NotDiagonal,

    #[error("estimated quadrature error {estimate:e} exceeds tolerance {tolerance:e}")]
    GridTooCoarse { estimate: f64, tolerance: f64 },

    #[error("window too small: the supremum is not attained inside |n| <= {window}")]
    WindowTooSmall { window: usize },

    #[error("growth bound violated at {point:?}: log w = {log_value}, log bound = {log_bound}")]
    GrowthBoundViolated {
        point: Vec<f64>,
        log_value: f64,
        log_bound: f64,
    },

    #[error("descriptor parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
