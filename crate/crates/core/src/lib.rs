//! Numerical toolkit for spectra of Beurling–Fourier algebras.
//!
//! The crate covers four families of groups:
//!
//! * SU(n): tableau bases, the diagonal torus action and complexified norms
//!   ([`repsu`]), central and torus-extended weights ([`weights`]) and
//!   spectrum oracles ([`speccompact`]);
//! * the Heisenberg group and its reduced quotient ([`heis`]);
//! * the Euclidean motion group E(2) ([`emotion`]);
//! * abelian weights on `ℝⁿ`/`ℤⁿ`: quasianalyticity and Shilov radii
//!   ([`regularity`]).
//!
//! Membership oracles return a [`report::Verdict`]; inequality sweeps return a
//! [`report::Report`].

// `!(x > 0.0)` checks are written that way to reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod emotion;
pub mod error;
pub mod heis;
pub mod linalg;
pub mod numeric;
pub mod quadrature;
pub mod regularity;
pub mod report;
pub mod repsu;
pub mod speccompact;
pub mod weights;

pub use error::{Error, Result};
pub use report::{Report, Status, Verdict};

/// Crate version embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
