//! Hurwitz zeta evaluation through Hermite's integral.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`] holds the exp-sinh quadrature engine for `[0, ∞)`, the
//!   cancellation-safe scalar kernels and the complex gamma function.
//! * [`identities`] turns each integral identity used on the way to Hermite's
//!   formula into a (quadrature, closed form) pair with a residual report.
//! * [`hurwitz`] provides the evaluators themselves (Hermite integral, the
//!   Bose-bracket integral, Euler-Maclaurin series) plus the closed-form
//!   oracles at nonpositive integers.
//!
//! All functions are pure; nothing here holds global state.
//!
//! ```
//! use hurwitz_core::hurwitz::zeta_hermite;
//! use hurwitz_core::{Complex64, Tolerances};
//!
//! let z = zeta_hermite(Complex64::new(-1.0, 0.0), 1.0, &Tolerances::default()).unwrap();
//! assert!(z.converged);
//! assert!((z.value.re + 1.0 / 12.0).abs() < 1e-12);
//! ```

// Reference constants are quoted at full published precision, and domain
// checks are written `!(x > a)` so that NaN is rejected.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod hurwitz;
pub mod identities;
pub mod numerics;

pub use error::{Error, Result};
pub use hurwitz::{Method, ZetaArgs, ZetaResult};
pub use identities::{Identity, IdentityArgs, IdentityReport};

pub use numerics::{QuadratureProblem, QuadratureResult, Tolerances};

pub use num_complex::Complex64;
