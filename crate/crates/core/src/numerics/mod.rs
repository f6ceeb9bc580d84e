//! Quadrature, scalar kernels and the gamma function.

mod gamma;
pub mod kernels;
mod quadrature;

pub use gamma::{gamma, log_gamma, reciprocal_gamma};
pub use kernels::bracket_kernel;
pub use quadrature::{exp_sinh, integrate_semi_infinite, Kernel, QuadratureProblem, QuadratureResult};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Accuracy targets and refinement budget shared by every numeric routine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Number of step-halving refinements after the initial level.
    pub max_levels: u32,
    pub max_evals: u64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            rel_tol: 1e-13,
            abs_tol: 1e-300,
            max_levels: 12,
            max_evals: 2_000_000,
        }
    }
}

impl Tolerances {
    pub fn new(rel_tol: f64, abs_tol: f64, max_levels: u32, max_evals: u64) -> Result<Self> {
        let tol = Tolerances {
            rel_tol,
            abs_tol,
            max_levels,
            max_evals,
        };
        tol.validate()?;
        Ok(tol)
    }

    /// Default budget with a different relative target.
    pub fn with_rel_tol(rel_tol: f64) -> Result<Self> {
        let tol = Tolerances {
            rel_tol,
            ..Tolerances::default()
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::domain(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::domain(format!(
                "abs_tol must be nonnegative, got {}",
                self.abs_tol
            )));
        }
        if self.max_levels < 1 {
            return Err(Error::domain("max_levels must be at least 1"));
        }
        if self.max_evals < 1 {
            return Err(Error::domain("max_evals must be at least 1"));
        }
        Ok(())
    }

    /// The absolute error that counts as converged for a value of magnitude `scale`.
    pub fn target(&self, scale: f64) -> f64 {
        (self.rel_tol * scale).max(self.abs_tol)
    }
}
