//! The integral identities behind Hermite's formula, each as a quadrature
//! left-hand side, a closed-form right-hand side and a residual report.
//!
//! | identity   | left-hand side                                  | right-hand side                      |
//! |------------|-------------------------------------------------|--------------------------------------|
//! | `chen`     | `(2/Γ(s)) ∫ e^{-uy²} y^{2s-1} sin(xy²) dy`      | `sin(s·atan(x/u)) / (u²+x²)^{s/2}`   |
//! | `legendre` | `∫ sin(xt)/(e^{2πx}-1) dx`                      | `[1/(e^t-1) - 1/t + 1/2] / 2`        |
//! | `arctan`   | `∫ e^{-uy} sin(xy)/y dy`                        | `atan(x/u)`                          |
//! | `limit`    | `Γ(s)·sin(s·atan(x/u))` at a small probe `s`    | `atan(x/u)`                          |

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    self, bracket_kernel, gamma, integrate_semi_infinite, reciprocal_gamma, Kernel, QuadratureProblem,
    QuadratureResult, Tolerances,
};

/// Absolute residual floor for the sine-transform identity.
pub const CHEN_FLOOR: f64 = 1e-10;
/// Absolute residual floor for the Legendre and arctangent identities.
pub const LEGENDRE_FLOOR: f64 = 1e-12;
pub const ARCTAN_FLOOR: f64 = 1e-12;

/// Largest `|Im s|` accepted by the sine-transform identity.
pub const CHEN_MAX_IMAG: f64 = 10.0;

/// Denominator floor for relative residuals.
const TINY: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Chen,
    Legendre,
    Arctan,
    Limit,
}

impl Identity {
    pub const ALL: [Identity; 4] = [Identity::Chen, Identity::Legendre, Identity::Arctan, Identity::Limit];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Chen => "chen",
            Identity::Legendre => "legendre",
            Identity::Arctan => "arctan",
            Identity::Limit => "limit",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Parameters shared by the identities. Each identity reads only the fields
/// it needs; for `limit`, `s.re` is the probe value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityArgs {
    pub s: Complex64,
    pub u: f64,
    pub x: f64,
    pub t: f64,
}

impl Default for IdentityArgs {
    fn default() -> Self {
        IdentityArgs {
            s: Complex64::new(1.0, 0.0),
            u: 1.0,
            x: 1.0,
            t: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub args: IdentityArgs,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    /// The residual bound this row was judged against.
    pub threshold: f64,
    /// Whether every quadrature behind `lhs` and `rhs` converged.
    pub converged: bool,
    pub n_evals: u64,
    pub passed: bool,
}

impl IdentityReport {
    /// Build a report; the row passes when every quadrature converged and
    /// `|lhs - rhs| ≤ max(rel_tol·|rhs|, floor)`.
    #[allow(clippy::too_many_arguments)]
    pub fn judge(
        identity: impl Into<String>,
        args: IdentityArgs,
        lhs: Complex64,
        rhs: Complex64,
        rel_tol: f64,
        floor: f64,
        converged: bool,
        n_evals: u64,
    ) -> Self {
        let abs_residual = (lhs - rhs).norm();
        let rel_residual = abs_residual / rhs.norm().max(TINY);
        let threshold = (rel_tol * rhs.norm()).max(floor);
        IdentityReport {
            identity: identity.into(),
            args,
            lhs,
            rhs,
            abs_residual,
            rel_residual,
            threshold,
            converged,
            n_evals,
            passed: converged && abs_residual <= threshold,
        }
    }
}

fn check_u(u: f64) -> Result<()> {
    if u > 0.0 && u.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("u must be positive and finite, got {u}")))
    }
}

fn check_x(x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("x must be nonnegative and finite, got {x}")))
    }
}

/// `sin(s·atan(x/u)) / (u²+x²)^{s/2}`.
pub fn chen_rhs(s: Complex64, u: f64, x: f64) -> Result<Complex64> {
    check_u(u)?;
    check_x(x)?;
    let theta = (x / u).atan();
    Ok((s * theta).sin() * numerics::kernels::real_pow(u * u + x * x, -0.5 * s))
}

/// `(2/Γ(s)) ∫₀^∞ e^{-uy²} y^{2s-1} sin(xy²) dy`, integrated in `w = y²`.
pub fn chen_lhs(s: Complex64, u: f64, x: f64, tol: &Tolerances) -> Result<QuadratureResult> {
    check_u(u)?;
    check_x(x)?;
    if !(s.re > 0.0) || s.im.abs() > CHEN_MAX_IMAG {
        return Err(Error::domain(format!(
            "sine transform needs Re s > 0 and |Im s| <= {CHEN_MAX_IMAG}, got {s}"
        )));
    }
    let problem = QuadratureProblem::new(Kernel::ChenSubstituted { s, u, x })?;
    let raw = integrate_semi_infinite(&problem, tol)?;
    // 2 ∫ dy over y equals ∫ dw over w = y²
    let scale = reciprocal_gamma(s);
    Ok(QuadratureResult {
        value: raw.value * scale,
        err_estimate: raw.err_estimate * scale.norm(),
        ..raw
    })
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("t must be positive and finite, got {t}")))
    }
}

/// `[1/(e^t-1) - 1/t + 1/2] / 2`.
pub fn legendre_rhs(t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(0.5 * bracket_kernel(t)?)
}

/// `∫₀^∞ sin(xt)/(e^{2πx}-1) dx`.
pub fn legendre_lhs(t: f64, tol: &Tolerances) -> Result<QuadratureResult> {
    check_t(t)?;
    integrate_semi_infinite(&QuadratureProblem::new(Kernel::Legendre { t })?, tol)
}

/// `∫₀^∞ e^{-uy} sin(xy)/y dy`, which equals `atan(x/u)`.
pub fn arctan_integral(x: f64, u: f64, tol: &Tolerances) -> Result<QuadratureResult> {
    check_u(u)?;
    check_x(x)?;
    integrate_semi_infinite(&QuadratureProblem::new(Kernel::ArctanLaplace { x, u })?, tol)
}

/// `|Γ(s)·sin(s·atan(x/u)) - atan(x/u)|` at `s = s_probe`, which is
/// `O(s_probe)` since the product equals `atan(x/u)·Γ(1+s)·sinc(s·atan(x/u))`.
pub fn gamma_sine_limit_residual(x: f64, u: f64, s_probe: f64) -> Result<f64> {
    let (lhs, rhs) = limit_sides(x, u, s_probe)?;
    Ok((lhs - rhs).abs())
}

fn limit_sides(x: f64, u: f64, s_probe: f64) -> Result<(f64, f64)> {
    check_u(u)?;
    check_x(x)?;
    if !(s_probe > 0.0 && s_probe < 0.5) {
        return Err(Error::domain(format!("s_probe must lie in (0, 0.5), got {s_probe}")));
    }
    let theta = (x / u).atan();
    let g = gamma(Complex64::new(s_probe, 0.0))?.re;
    Ok((g * (s_probe * theta).sin(), theta))
}

/// Evaluate both sides of `identity` at `args` and report the residual.
pub fn verify_identity(identity: Identity, args: IdentityArgs, tol: &Tolerances) -> Result<IdentityReport> {
    tol.validate()?;
    let IdentityArgs { s, u, x, t } = args;
    // rows are judged against an absolute floor, so the quadrature need not
    // resolve a small result below it (heavy cancellation at large x/u)
    let floored = |floor: f64| Tolerances {
        abs_tol: tol.abs_tol.max(1e-2 * floor),
        ..*tol
    };
    let real = |v: f64| Complex64::new(v, 0.0);
    let report = match identity {
        Identity::Chen => {
            let lhs = chen_lhs(s, u, x, &floored(CHEN_FLOOR))?;
            let rhs = chen_rhs(s, u, x)?;
            IdentityReport::judge(
                identity.name(),
                args,
                lhs.value,
                rhs,
                tol.rel_tol,
                CHEN_FLOOR,
                lhs.converged,
                lhs.n_evals,
            )
        }
        Identity::Legendre => {
            let lhs = legendre_lhs(t, &floored(LEGENDRE_FLOOR))?;
            let rhs = legendre_rhs(t)?;
            IdentityReport::judge(
                identity.name(),
                args,
                lhs.value,
                real(rhs),
                tol.rel_tol,
                LEGENDRE_FLOOR,
                lhs.converged,
                lhs.n_evals,
            )
        }
        Identity::Arctan => {
            let lhs = arctan_integral(x, u, &floored(ARCTAN_FLOOR))?;
            let rhs = (x / u).atan();
            IdentityReport::judge(
                identity.name(),
                args,
                lhs.value,
                real(rhs),
                tol.rel_tol,
                ARCTAN_FLOOR,
                lhs.converged,
                lhs.n_evals,
            )
        }
        Identity::Limit => {
            let probe = s.re;
            let (lhs, rhs) = limit_sides(x, u, probe)?;
            // residual ≈ γ·probe·atan(x/u) with γ ≈ 0.577
            let floor = probe * rhs.abs();
            IdentityReport::judge(identity.name(), args, real(lhs), real(rhs), 0.0, floor, true, 0)
        }
    };
    Ok(report)
}
