//! Hurwitz zeta evaluators and their consistency checks.
//!
//! Two integral representations are evaluated by quadrature:
//!
//! ```text
//! Hermite:   ζ(s,u) = u^{-s}/2 + u^{1-s}/(s-1) + 2 ∫₀^∞ sin(s·atan(x/u)) / ((u²+x²)^{s/2} (e^{2πx}-1)) dx
//! bracket:   ζ(s,u) = u^{-s}/2 + u^{1-s}/(s-1) + (1/Γ(s)) ∫₀^∞ e^{-uv} v^{s-1} [1/(e^v-1) - 1/v + 1/2] dv
//! ```
//!
//! Hermite's form holds for every `s ≠ 1`; the bracket form for `Re s > -1`.
//! The Euler-Maclaurin series and the Bernoulli closed forms at nonpositive
//! integers serve as independent oracles.

mod bernoulli;
mod series;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use bernoulli::{bernoulli_poly, zeta_neg_int_oracle};
pub use series::{zeta_series, SERIES_MIN_RE};

use crate::error::{Error, Result};
use crate::identities::{IdentityArgs, IdentityReport};
use crate::numerics::kernels::{bose_ratio, real_pow};
use crate::numerics::{
    exp_sinh, gamma, integrate_semi_infinite, reciprocal_gamma, Kernel, QuadratureProblem, Tolerances,
};

/// Evaluations closer than this to `s = 1` are refused.
pub const POLE_RADIUS: f64 = 1e-8;

/// Residual floors for the consistency checks.
pub const FUBINI_FLOOR: f64 = 1e-8;
pub const REPRESENTATION_FLOOR: f64 = 1e-10;
pub const RECURRENCE_FLOOR: f64 = 1e-11;
pub const NEG_INT_FLOOR: f64 = 1e-11;

/// An evaluation point `(s, u)` with `u > 0` and `s` away from the pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaArgs {
    pub s: Complex64,
    pub u: f64,
}

impl ZetaArgs {
    pub fn new(s: Complex64, u: f64) -> Result<Self> {
        if !(u > 0.0 && u.is_finite()) {
            return Err(Error::domain(format!("u must be positive and finite, got {u}")));
        }
        if !s.is_finite() {
            return Err(Error::domain(format!("s must be finite, got {s}")));
        }
        if (s - 1.0).norm() <= POLE_RADIUS {
            return Err(Error::Pole(format!(
                "s = {s} is within {POLE_RADIUS:e} of the pole at 1"
            )));
        }
        Ok(ZetaArgs { s, u })
    }

    /// Whether `s` lies in the strip where accuracy is guaranteed.
    pub fn in_supported_strip(&self) -> bool {
        (-20.0..=50.0).contains(&self.s.re) && self.s.im.abs() <= 50.0
    }

    /// `u^{-s}/2 + u^{1-s}/(s-1)`, the terms shared by both integral forms.
    fn leading_terms(&self) -> Complex64 {
        0.5 * real_pow(self.u, -self.s) + real_pow(self.u, 1.0 - self.s) / (self.s - 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Hermite,
    Integral3,
    Series,
    Bernoulli,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Hermite => "hermite",
            Method::Integral3 => "integral3",
            Method::Series => "series",
            Method::Bernoulli => "bernoulli",
        }
    }

    /// The series where it converges, Hermite's integral elsewhere.
    pub fn auto(s: Complex64) -> Method {
        if s.re > SERIES_MIN_RE {
            Method::Series
        } else {
            Method::Hermite
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Method::Hermite, Method::Integral3, Method::Series, Method::Bernoulli]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown method `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub method: Method,
    pub n_evals: u64,
    pub converged: bool,
}

/// Largest tolerated value of [`hermite_growth`].
const HERMITE_GROWTH_MAX: f64 = 3.0;

/// `max_x |t|·atan(x/u) - 2πx`: the log of how far the Hermite integrand
/// rises above its result, i.e. the digits lost to cancellation.
fn hermite_growth(t: f64, u: f64) -> f64 {
    let x_sq = t.abs() * u / (2.0 * PI) - u * u;
    if x_sq <= 0.0 {
        return 0.0;
    }
    let x = x_sq.sqrt();
    t.abs() * (x / u).atan() - 2.0 * PI * x
}

/// `ζ(s,u)` through Hermite's integral; valid for all `s ≠ 1`.
///
/// For large `|Im s|` relative to `u` the integrand oscillates with
/// exponentially large amplitude. There `u` is first shifted by the smallest
/// `N` that keeps the cancellation mild, using
/// `ζ(s,u) = Σ_{k<N} (u+k)^{-s} + ζ(s,u+N)`.
pub fn zeta_hermite(s: Complex64, u: f64, tol: &Tolerances) -> Result<ZetaResult> {
    ZetaArgs::new(s, u)?;
    let mut shift = 0usize;
    while hermite_growth(s.im, u + shift as f64) > HERMITE_GROWTH_MAX {
        shift += 1;
    }
    let mut head = Complex64::new(0.0, 0.0);
    let mut head_size = 0.0;
    for k in (0..shift).rev() {
        let term = real_pow(u + k as f64, -s);
        head += term;
        head_size += term.norm();
    }

    let shifted = ZetaArgs::new(s, u + shift as f64)?;
    let tail = integrate_semi_infinite(&QuadratureProblem::new(Kernel::HermiteTail { s, u: shifted.u })?, tol)?;
    Ok(ZetaResult {
        value: head + shifted.leading_terms() + 2.0 * tail.value,
        err_estimate: 2.0 * tail.err_estimate + 4.0 * f64::EPSILON * head_size,
        method: Method::Hermite,
        n_evals: tail.n_evals + shift as u64,
        converged: tail.converged,
    })
}

/// `ζ(s,u)` through the Bose-bracket integral; valid for `Re s > -1`.
pub fn zeta_integral3(s: Complex64, u: f64, tol: &Tolerances) -> Result<ZetaResult> {
    let args = ZetaArgs::new(s, u)?;
    if !(s.re > -1.0) {
        return Err(Error::domain(format!(
            "bracket representation needs Re s > -1, got {s}"
        )));
    }
    let scale = reciprocal_gamma(s);
    let mut result = ZetaResult {
        value: args.leading_terms(),
        err_estimate: 0.0,
        method: Method::Integral3,
        n_evals: 0,
        converged: true,
    };
    if scale == Complex64::new(0.0, 0.0) {
        return Ok(result);
    }
    let integral = integrate_semi_infinite(&QuadratureProblem::new(Kernel::BoseBracket { s, u })?, tol)?;
    result.value += scale * integral.value;
    result.err_estimate = scale.norm() * integral.err_estimate;
    result.n_evals = integral.n_evals;
    result.converged = integral.converged;
    Ok(result)
}

/// `ζ(-n, u)` from the Bernoulli closed form; `s` must be `0, -1, …, -7`.
pub fn zeta_bernoulli(s: Complex64, u: f64) -> Result<ZetaResult> {
    ZetaArgs::new(s, u)?;
    let n = -s.re;
    if s.im != 0.0 || n.fract() != 0.0 || !(0.0..=7.0).contains(&n) {
        return Err(Error::domain(format!(
            "closed form needs s in {{0, -1, ..., -7}}, got {s}"
        )));
    }
    Ok(ZetaResult {
        value: Complex64::new(zeta_neg_int_oracle(n as usize, u)?, 0.0),
        err_estimate: 0.0,
        method: Method::Bernoulli,
        n_evals: 0,
        converged: true,
    })
}

pub fn evaluate(method: Method, s: Complex64, u: f64, tol: &Tolerances) -> Result<ZetaResult> {
    match method {
        Method::Hermite => zeta_hermite(s, u, tol),
        Method::Integral3 => zeta_integral3(s, u, tol),
        Method::Series => zeta_series(s, u, tol),
        Method::Bernoulli => zeta_bernoulli(s, u),
    }
}

/// The Hermite tail `∫₀^∞ sin(s·atan(x/u)) / ((u²+x²)^{s/2}(e^{2πx}-1)) dx`
/// against the same integral written as the nested double integral
/// `(2/Γ(s)) ∫₀^∞ (e^{2πx}-1)^{-1} ∫₀^∞ e^{-uy²} y^{2s-1} sin(xy²) dy dx`.
///
/// The inner integral runs at `rel_tol = 1e-11`, the outer at `1e-9`, and
/// the row passes at an absolute residual of `1e-8`.
pub fn verify_eq2(s: Complex64, u: f64, tol: &Tolerances) -> Result<IdentityReport> {
    ZetaArgs::new(s, u)?;
    if !(s.re > 0.0) {
        return Err(Error::domain(format!("nested form needs Re s > 0, got {s}")));
    }
    let inner_tol = Tolerances { rel_tol: 1e-11, ..*tol };
    let outer_tol = Tolerances { rel_tol: 1e-9, ..*tol };

    let rhs = integrate_semi_infinite(&QuadratureProblem::new(Kernel::HermiteTail { s, u })?, &inner_tol)?;

    // |inner(x)| ≤ ∫ e^{-uy²} y^{2σ-1} dy = Γ(σ) / (2 u^σ)
    let inner_bound = 0.5 * gamma(Complex64::new(s.re, 0.0))?.re / u.powf(s.re);
    let bose = |x: f64| {
        let v = 2.0 * PI * x;
        bose_ratio(v) / v
    };
    // the outer integral is about Γ(s)·rhs/2; nodes far below that skip the inner quadrature
    let outer_scale = 0.5 * rhs.value.norm() / reciprocal_gamma(s).norm();
    let negligible = 1e-3 * outer_tol.target(outer_scale);

    let mut inner_converged = true;
    let mut n_evals = rhs.n_evals;
    let outer = exp_sinh(
        |x| {
            let weight = bose(x);
            if weight * inner_bound <= negligible {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let inner =
                integrate_semi_infinite(&QuadratureProblem::new(Kernel::ChenOriginal { s, u, x })?, &inner_tol)?;
            inner_converged &= inner.converged;
            n_evals += inner.n_evals;
            Ok(inner.value * weight)
        },
        |x| Some(inner_bound * bose(x)),
        &outer_tol,
    )?;
    n_evals += outer.n_evals;

    let lhs = 2.0 * reciprocal_gamma(s) * outer.value;
    let args = IdentityArgs { s, u, x: 0.0, t: 0.0 };
    Ok(IdentityReport::judge(
        "fubini",
        args,
        lhs,
        rhs.value,
        tol.rel_tol,
        FUBINI_FLOOR,
        rhs.converged && outer.converged && inner_converged,
        n_evals,
    ))
}

/// Hermite's integral against the bracket representation at one point.
pub fn verify_representations(s: Complex64, u: f64, tol: &Tolerances) -> Result<IdentityReport> {
    let hermite = zeta_hermite(s, u, tol)?;
    let bracket = zeta_integral3(s, u, tol)?;
    Ok(IdentityReport::judge(
        "eq3-eq4",
        IdentityArgs {
            s,
            u,
            ..Default::default()
        },
        hermite.value,
        bracket.value,
        tol.rel_tol,
        REPRESENTATION_FLOOR,
        hermite.converged && bracket.converged,
        hermite.n_evals + bracket.n_evals,
    ))
}

/// `ζ(s,u) - ζ(s,u+1)` against `u^{-s}`, both zetas from Hermite's integral.
pub fn verify_recurrence(s: Complex64, u: f64, tol: &Tolerances) -> Result<IdentityReport> {
    let here = zeta_hermite(s, u, tol)?;
    let next = zeta_hermite(s, u + 1.0, tol)?;
    let rhs = real_pow(u, -s);
    Ok(IdentityReport::judge(
        "recurrence",
        IdentityArgs {
            s,
            u,
            ..Default::default()
        },
        here.value - next.value,
        rhs,
        0.0,
        RECURRENCE_FLOOR * rhs.norm().max(1.0),
        here.converged && next.converged,
        here.n_evals + next.n_evals,
    ))
}

/// Hermite's integral at `s = -n` against `-B_{n+1}(u)/(n+1)`.
pub fn verify_neg_int(n: usize, u: f64, tol: &Tolerances) -> Result<IdentityReport> {
    let oracle = zeta_neg_int_oracle(n, u)?;
    let s = Complex64::new(-(n as f64), 0.0);
    let hermite = zeta_hermite(s, u, tol)?;
    Ok(IdentityReport::judge(
        "neg-int",
        IdentityArgs {
            s,
            u,
            ..Default::default()
        },
        hermite.value,
        Complex64::new(oracle, 0.0),
        tol.rel_tol,
        NEG_INT_FLOOR,
        hermite.converged,
        hermite.n_evals,
    ))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn hermite_across_the_imaginary_strip() {
        // 40-digit mpmath zeta(s, u)
        let cases = [
            (
                Complex64::new(0.5, 14.1),
                1.0,
                Complex64::new(0.004_698_400_183_489_187, -0.027_058_282_374_251_048),
            ),
            (
                Complex64::new(0.5, 50.0),
                1.0,
                Complex64::new(-0.081_712_108_320_979_98, 0.330_792_194_038_661_3),
            ),
            (
                Complex64::new(0.5, 50.0),
                7.0,
                Complex64::new(-0.977_539_722_387_307_9, -0.227_875_320_365_972_1),
            ),
            (
                Complex64::new(0.5, 30.0),
                0.25,
                Complex64::new(0.040_076_096_264_179_004, -0.101_421_573_320_517_17),
            ),
            (
                Complex64::new(2.0, -45.0),
                3.0,
                Complex64::new(0.129_747_643_730_538_95, -0.165_823_195_503_176_5),
            ),
            (
                Complex64::new(-3.0, 40.0),
                1.0,
                Complex64::new(-52.480_747_262_058_22, -625.817_027_892_232_2),
            ),
            (
                Complex64::new(-10.0, 50.0),
                2.5,
                Complex64::new(-25_308_069.704_260_695, 3_101_003_410.106_601),
            ),
        ];
        let tol = Tolerances::default();
        for (s, u, want) in cases {
            let z = zeta_hermite(s, u, &tol).unwrap();
            assert!(z.converged, "s={s}, u={u}: {z:?}");
            let err = (z.value - want).norm();
            assert!(err <= 1e-11 * want.norm().max(1.0), "s={s}, u={u}: error {err:e}");
            assert!(
                err <= 3.0 * z.err_estimate.max(1e-15 * want.norm()),
                "s={s}, u={u}: {err:e} vs {z:?}"
            );
        }
    }

    #[test]
    fn shift_is_only_used_for_large_imaginary_parts() {
        assert_eq!(hermite_growth(0.0, 1.0), 0.0);
        assert_eq!(hermite_growth(4.0, 1.0), 0.0);
        assert!(hermite_growth(4.0, 0.25) < HERMITE_GROWTH_MAX);
        assert!(hermite_growth(50.0, 1.0) > 40.0);
        assert_eq!(hermite_growth(-50.0, 1.0), hermite_growth(50.0, 1.0));
        // the shift is exact: values on either side of the threshold agree with the series
        let tol = Tolerances::default();
        for t in [12.0, 13.0, 14.0, 25.0, 49.0] {
            let s = Complex64::new(1.5, t);
            let h = zeta_hermite(s, 1.0, &tol).unwrap();
            let z = zeta_series(s, 1.0, &tol).unwrap();
            assert!((h.value - z.value).norm() <= 1e-11 * z.value.norm(), "t={t}");
        }
    }

    #[test]
    fn hermite_examples() {
        let tol = Tolerances::default();
        let z = zeta_hermite(c(0.0), 0.3, &tol).unwrap();
        assert!((z.value - c(0.2)).norm() <= 1e-13, "{z:?}");
        let z = zeta_hermite(c(2.0), 1.0, &tol).unwrap();
        assert!(z.converged);
        assert!((z.value.re - PI * PI / 6.0).abs() <= 1e-12, "{z:?}");
        let z = zeta_hermite(c(-1.0), 1.0, &tol).unwrap();
        assert!((z.value.re + 1.0 / 12.0).abs() <= 1e-12, "{z:?}");
        let z = zeta_hermite(c(2.0), 0.5, &tol).unwrap();
        assert!((z.value.re - PI * PI / 2.0).abs() <= 1e-11, "{z:?}");
    }

    #[test]
    fn integral3_examples() {
        let tol = Tolerances::default();
        let z = zeta_integral3(c(0.0), 2.0, &tol).unwrap();
        assert_eq!(z.n_evals, 0);
        assert!((z.value.re + 1.5).abs() <= 1e-15);
        let z = zeta_integral3(c(2.0), 1.0, &tol).unwrap();
        assert!((z.value.re - PI * PI / 6.0).abs() <= 1e-12, "{z:?}");
        // ζ(3) - 1
        let z = zeta_integral3(c(3.0), 2.0, &tol).unwrap();
        assert!((z.value.re - 0.202_056_903_159_594_3).abs() <= 1e-12, "{z:?}");
        assert!(matches!(zeta_integral3(c(-1.0), 1.0, &tol), Err(Error::Domain(_))));
    }

    #[test]
    fn pole_and_domain_errors() {
        let tol = Tolerances::default();
        assert!(matches!(zeta_hermite(c(1.0), 1.0, &tol), Err(Error::Pole(_))));
        assert!(matches!(zeta_hermite(c(1.0 + 1e-9), 1.0, &tol), Err(Error::Pole(_))));
        assert!(zeta_hermite(c(1.0 + 1e-6), 1.0, &tol).is_ok());
        assert!(matches!(zeta_integral3(c(1.0), 1.0, &tol), Err(Error::Pole(_))));
        assert!(matches!(zeta_hermite(c(2.0), 0.0, &tol), Err(Error::Domain(_))));
        assert!(matches!(zeta_hermite(c(2.0), -1.0, &tol), Err(Error::Domain(_))));
    }

    #[test]
    fn bernoulli_method() {
        let z = zeta_bernoulli(c(-1.0), 1.0).unwrap();
        assert!((z.value.re + 1.0 / 12.0).abs() < 1e-16);
        assert!(zeta_bernoulli(c(-0.5), 1.0).is_err());
        assert!(zeta_bernoulli(c(-8.0), 1.0).is_err());
        assert!(zeta_bernoulli(c(2.0), 1.0).is_err());
    }

    #[test]
    fn method_names_round_trip() {
        for m in [Method::Hermite, Method::Integral3, Method::Series, Method::Bernoulli] {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("auto".parse::<Method>().is_err());
        assert_eq!(Method::auto(c(2.0)), Method::Series);
        assert_eq!(Method::auto(c(1.05)), Method::Hermite);
        assert_eq!(Method::auto(Complex64::new(0.5, 10.0)), Method::Hermite);
    }

    #[test]
    fn fubini_at_two_one() {
        let r = verify_eq2(c(2.0), 1.0, &Tolerances::default()).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.abs_residual < 1e-8);
        // the Hermite tail equals (ζ(2) - 1/2 - 1)/2
        assert!((r.rhs.re - (PI * PI / 6.0 - 1.5) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn check_reports() {
        let tol = Tolerances::default();
        assert!(verify_representations(c(0.5), 1.0, &tol).unwrap().passed);
        assert!(verify_recurrence(c(2.5), 0.5, &tol).unwrap().passed);
        assert!(verify_neg_int(3, 2.5, &tol).unwrap().passed);
    }
}
