//! Exp-sinh quadrature on `[0, ∞)`.
//!
//! The substitution `x = exp(π/2 · sinh t)` turns algebraic endpoint
//! behaviour at 0 and exponential decay at infinity into double-exponential
//! decay in `t`, after which the plain trapezoid rule converges geometrically.
//! Each refinement level halves the step and only evaluates the new odd
//! nodes, so the work per level doubles while previous sums are reused.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::kernels;
use super::Tolerances;
use crate::error::{Error, Result};

/// Nodes stop at `|t| = T_MAX`; there `x` spans roughly `1e-227 ..= 1e227`.
const T_MAX: f64 = 6.5;

/// Consecutive negligible nodes needed to stop walking outward.
const TAIL_RUN: usize = 3;

/// Fewest refinements before a level difference may be trusted.
const MIN_LEVELS: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: Complex64,
    /// Estimated absolute error.
    pub err_estimate: f64,
    pub n_evals: u64,
    pub converged: bool,
}

/// Registered integrand families, each carrying its fixed parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel {
    /// `e^{-x}`
    ExpDecay,
    /// `e^{-x²}`
    Gauss,
    /// `x e^{-x}`
    XExpDecay,
    /// `1/(1+x²)`
    Lorentzian,
    /// Hermite's integrand `sin(s·atan(x/u)) / ((u²+x²)^{s/2}(e^{2πx}-1))`.
    HermiteTail { s: Complex64, u: f64 },
    /// `e^{-uv} v^{s-1} [1/(e^v-1) - 1/v + 1/2]`.
    BoseBracket { s: Complex64, u: f64 },
    /// `e^{-uw} w^{s-1} sin(xw)`, the sine transform in `w = y²`.
    ChenSubstituted { s: Complex64, u: f64, x: f64 },
    /// `e^{-uy²} y^{2s-1} sin(xy²)` in the original variable.
    ChenOriginal { s: Complex64, u: f64, x: f64 },
    /// `sin(xt)/(e^{2πx}-1)`.
    Legendre { t: f64 },
    /// `e^{-uy} sin(xy)/y`.
    ArctanLaplace { x: f64, u: f64 },
}

impl Kernel {
    pub fn name(&self) -> &'static str {
        match self {
            Kernel::ExpDecay => "exp_decay",
            Kernel::Gauss => "gauss",
            Kernel::XExpDecay => "x_exp_decay",
            Kernel::Lorentzian => "lorentzian",
            Kernel::HermiteTail { .. } => "hermite_tail",
            Kernel::BoseBracket { .. } => "bose_bracket",
            Kernel::ChenSubstituted { .. } => "chen_substituted",
            Kernel::ChenOriginal { .. } => "chen_original",
            Kernel::Legendre { .. } => "legendre",
            Kernel::ArctanLaplace { .. } => "arctan_laplace",
        }
    }

    /// Name of the integration variable as it appears in the derivation.
    pub fn bound_variable(&self) -> &'static str {
        match self {
            Kernel::HermiteTail { .. } | Kernel::Legendre { .. } => "x",
            Kernel::BoseBracket { .. } | Kernel::ChenSubstituted { .. } => "v",
            Kernel::ChenOriginal { .. } | Kernel::ArctanLaplace { .. } => "y",
            _ => "x",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::domain(format!(
                    "{}: {name} must be positive and finite, got {v}",
                    self.name()
                )))
            }
        };
        let nonnegative = |name: &str, v: f64| {
            if v >= 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::domain(format!(
                    "{}: {name} must be nonnegative and finite, got {v}",
                    self.name()
                )))
            }
        };
        let finite_s = |s: Complex64| {
            if s.is_finite() {
                Ok(())
            } else {
                Err(Error::domain(format!("{}: s must be finite", self.name())))
            }
        };
        match *self {
            Kernel::ExpDecay | Kernel::Gauss | Kernel::XExpDecay | Kernel::Lorentzian => Ok(()),
            Kernel::HermiteTail { s, u } => {
                finite_s(s)?;
                positive("u", u)
            }
            Kernel::BoseBracket { s, u } => {
                finite_s(s)?;
                positive("u", u)?;
                if s.re <= -1.0 {
                    return Err(Error::domain(format!("bose_bracket: needs Re s > -1, got {s}")));
                }
                Ok(())
            }
            Kernel::ChenSubstituted { s, u, x } | Kernel::ChenOriginal { s, u, x } => {
                finite_s(s)?;
                positive("u", u)?;
                nonnegative("x", x)?;
                if s.re <= 0.0 {
                    return Err(Error::domain(format!("{}: needs Re s > 0, got {s}", self.name())));
                }
                Ok(())
            }
            Kernel::Legendre { t } => positive("t", t),
            Kernel::ArctanLaplace { x, u } => {
                nonnegative("x", x)?;
                positive("u", u)
            }
        }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let re = |v: f64| Complex64::new(v, 0.0);
        match *self {
            Kernel::ExpDecay => re((-x).exp()),
            Kernel::Gauss => re((-x * x).exp()),
            Kernel::XExpDecay => re(x * (-x).exp()),
            Kernel::Lorentzian => re(1.0 / (1.0 + x * x)),
            Kernel::HermiteTail { s, u } => kernels::hermite_integrand(s, u, x),
            Kernel::BoseBracket { s, u } => kernels::integral3_integrand(s, u, x),
            Kernel::ChenSubstituted { s, u, x: p } => kernels::chen_integrand_w(s, u, p, x),
            Kernel::ChenOriginal { s, u, x: p } => kernels::chen_integrand_y(s, u, p, x),
            Kernel::Legendre { t } => re(kernels::legendre_integrand(t, x)),
            Kernel::ArctanLaplace { x: p, u } => re(kernels::arctan_integrand(p, u, x)),
        }
    }

    /// An upper bound on `|f(x)|` for large `x`, used for tail truncation
    /// so that zeros of an oscillating integrand cannot end the walk early.
    pub fn magnitude_bound(&self, x: f64) -> Option<f64> {
        match *self {
            Kernel::HermiteTail { s, u } => Some(kernels::hermite_bound(s, u, x)),
            Kernel::BoseBracket { s, u } => Some(kernels::integral3_bound(s, u, x)),
            Kernel::ChenSubstituted { s, u, .. } => Some(kernels::chen_w_bound(s, u, x)),
            Kernel::ChenOriginal { s, u, .. } => Some(kernels::chen_y_bound(s, u, x)),
            Kernel::Legendre { t } => Some(kernels::legendre_bound(t, x)),
            Kernel::ArctanLaplace { x: p, u } => Some(kernels::arctan_bound(p, u, x)),
            _ => None,
        }
    }
}

/// A half-line integral `∫₀^∞ f(var) d var` for one registered kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureProblem {
    pub kernel: Kernel,
}

impl QuadratureProblem {
    pub fn new(kernel: Kernel) -> Result<Self> {
        kernel.validate()?;
        Ok(QuadratureProblem { kernel })
    }

    pub fn bound_variable(&self) -> &'static str {
        self.kernel.bound_variable()
    }
}

/// Integrate a registered kernel over `[0, ∞)`.
pub fn integrate_semi_infinite(problem: &QuadratureProblem, tol: &Tolerances) -> Result<QuadratureResult> {
    let kernel = problem.kernel;
    kernel.validate()?;
    let name = kernel.name();
    let variable = kernel.bound_variable();
    exp_sinh(
        |x| {
            let v = kernel.eval(x);
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFiniteIntegrand {
                    kernel: name,
                    variable,
                    at: x,
                })
            }
        },
        |x| kernel.magnitude_bound(x),
        tol,
    )
}

struct Walker<'a, F, B> {
    f: F,
    bound: B,
    tol: &'a Tolerances,
    n_evals: u64,
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

impl CompensatedSum {
    fn add(&mut self, v: Complex64) {
        self.sum.re = neumaier(self.sum.re, v.re, &mut self.carry.re);
        self.sum.im = neumaier(self.sum.im, v.im, &mut self.carry.im);
    }

    fn total(&self) -> Complex64 {
        self.sum + self.carry
    }
}

fn neumaier(sum: f64, v: f64, carry: &mut f64) -> f64 {
    let t = sum + v;
    if sum.abs() >= v.abs() {
        *carry += (sum - t) + v;
    } else {
        *carry += (v - t) + sum;
    }
    t
}

enum Walk {
    Done { sum: Complex64, abs_sum: f64 },
    OutOfBudget,
}

impl<F, B> Walker<'_, F, B>
where
    F: FnMut(f64) -> Result<Complex64>,
    B: Fn(f64) -> Option<f64>,
{
    /// Sum `w(t) f(x(t))` over `t = first, first ± stride, ...` on one side,
    /// stopping after `TAIL_RUN` consecutive negligible contributions.
    fn walk(&mut self, first: f64, stride: f64, scale: f64) -> Result<Walk> {
        let mut sum = CompensatedSum::default();
        let mut abs_sum = 0.0;
        let mut quiet = 0;
        let mut t = first;
        while t.abs() <= T_MAX {
            if self.n_evals >= self.tol.max_evals {
                return Ok(Walk::OutOfBudget);
            }
            let (x, w) = node(t);
            let fx = (self.f)(x)?;
            self.n_evals += 1;
            let term = fx * w;
            sum.add(term);
            abs_sum += term.norm();

            let size = match (t > 0.0).then(|| (self.bound)(x)).flatten() {
                Some(b) => b * w,
                None => term.norm(),
            };
            if size <= self.tol.abs_tol + self.tol.rel_tol * scale {
                quiet += 1;
                if quiet >= TAIL_RUN {
                    break;
                }
            } else {
                quiet = 0;
            }
            t += stride;
        }
        Ok(Walk::Done {
            sum: sum.total(),
            abs_sum,
        })
    }
}

fn node(t: f64) -> (f64, f64) {
    let x = (FRAC_PI_2 * t.sinh()).exp();
    (x, FRAC_PI_2 * t.cosh() * x)
}

/// Exp-sinh rule for an arbitrary integrand.
///
/// `f` may fail (for instance when it detects a non-finite value); `bound`
/// optionally supplies an envelope of `|f|` used only for truncating the
/// right tail. The result is a pure function of its inputs.
pub fn exp_sinh<F, B>(f: F, bound: B, tol: &Tolerances) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<Complex64>,
    B: Fn(f64) -> Option<f64>,
{
    tol.validate()?;
    let mut walker = Walker {
        f,
        bound,
        tol,
        n_evals: 0,
    };

    let mut h = 1.0;
    let mut sum = CompensatedSum::default();
    let mut abs_sum = 0.0;
    let mut previous: Option<(Complex64, f64)> = None;
    let mut estimate = Complex64::new(0.0, 0.0);
    let mut err = f64::INFINITY;

    for level in 0..=tol.max_levels {
        // level 0 visits every integer t, later levels only the odd multiples of h
        let (right_start, stride) = if level == 0 {
            if walker.n_evals >= tol.max_evals {
                break;
            }
            let (x0, w0) = node(0.0);
            let f0 = (walker.f)(x0)?;
            walker.n_evals += 1;
            sum.add(f0 * w0);
            abs_sum += (f0 * w0).norm();
            (h, h)
        } else {
            h *= 0.5;
            (h, 2.0 * h)
        };
        let scale = previous.map_or(0.0, |(v, _)| v.norm());

        let mut level_sum = Complex64::new(0.0, 0.0);
        let mut level_abs = 0.0;
        let mut exhausted = false;
        for direction in [1.0, -1.0] {
            match walker.walk(direction * right_start, direction * stride, scale)? {
                Walk::Done { sum, abs_sum } => {
                    level_sum += sum;
                    level_abs += abs_sum;
                }
                Walk::OutOfBudget => {
                    exhausted = true;
                    break;
                }
            }
        }
        if exhausted {
            break;
        }
        sum.add(level_sum);
        abs_sum += level_abs;

        let value = sum.total() * h;
        let roundoff = 8.0 * f64::EPSILON * abs_sum * h;
        if let Some((prev, _)) = previous {
            err = (value - prev).norm() + roundoff;
        }
        estimate = value;
        previous = Some((value, err));
        if level >= MIN_LEVELS && err <= tol.target(value.norm()) {
            return Ok(QuadratureResult {
                value,
                err_estimate: err,
                n_evals: walker.n_evals,
                converged: true,
            });
        }
    }

    Ok(QuadratureResult {
        value: estimate,
        err_estimate: err,
        n_evals: walker.n_evals,
        converged: false,
    })
}
