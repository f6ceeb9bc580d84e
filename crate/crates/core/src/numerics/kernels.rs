//! Cancellation-safe scalar kernels and the integrands of the Hermite chain.
//!
//! Every integrand here is written so that it stays finite down to the
//! smallest node the exp-sinh rule produces (about `1e-227`) and up to the
//! point where the exponential damping underflows. Removable `0/0` points at
//! the origin are evaluated through their limits.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const TWO_PI: f64 = 2.0 * PI;

/// `B_{2k} / (2k)!` for `k = 1..=18`.
///
/// These are the Taylor coefficients of `1/(e^v - 1) - 1/v + 1/2` in odd
/// powers of `v`, and the Euler-Maclaurin correction weights.
pub const BERNOULLI_SERIES: [f64; 18] = [
    0.083_333_333_333_333_333_333,
    -0.001_388_888_888_888_888_888_89,
    3.306_878_306_878_306_878_31e-5,
    -8.267_195_767_195_767_195_77e-7,
    2.087_675_698_786_809_897_92e-8,
    -5.284_190_138_687_493_184_85e-10,
    1.338_253_653_068_467_883_28e-11,
    -3.389_680_296_322_582_866_83e-13,
    8.586_062_056_277_844_564_14e-15,
    -2.174_868_698_558_061_873_04e-16,
    5.509_002_828_360_229_515_2e-18,
    -1.395_446_468_581_252_334_07e-19,
    3.534_707_039_629_467_471_69e-21,
    -8.953_517_427_037_546_850_4e-23,
    2.267_952_452_337_683_060_31e-24,
    -5.744_790_668_872_202_445_26e-26,
    1.455_172_475_614_864_901_87e-27,
    -3.685_994_940_665_310_178_18e-29,
];

/// Below this argument [`bracket_kernel`] uses the Bernoulli series.
pub const BRACKET_SERIES_CUTOFF: f64 = 2.0;

/// Arguments below this switch sine quotients to their Taylor polynomials.
pub const TAYLOR_CUTOFF: f64 = 1e-4;

/// `1/(e^v - 1) - 1/v + 1/2` for `v > 0`.
///
/// Near zero the three terms cancel down to `v/12`, so small arguments go
/// through the Bernoulli series; the direct form is used from
/// [`BRACKET_SERIES_CUTOFF`] up. Relative error stays within `1e-15`.
pub fn bracket_kernel(v: f64) -> Result<f64> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::domain(format!("bracket kernel needs v > 0, got {v}")));
    }
    Ok(if v < BRACKET_SERIES_CUTOFF {
        bracket_series(v)
    } else {
        bracket_direct(v)
    })
}

/// Series branch of the bracket kernel, accurate for `0 ≤ v < 2`.
pub fn bracket_series(v: f64) -> f64 {
    v * bracket_series_over_v(v)
}

/// Direct branch of the bracket kernel with `e^v - 1` from `expm1`.
pub fn bracket_direct(v: f64) -> f64 {
    1.0 / v.exp_m1() - 1.0 / v + 0.5
}

fn bracket_series_over_v(v: f64) -> f64 {
    let z = v * v;
    BERNOULLI_SERIES.iter().rev().fold(0.0, |acc, &c| acc * z + c)
}

/// `bracket(v) / v`, finite as `v → 0` where it tends to `1/12`.
pub(crate) fn bracket_over_v(v: f64) -> f64 {
    if v < BRACKET_SERIES_CUTOFF {
        bracket_series_over_v(v)
    } else {
        bracket_direct(v) / v
    }
}

/// `v / (e^v - 1)`, equal to 1 at `v = 0` and to 0 once `e^v` overflows.
pub fn bose_ratio(v: f64) -> f64 {
    if v == 0.0 {
        1.0
    } else {
        v / v.exp_m1()
    }
}

/// `sin(z)/z` for real `z`.
pub fn sinc(z: f64) -> f64 {
    if z.abs() < TAYLOR_CUTOFF {
        1.0 - z * z / 6.0
    } else {
        z.sin() / z
    }
}

/// `sin(z)/z` for complex `z`.
pub fn csinc(z: Complex64) -> Complex64 {
    if z.norm() < TAYLOR_CUTOFF {
        1.0 - z * z / 6.0
    } else {
        z.sin() / z
    }
}

/// `base^s` for a positive real base, through the real logarithm only.
pub fn real_pow(base: f64, s: Complex64) -> Complex64 {
    (s * base.ln()).exp()
}

/// The Hermite integrand `sin(s·atan(x/u)) / ((u²+x²)^{s/2} (e^{2πx} - 1))`.
///
/// For `x < 1e-4·u` it is assembled from `s·sinc(sθ)`, the expansion of
/// `atan(r)/r`, and `x/(e^{2πx}-1)`, which is continuous down to `x = 0`
/// where it equals [`hermite_integrand_limit`].
pub fn hermite_integrand(s: Complex64, u: f64, x: f64) -> Complex64 {
    if x < TAYLOR_CUTOFF * u {
        let r = x / u;
        let theta_over_x = (1.0 - r * r / 3.0) / u;
        let theta = x * theta_over_x;
        let power = real_pow(u * u + x * x, -0.5 * s);
        return s * csinc(s * theta) * theta_over_x * bose_ratio(TWO_PI * x) / TWO_PI * power;
    }
    let theta = (x / u).atan();
    let v = TWO_PI * x;
    let log_r2 = 2.0 * u.hypot(x).ln();
    // (u²+x²)^{-s/2} e^{-v} / (1 - e^{-v}) without overflowing either factor
    let damped = (-0.5 * s * log_r2 - v).exp() / -(-v).exp_m1();
    (s * theta).sin() * damped
}

/// `s / (2π u^{s+1})`, the value of [`hermite_integrand`] at `x = 0`.
pub fn hermite_integrand_limit(s: Complex64, u: f64) -> Complex64 {
    s / (TWO_PI * real_pow(u, s + 1.0))
}

pub(crate) fn hermite_bound(s: Complex64, u: f64, x: f64) -> f64 {
    let theta = (x / u).atan();
    let v = TWO_PI * x;
    let log_r2 = 2.0 * u.hypot(x).ln();
    (s.im * theta).cosh() * (-0.5 * s.re * log_r2 - v).exp() / -(-v).exp_m1()
}

/// `e^{-uv} v^{s-1} [1/(e^v-1) - 1/v + 1/2]`, the Bose-bracket integrand.
pub fn integral3_integrand(s: Complex64, u: f64, v: f64) -> Complex64 {
    (s * v.ln() - u * v).exp() * bracket_over_v(v)
}

pub(crate) fn integral3_bound(s: Complex64, u: f64, v: f64) -> f64 {
    0.5 * ((s.re - 1.0) * v.ln() - u * v).exp()
}

/// `e^{-uw} w^{s-1} sin(xw)`: the sine transform after substituting `w = y²`.
pub fn chen_integrand_w(s: Complex64, u: f64, x: f64, w: f64) -> Complex64 {
    (s * w.ln() - u * w).exp() * (x * sinc(x * w))
}

pub(crate) fn chen_w_bound(s: Complex64, u: f64, w: f64) -> f64 {
    ((s.re - 1.0) * w.ln() - u * w).exp()
}

/// `e^{-uy²} y^{2s-1} sin(xy²)` in the original variable `y`.
pub fn chen_integrand_y(s: Complex64, u: f64, x: f64, y: f64) -> Complex64 {
    let y2 = y * y;
    let damped = (2.0 * s * y.ln() - u * y2).exp();
    if damped == Complex64::new(0.0, 0.0) {
        return damped;
    }
    damped * (x * y * sinc(x * y2))
}

pub(crate) fn chen_y_bound(s: Complex64, u: f64, y: f64) -> f64 {
    ((2.0 * s.re - 1.0) * y.ln() - u * y * y).exp()
}

/// `sin(xt)/(e^{2πx} - 1)`, with limit `t/(2π)` at `x = 0`.
pub fn legendre_integrand(t: f64, x: f64) -> f64 {
    t * sinc(x * t) * bose_ratio(TWO_PI * x) / TWO_PI
}

pub(crate) fn legendre_bound(t: f64, x: f64) -> f64 {
    (x * t).min(1.0) * bose_ratio(TWO_PI * x) / (TWO_PI * x)
}

/// `e^{-uy} sin(xy)/y`, with limit `x` at `y = 0`.
pub fn arctan_integrand(x: f64, u: f64, y: f64) -> f64 {
    (-u * y).exp() * x * sinc(x * y)
}

pub(crate) fn arctan_bound(x: f64, u: f64, y: f64) -> f64 {
    (-u * y).exp() * x.min(1.0 / y)
}
