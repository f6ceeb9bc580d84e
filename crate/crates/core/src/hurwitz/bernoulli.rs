//! Bernoulli polynomials `B_0 ..= B_8` and the closed forms
//! `ζ(-n, u) = -B_{n+1}(u)/(n+1)`.

use crate::error::{Error, Result};

/// Coefficients of `B_n(x)` in increasing powers of `x`.
const BERNOULLI_POLY: [&[f64]; 9] = [
    &[1.0],
    &[-0.5, 1.0],
    &[1.0 / 6.0, -1.0, 1.0],
    &[0.0, 0.5, -1.5, 1.0],
    &[-1.0 / 30.0, 0.0, 1.0, -2.0, 1.0],
    &[0.0, -1.0 / 6.0, 0.0, 5.0 / 3.0, -2.5, 1.0],
    &[1.0 / 42.0, 0.0, -0.5, 0.0, 2.5, -3.0, 1.0],
    &[0.0, 1.0 / 6.0, 0.0, -7.0 / 6.0, 0.0, 3.5, -3.5, 1.0],
    &[-1.0 / 30.0, 0.0, 2.0 / 3.0, 0.0, -7.0 / 3.0, 0.0, 14.0 / 3.0, -4.0, 1.0],
];

pub fn bernoulli_poly(n: usize, x: f64) -> Result<f64> {
    let coeffs = BERNOULLI_POLY
        .get(n)
        .ok_or_else(|| Error::domain(format!("Bernoulli polynomial degree must be 0..=8, got {n}")))?;
    Ok(coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c))
}

/// `ζ(-n, u)` for `n = 0..=7`.
pub fn zeta_neg_int_oracle(n: usize, u: f64) -> Result<f64> {
    if n > 7 {
        return Err(Error::domain(format!("closed form available for n = 0..=7, got {n}")));
    }
    if !(u > 0.0 && u.is_finite()) {
        return Err(Error::domain(format!("u must be positive, got {u}")));
    }
    Ok(-bernoulli_poly(n + 1, u)? / (n + 1) as f64)
}
