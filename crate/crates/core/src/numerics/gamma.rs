//! Complex gamma function via the Lanczos approximation (g = 7, n = 9).
//!
//! The Lanczos sum is used for `Re s ≥ 1/2`. To the left, `log Γ` is shifted
//! up with `log Γ(s) = log Γ(s+n) - Σ log(s+k)`, which keeps the principal
//! branch (cut along the negative real axis) instead of the `mod 2πi`
//! ambiguity a logarithm of the reflection formula would introduce.

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

/// Distance to a nonpositive integer below which `s` counts as a pole.
const POLE_RADIUS: f64 = 1e-14;

fn nonpositive_integer_near(s: Complex64) -> Option<f64> {
    let n = s.re.round();
    (n <= 0.0 && (s - n).norm() < POLE_RADIUS).then_some(n)
}

fn lanczos_log_gamma(s: Complex64) -> Complex64 {
    let z = s - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + series.ln()
}

/// Principal branch of `log Γ(s)`.
pub fn log_gamma(s: Complex64) -> Result<Complex64> {
    if !s.is_finite() {
        return Err(Error::domain(format!("log_gamma needs finite s, got {s}")));
    }
    if let Some(n) = nonpositive_integer_near(s) {
        return Err(Error::Pole(format!("gamma has a pole at s = {n}")));
    }
    // -0.0 would put negative real arguments on the lower lip of the cut
    let s = Complex64::new(s.re, if s.im == 0.0 { 0.0 } else { s.im });
    if s.re >= 0.5 {
        return Ok(lanczos_log_gamma(s));
    }
    let shift = (0.5 - s.re).ceil() as usize;
    let mut correction = Complex64::new(0.0, 0.0);
    for k in 0..shift {
        correction += (s + k as f64).ln();
    }
    Ok(lanczos_log_gamma(s + shift as f64) - correction)
}

pub fn gamma(s: Complex64) -> Result<Complex64> {
    Ok(log_gamma(s)?.exp())
}

/// `1/Γ(s)`, an entire function: exactly zero at the nonpositive integers.
pub fn reciprocal_gamma(s: Complex64) -> Complex64 {
    if nonpositive_integer_near(s).is_some() {
        return Complex64::new(0.0, 0.0);
    }
    match log_gamma(s) {
        Ok(lg) => (-lg).exp(),
        Err(_) => Complex64::new(f64::NAN, f64::NAN),
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(got: Complex64, want: Complex64, rel: f64) -> bool {
        (got - want).norm() <= rel * want.norm().max(1.0)
    }

    #[test]
    fn integer_and_half_integer_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-15);
        let l5 = log_gamma(c(5.0, 0.0)).unwrap();
        assert!((l5.re - 3.178_053_830_347_945_6).abs() < 1e-14);
        let lh = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((lh.re - 0.572_364_942_924_700_1).abs() < 1e-15);
    }

    #[test]
    fn matches_principal_branch_reference() {
        // 40-digit loggamma values (branch cut on the negative real axis).
        let cases = [
            (c(-0.5, 0.0), c(1.265_512_123_484_645_4, -PI)),
            (c(-2.5, 3.0), c(-7.478_236_042_050_315, -5.726_104_271_910_387)),
            (c(3.0, 40.0), c(-52.689_155_060_822_64, 111.405_132_415_459_97)),
            (c(-15.3, -20.0), c(-79.231_950_916_497_54, -9.382_789_996_245_022)),
        ];
        for (s, want) in cases {
            let got = log_gamma(s).unwrap();
            assert!((got - want).norm() <= 1e-13 * want.norm(), "s={s}: {got} vs {want}");
        }
    }

    #[test]
    fn poles_are_rejected() {
        for n in 0..5 {
            let s = c(-(n as f64), 0.0);
            assert!(matches!(log_gamma(s), Err(Error::Pole(_))));
            assert_eq!(reciprocal_gamma(s), c(0.0, 0.0));
        }
        assert!(log_gamma(c(-3.0 + 1e-10, 0.0)).is_ok());
        assert!(log_gamma(c(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(reciprocal_gamma(c(0.0, 0.0)), c(0.0, 0.0));
        assert!(close(reciprocal_gamma(c(1.0, 0.0)), c(1.0, 0.0), 1e-15));
        assert!(close(reciprocal_gamma(c(3.0, 0.0)), c(0.5, 0.0), 1e-15));
    }

    #[test]
    fn recurrence_and_reflection_on_grid() {
        let mut checked = 0;
        for i in 0..10 {
            for j in 0..10 {
                let s = c(-5.0 + 15.0 * i as f64 / 9.0 + 0.037, -20.0 + 40.0 * j as f64 / 9.0);
                let n = s.re.round();
                if n <= 0.0 && (s - n).norm() <= 0.1 {
                    continue;
                }
                checked += 1;
                let g = gamma(s).unwrap();
                let g1 = gamma(s + 1.0).unwrap();
                assert!((g1 - s * g).norm() <= 1e-12 * g1.norm(), "recurrence at {s}");
                let refl = g * gamma(1.0 - s).unwrap();
                let want = PI / (PI * s).sin();
                assert!((refl - want).norm() <= 1e-11 * want.norm(), "reflection at {s}");
            }
        }
        assert!(checked > 90);
    }
}
