use hurwitz_core::hurwitz::{zeta_hermite, zeta_integral3, zeta_series};
use hurwitz_core::identities::{arctan_integral, legendre_lhs};
use hurwitz_core::numerics::{bracket_kernel, kernels::real_pow};
use hurwitz_core::{Complex64, Tolerances};
use proptest::prelude::*;

fn tol() -> Tolerances {
    Tolerances::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shift_recurrence(s_re in -4.0f64..6.0, s_im in -5.0f64..5.0, u in 0.2f64..5.0) {
        let s = Complex64::new(s_re, s_im);
        prop_assume!((s - 1.0).norm() > 0.05);
        let here = zeta_hermite(s, u, &tol()).unwrap();
        let next = zeta_hermite(s, u + 1.0, &tol()).unwrap();
        let shift = real_pow(u, -s);
        let residual = (here.value - next.value - shift).norm();
        prop_assert!(residual <= 1e-11 * shift.norm().max(1.0), "residual {residual:e}");
    }

    #[test]
    fn conjugate_symmetry(s_re in -3.0f64..5.0, s_im in 0.1f64..8.0, u in 0.3f64..4.0) {
        let s = Complex64::new(s_re, s_im);
        let up = zeta_hermite(s, u, &tol()).unwrap().value;
        let down = zeta_hermite(s.conj(), u, &tol()).unwrap().value;
        prop_assert!((up - down.conj()).norm() <= 1e-12 * up.norm().max(1.0));
    }

    #[test]
    fn real_arguments_give_real_values(s in -6.0f64..8.0, u in 0.2f64..6.0) {
        prop_assume!((s - 1.0).abs() > 0.05);
        let z = zeta_hermite(Complex64::new(s, 0.0), u, &tol()).unwrap();
        prop_assert!(z.value.im.abs() <= 1e-12 * z.value.re.abs().max(1.0));
    }

    #[test]
    fn hermite_agrees_with_series_off_grid(s in 1.2f64..9.0, u in 0.2f64..9.0) {
        let s = Complex64::new(s, 0.0);
        let h = zeta_hermite(s, u, &tol()).unwrap();
        let z = zeta_series(s, u, &tol()).unwrap();
        prop_assert!(z.converged && h.converged);
        prop_assert!((h.value - z.value).norm() <= 1e-11 * z.value.norm());
    }

    #[test]
    fn representations_agree_off_grid(s_re in -0.95f64..4.0, s_im in -3.0f64..3.0, u in 0.3f64..4.0) {
        let s = Complex64::new(s_re, s_im);
        prop_assume!((s - 1.0).norm() > 0.05);
        let h = zeta_hermite(s, u, &tol()).unwrap();
        let b = zeta_integral3(s, u, &tol()).unwrap();
        prop_assert!((h.value - b.value).norm() <= 1e-10);
    }

    #[test]
    fn bracket_is_positive_and_below_half(v in 1e-12f64..700.0) {
        let b = bracket_kernel(v).unwrap();
        prop_assert!(b > 0.0 && b < 0.5);
    }

    #[test]
    fn arctan_integral_increases_in_x(x in 0.0f64..8.0, dx in 0.05f64..2.0, u in 0.25f64..4.0) {
        let a = arctan_integral(x, u, &tol()).unwrap().value.re;
        let b = arctan_integral(x + dx, u, &tol()).unwrap().value.re;
        prop_assert!(b > a);
    }

    #[test]
    fn legendre_has_the_sign_of_t(t in 1e-3f64..60.0) {
        let v = legendre_lhs(t, &tol()).unwrap().value.re;
        prop_assert!(v * t >= 0.0);
    }
}

#[test]
fn odd_transforms_vanish_at_zero() {
    assert_eq!(arctan_integral(0.0, 1.3, &tol()).unwrap().value.re, 0.0);
    // t = 0 itself is outside the domain; the value tends to 0 like t/24
    let tiny = legendre_lhs(1e-12, &tol()).unwrap().value.re;
    assert!(tiny.abs() < 1e-13);
}
