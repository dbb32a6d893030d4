//! Closed-form `(u, v)`, special-angle limits and spot values.

mod common;

use common::{all_cases, c, grid};
use minsurf_core::{
    eval_half_plane, eval_jun_upper_half_plane, eval_slit, eval_strip, half_plane_uv, height_f, Angle, DomainCase,
    Error, Sign,
};

#[test]
fn closed_forms_match_construction_with_zero_offset() {
    for case in all_cases(Sign::Plus) {
        let (du, dv) = case.closed_uv_offset().unwrap();
        assert!(du.abs() < 1e-12 && dv.abs() < 1e-12, "{case:?}: offset ({du}, {dv})");
        for z in grid(10, 12, 0.95) {
            let f = case.eval(z).unwrap().f;
            let (u, v) = case.closed_uv(z).unwrap();
            let scale = 1.0f64.max(f.norm());
            assert!((u - f.re).abs() < 1e-10 * scale && (v - f.im).abs() < 1e-10 * scale, "{case:?} at {z}");
        }
    }
}

#[test]
fn sign_flip_negates_height_exactly() {
    for case in all_cases(Sign::Plus) {
        let minus = case.with_sign(Sign::Minus);
        for z in grid(4, 8, 0.9) {
            assert_eq!(height_f(&minus, z).unwrap(), -height_f(&case, z).unwrap());
        }
    }
}

#[test]
fn general_formula_tends_to_quarter_angle_case() {
    let z = c(0.3, 0.2);
    for k in [1, 3, 5, 7] {
        let exact = eval_half_plane(Angle::pi_frac(k, 4), z).unwrap().f;
        let base = k as f64 * core::f64::consts::FRAC_PI_4;
        let gaps: Vec<f64> = [1e-2, 1e-3, 1e-4]
            .into_iter()
            .map(|eps| (eval_half_plane(Angle::Radians(base + eps), z).unwrap().f - exact).norm())
            .collect();
        assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "k = {k}: {gaps:?}");
        assert!(gaps[2] < 1e-3, "k = {k}: {gaps:?}");
    }
}

#[test]
fn near_quarter_float_is_ill_conditioned() {
    let err = DomainCase::half_plane(Angle::Radians(core::f64::consts::FRAC_PI_4 - 1e-8), Sign::Plus).unwrap_err();
    assert!(matches!(err, Error::IllConditioned { .. }));
    let err = DomainCase::half_plane("0.7853981633974483".parse().unwrap(), Sign::Plus).unwrap_err();
    assert!(matches!(err, Error::IllConditioned { .. }));
    assert!(DomainCase::half_plane("pi/4".parse().unwrap(), Sign::Plus).is_ok());
}

#[test]
fn quarter_angle_closed_form_at_imaginary_point() {
    // gamma = 3pi/4: P = e^{-3 i pi/4}; compare the closed-form pair with f
    let z = c(0.0, 0.3);
    let (u, v) = half_plane_uv(Angle::pi_frac(3, 4), z).unwrap();
    let f = eval_half_plane(Angle::pi_frac(3, 4), z).unwrap().f;
    assert!((u - f.re).abs() < 1e-13 && (v - f.im).abs() < 1e-13);
}

#[test]
fn spot_values() {
    for case in all_cases(Sign::Plus).into_iter().filter(|d| d.family_name() != "jun") {
        assert_eq!(case.eval(c(0.0, 0.0)).unwrap().f, c(0.0, 0.0));
    }
    assert_eq!(eval_jun_upper_half_plane(c(0.25, 1.5), c(0.0, 0.0)).unwrap(), (0.25, 1.5));

    let f = eval_slit(c(0.5, 0.0)).unwrap().f;
    assert!((f - c(8.0 / 3.0, 0.0)).norm() < 1e-14);
    let f = eval_slit(c(0.0, 0.5)).unwrap().f;
    assert!((f - c(-98.0 / 375.0, 6.0 / 25.0)).norm() < 1e-14, "{f}");

    let f = eval_strip(Angle::pi_frac(1, 2), c(0.0, 0.5)).unwrap().f;
    assert!((f - c(0.0, 2.0 / 3.0)).norm() < 1e-14, "{f}");

    let f = eval_half_plane(Angle::pi_frac(0, 1), c(-0.999, 0.0)).unwrap().f;
    assert!((f - c(-0.5, 0.0)).norm() < 5e-3, "{f}");
}

#[test]
fn slit_tip_is_the_radial_limit() {
    let mut prev = f64::INFINITY;
    for r in [0.9, 0.99, 0.999, 0.9999] {
        let f = eval_slit(c(-r, 0.0)).unwrap().f;
        assert!(f.im.abs() < 1e-15);
        let gap = (f.re - minsurf_core::mappings::SLIT_TIP).abs();
        assert!(gap < prev);
        prev = gap;
    }
    assert!(prev < 1e-4);
}
