use minsurf::presets;
use minsurf::verify::{injectivity_smoke, render_text, run_campaign, run_campaign_seeded, GridSpec};
use minsurf_core::{Angle, DomainCase, Sign};

#[test]
fn slit_small_grid_passes() {
    let report = run_campaign(&DomainCase::slit(Sign::Plus), GridSpec::new(20, 24, 0.95).unwrap()).unwrap();
    assert!(report.all_pass(), "{}", render_text(&report));
}

#[test]
fn right_angle_strip_conformality() {
    let case = DomainCase::strip(Angle::pi_frac(1, 2), Sign::Plus).unwrap();
    let report = run_campaign(&case, GridSpec::new(20, 24, 0.95).unwrap()).unwrap();
    assert!(report.check("conformality").unwrap().max_residual < 1e-10);
}

#[test]
fn injectivity_samples() {
    assert_eq!(injectivity_smoke(&DomainCase::slit(Sign::Plus), 2000), 0);
    let strip = DomainCase::strip(Angle::pi_frac(2, 3), Sign::Plus).unwrap();
    assert_eq!(injectivity_smoke(&strip, 2000), 0);
}

#[test]
fn every_preset_passes_default_campaign() {
    for sign in [Sign::Plus, Sign::Minus] {
        for case in presets::all(sign) {
            let report = run_campaign(&case, GridSpec::default()).unwrap();
            assert!(report.all_pass(), "{}", render_text(&report));
            assert!(report.elapsed < 5.0);
        }
    }
}

#[test]
fn seed_is_recorded_and_changes_nothing_for_passing_cases() {
    let case = DomainCase::jun(minsurf_core::Complex::new(0.3, 0.8), Sign::Minus).unwrap();
    let grid = GridSpec::new(8, 16, 0.9).unwrap();
    let a = run_campaign_seeded(&case, grid, 11).unwrap();
    let b = run_campaign_seeded(&case, grid, 11).unwrap();
    assert_eq!(a.seed, 11);
    assert_eq!(a.checks, b.checks);
}
