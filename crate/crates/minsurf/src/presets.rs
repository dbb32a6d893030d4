//! Standard parameter sets: eight settings per family.

use minsurf_core::{Angle, Complex, DomainCase, Sign};

/// `gamma = k pi/4`, `k = 0..8`, including the four special angles.
pub fn half_planes(sign: Sign) -> Vec<DomainCase> {
    (0..8).map(|k| DomainCase::half_plane(Angle::pi_frac(k, 4), sign).expect("valid gamma")).collect()
}

/// `alpha / pi` in `{1/2, 2/3, 3/4, 9/10, 3/5, 11/20, 7/10, 4/5}`.
pub fn strips(sign: Sign) -> Vec<DomainCase> {
    [(1, 2), (2, 3), (3, 4), (9, 10), (3, 5), (11, 20), (7, 10), (4, 5)]
        .into_iter()
        .map(|(n, d)| DomainCase::strip(Angle::pi_frac(n, d), sign).expect("valid alpha"))
        .collect()
}

/// The slit mapping has no parameter; the settings alternate the sign.
pub fn slits() -> Vec<DomainCase> {
    (0..8).map(|k| DomainCase::slit(if k % 2 == 0 { Sign::Plus } else { Sign::Minus })).collect()
}

pub const JUN_POINTS: [(f64, f64); 8] =
    [(0.0, 1.0), (1.0, 2.0), (-0.5, 0.3), (2.0, 0.5), (0.0, 3.0), (-3.0, 1.0), (0.7, 0.7), (0.1, 10.0)];

pub fn juns(sign: Sign) -> Vec<DomainCase> {
    JUN_POINTS.into_iter().map(|(a, b)| DomainCase::jun(Complex::new(a, b), sign).expect("Im p > 0")).collect()
}

/// All four families, eight settings each.
pub fn all(sign: Sign) -> Vec<DomainCase> {
    let mut out = half_planes(sign);
    out.extend(strips(sign));
    out.extend(slits());
    out.extend(juns(sign));
    out
}

/// Short human label such as `halfplane gamma=3pi/4 sign=+`.
pub fn label(case: &DomainCase) -> String {
    use minsurf_core::Family;
    let params = match &case.family {
        Family::SlantedHalfPlane(m) => format!(" gamma={}", m.gamma),
        Family::VerticalStrip(m) => format!(" alpha={}", m.alpha),
        Family::SingleSlit(_) => String::new(),
        Family::JunUpperHalfPlane(m) => format!(" p={},{}", m.p.re, m.p.im),
    };
    format!("{}{} sign={}", case.family_name(), params, case.sign.symbol())
}
