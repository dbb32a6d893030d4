//! Adaptive Gauss-Legendre quadrature along the straight segment `[0, z]`.
//!
//! Each panel is integrated with the 16-point rule and with the rule applied
//! to its two halves; a panel is accepted when the two agree to its share of
//! the absolute tolerance, otherwise both halves are refined.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kernel::Complex;

/// Evaluation budget for one adaptive integral.
pub const MAX_EVALUATIONS: usize = 1 << 20;

/// Panels narrower than this (in the segment parameter) are not split again.
const MIN_PANEL_WIDTH: f64 = 1e-13;

/// Positive nodes of the 16-point Gauss-Legendre rule on `[-1, 1]`.
pub const GL16_NODES: [f64; 8] = [
    0.095_012_509_837_637_440_185,
    0.281_603_550_779_258_913_23,
    0.458_016_777_657_227_386_34,
    0.617_876_244_402_643_748_45,
    0.755_404_408_355_003_033_9,
    0.865_631_202_387_831_743_88,
    0.944_575_023_073_232_576_08,
    0.989_400_934_991_649_932_6,
];

pub const GL16_WEIGHTS: [f64; 8] = [
    0.189_450_610_455_068_496_29,
    0.182_603_415_044_923_588_87,
    0.169_156_519_395_002_538_19,
    0.149_595_988_816_576_732_08,
    0.124_628_971_255_533_872_05,
    0.095_158_511_682_492_784_81,
    0.062_253_523_938_647_892_863,
    0.027_152_459_411_754_094_852,
];

fn zeros<const N: usize>() -> [Complex; N] {
    [Complex::new(0.0, 0.0); N]
}

/// Integrates `integrand(t z) z` for `t` in `[a, b]` with the 16-point rule.
fn panel<const N: usize, F>(integrand: &mut F, z: Complex, a: f64, b: f64) -> Result<[Complex; N]>
where
    F: FnMut(Complex) -> Result<[Complex; N]>,
{
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = zeros::<N>();
    for (&x, &w) in GL16_NODES.iter().zip(GL16_WEIGHTS.iter()) {
        for t in [mid - half * x, mid + half * x] {
            let vals = integrand(t * z)?;
            for (slot, v) in acc.iter_mut().zip(vals) {
                *slot += w * v;
            }
        }
    }
    let scale = half * z;
    Ok(acc.map(|v| v * scale))
}

/// `int_0^z integrand(t) dt` along the segment, each of the `N` components to
/// absolute accuracy `tol`.
pub fn integrate_segment<const N: usize, F>(mut integrand: F, z: Complex, tol: f64) -> Result<[Complex; N]>
where
    F: FnMut(Complex) -> Result<[Complex; N]>,
{
    if !(tol > 0.0) {
        return Err(Error::bad("quadrature tolerance must be positive"));
    }
    if z == Complex::new(0.0, 0.0) {
        return Ok(zeros());
    }
    let mut evaluations = 16;
    let whole = panel(&mut integrand, z, 0.0, 1.0)?;
    let mut stack: Vec<(f64, f64, [Complex; N])> = Vec::with_capacity(64);
    stack.push((0.0, 1.0, whole));
    let mut total = zeros::<N>();
    while let Some((a, b, coarse)) = stack.pop() {
        if evaluations + 32 > MAX_EVALUATIONS {
            return Err(Error::ToleranceNotMet { evaluations });
        }
        let mid = 0.5 * (a + b);
        let left = panel(&mut integrand, z, a, mid)?;
        let right = panel(&mut integrand, z, mid, b)?;
        evaluations += 32;
        let mut err: f64 = 0.0;
        for k in 0..N {
            err = err.max((left[k] + right[k] - coarse[k]).norm());
        }
        if err <= tol * (b - a) {
            for k in 0..N {
                total[k] += left[k] + right[k];
            }
        } else if b - a <= MIN_PANEL_WIDTH {
            return Err(Error::ToleranceNotMet { evaluations });
        } else {
            stack.push((mid, b, right));
            stack.push((a, mid, left));
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{abs, c, cis};

    /// Newton iteration on the three-term Legendre recurrence.
    fn legendre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for k in 1..=n / 2 {
            let mut x = libm::cos(core::f64::consts::PI * (k as f64 - 0.25) / (n as f64 + 0.5));
            let mut dp = 0.0;
            for _ in 0..50 {
                let (mut p0, mut p1) = (1.0, x);
                for j in 2..=n {
                    let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / dp;
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        nodes.reverse();
        weights.reverse();
        (nodes, weights)
    }

    #[test]
    fn tabulated_rule_matches_newton_rule() {
        let (nodes, weights) = legendre_rule(16);
        for k in 0..8 {
            assert!((nodes[k] - GL16_NODES[k]).abs() < 1e-15);
            assert!((weights[k] - GL16_WEIGHTS[k]).abs() < 1e-15);
        }
        let total: f64 = GL16_WEIGHTS.iter().sum();
        assert!((2.0 * total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn polynomial_is_exact() {
        let z = c(0.3, 0.4);
        let got = integrate_segment(|t| Ok([t * t * t]), z, 1e-12).unwrap();
        assert!(abs(got[0] - z.powu(4) / 4.0) < 1e-16);
    }

    #[test]
    fn peaked_integrand_meets_tolerance() {
        let pole = cis(0.2);
        let z = 0.95 * cis(0.2);
        let got = integrate_segment(|t| Ok([1.0 / (t - pole).powu(4)]), z, 1e-10).unwrap();
        let exact = (-1.0 / (3.0 * (z - pole).powu(3))) - (-1.0 / (3.0 * (-pole).powu(3)));
        assert!(abs(got[0] - exact) < 1e-10, "{}", abs(got[0] - exact));
    }

    #[test]
    fn empty_path_and_bad_tolerance() {
        let got = integrate_segment(|t| Ok([t]), c(0.0, 0.0), 1e-10).unwrap();
        assert_eq!(got[0], c(0.0, 0.0));
        assert!(integrate_segment(|t| Ok([t]), c(0.5, 0.0), 0.0).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // a jump never satisfies the panel test
        let res = integrate_segment(|t| Ok([if t.re < 0.3 { c(0.0, 0.0) } else { c(1.0, 0.0) }]), c(0.9, 0.0), 1e-300);
        assert!(matches!(res, Err(Error::ToleranceNotMet { .. })));
    }
}
