//! Slanted half-planes `H_gamma = { w : Re(e^{i gamma} w) > -1/2 }`.
//!
//! `h + e^{-2 i gamma} g = z / (1 - e^{i gamma} z)` together with `g' = z^2 h'`
//! gives
//!
//! ```text
//! h'(z) = 1 / ((z - i e^{i gamma}) (z + i e^{i gamma}) (z - e^{-i gamma})^2)
//! ```
//!
//! When `cos 2 gamma = 0` one simple pole merges with the double pole and `h`
//! has a triple-pole antiderivative; otherwise the partial fractions carry the
//! residue coefficients `A, B, C, D`.

use core::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::kernel::{c, nlog, pole_term, Complex, I};

use super::{DomainCase, MapEval, Sign, CONDITIONING_TAU};

/// Partial-fraction coefficients of `h'` for non-special `gamma`:
/// `h' = A/(z + i e^{i g}) + B/(z - i e^{i g}) + C/(z - e^{-i g}) + D/(z - e^{-i g})^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidueCoeffs {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub d: Complex,
}

impl ResidueCoeffs {
    /// `|A + B + C|`, which vanishes identically.
    pub fn sum_residual(&self) -> f64 {
        (self.a + self.b + self.c).norm()
    }
}

/// `1 - sin 2g` and `1 + sin 2g`, each evaluated without cancellation via
/// `(1 - s)(1 + s) = cos^2 2g`.
fn one_minus_plus(s2: f64, c2: f64) -> (f64, f64) {
    let cc = c2 * c2;
    if s2 > 0.0 {
        (cc / (1.0 + s2), 1.0 + s2)
    } else {
        (1.0 - s2, cc / (1.0 - s2))
    }
}

fn check_gamma(gamma: Angle) -> Result<()> {
    let ok = match gamma {
        Angle::PiMultiple { num, den } => num >= 0 && (num as u64) < 2 * den,
        Angle::Radians(x) => (0.0..TAU).contains(&x),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::bad(alloc::format!("gamma = {gamma} outside [0, 2pi)")))
    }
}

pub fn residue_coeffs(gamma: Angle) -> Result<ResidueCoeffs> {
    let (s2, c2) = gamma.double().sin_cos();
    if !(c2.abs() >= CONDITIONING_TAU) {
        return Err(Error::IllConditioned { what: "|cos 2 gamma|", value: c2.abs() });
    }
    let (sin_g, cos_g) = gamma.sin_cos();
    let e_minus = c(cos_g, -sin_g);
    let (one_minus, one_plus) = one_minus_plus(s2, c2);
    Ok(ResidueCoeffs {
        a: e_minus / (4.0 * one_minus),
        b: e_minus / (4.0 * one_plus),
        c: -e_minus / (2.0 * c2 * c2),
        d: c(1.0 / (2.0 * c2), 0.0),
    })
}

/// Antiderivative data for `gamma` in `{pi/4, 3pi/4, 5pi/4, 7pi/4}`:
/// `h = k Log((z - P)/(z + P)) + a1/(z - P) + a2/(z - P)^2 + const` with the
/// triple pole `P = e^{-i gamma}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialCase {
    /// `gamma = quarter * pi / 4`, `quarter` odd.
    pub quarter: u8,
    pub pole: Complex,
    pub log_coef: Complex,
    pub a1: Complex,
    pub a2: Complex,
}

impl SpecialCase {
    pub fn for_quarter(quarter: u8) -> Option<Self> {
        let h = FRAC_1_SQRT_2;
        let e_p = c(h, h); // e^{i pi/4}
        let e_m = c(h, -h); // e^{-i pi/4}
        let e_3p = c(-h, h); // e^{3 i pi/4}
        let (pole, log_coef, a1, a2) = match quarter {
            1 => (e_m, e_3p / 8.0, I / 4.0, -e_p / 4.0),
            3 => (-e_p, e_p / 8.0, -I / 4.0, e_m / 4.0),
            5 => (-e_m, e_m / 8.0, I / 4.0, e_p / 4.0),
            7 => (e_p, -e_p / 8.0, -I / 4.0, -e_m / 4.0),
            _ => return None,
        };
        Some(SpecialCase { quarter, pole, log_coef, a1, a2 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HalfPlaneBranch {
    Special(SpecialCase),
    General(ResidueCoeffs),
}

#[derive(Debug, Clone, PartialEq)]
pub struct HalfPlane {
    pub gamma: Angle,
    pub branch: HalfPlaneBranch,
    sin_g: f64,
    cos_g: f64,
    sin_2g: f64,
    cos_2g: f64,
    /// `e^{i gamma}`
    rot: Complex,
    /// `e^{2 i gamma}`
    rot2: Complex,
    /// `e^{-i gamma}`, the double (or triple) pole
    q: Complex,
    /// `i e^{i gamma}`
    s: Complex,
    h_origin: Complex,
}

impl HalfPlane {
    pub fn new(gamma: Angle) -> Result<Self> {
        check_gamma(gamma)?;
        let (sin_g, cos_g) = gamma.sin_cos();
        let (sin_2g, cos_2g) = gamma.double().sin_cos();
        let rot = c(cos_g, sin_g);
        let special = match gamma.as_pi_fraction() {
            Some((num, 4)) => SpecialCase::for_quarter(num as u8),
            _ => None,
        };
        let branch = match special {
            Some(sc) => HalfPlaneBranch::Special(sc),
            None => HalfPlaneBranch::General(residue_coeffs(gamma)?),
        };
        let mut hp = HalfPlane {
            gamma,
            branch,
            sin_g,
            cos_g,
            sin_2g,
            cos_2g,
            rot,
            rot2: c(cos_2g, sin_2g),
            q: rot.conj(),
            s: I * rot,
            h_origin: Complex::new(0.0, 0.0),
        };
        hp.h_origin = hp.h_expr(Complex::new(0.0, 0.0))?;
        Ok(hp)
    }

    pub fn is_special(&self) -> bool {
        matches!(self.branch, HalfPlaneBranch::Special(_))
    }

    /// The antiderivative of `h'` before the origin shift.
    fn h_expr(&self, z: Complex) -> Result<Complex> {
        match self.branch {
            HalfPlaneBranch::Special(sc) => {
                let p_bar = sc.pole.conj();
                let log_ratio = nlog(p_bar, z)? - nlog(-p_bar, z)?;
                Ok(sc.log_coef * log_ratio + sc.a1 * pole_term(z, sc.pole, 1)? + sc.a2 * pole_term(z, sc.pole, 2)?)
            }
            HalfPlaneBranch::General(rc) => {
                let s_bar = self.s.conj();
                Ok(rc.a * nlog(-s_bar, z)? + rc.b * nlog(s_bar, z)? + rc.c * nlog(self.rot, z)?
                    - rc.d * pole_term(z, self.q, 1)?
                    - rc.d * self.rot)
            }
        }
    }

    pub(crate) fn eval(&self, z: Complex) -> Result<MapEval> {
        let h = self.h_expr(z)? - self.h_origin;
        // g = -1/(z - e^{-ig}) - e^{2ig} h - e^{ig}, with the constants folded
        let g = -self.rot * z * pole_term(z, self.q, 1)? - self.rot2 * h;
        let dq2 = pole_term(z, self.q, 2)?;
        let dh = pole_term(z, self.s, 1)? * pole_term(z, -self.s, 1)? * dq2;
        let dg = dq2 - self.rot2 * dh;
        MapEval::assemble(z, h, g, dh, dg)
    }

    pub(crate) fn closed_uv_raw(&self, z: Complex) -> Result<(f64, f64)> {
        let (sg, cg, s2, c2) = (self.sin_g, self.cos_g, self.sin_2g, self.cos_2g);
        match self.branch {
            HalfPlaneBranch::Special(_) => {
                let cp = self.q;
                // Log((z - c)/(z + c)) on the principal branch at the origin
                let log_ratio = nlog(cp.conj(), z)? - nlog(-cp.conj(), z)? + c(0.0, PI);
                let p1 = pole_term(z, cp, 1)?;
                let p2 = pole_term(z, cp, 2)?;
                let u = PI * sg / 4.0
                    - cg
                    - ((sg / 4.0) * log_ratio + (s2 / 4.0) * p1).im
                    - ((cg / 2.0) * p2 + 0.75 * p1).re;
                let v = PI * cg / 4.0 + sg - ((cg / 4.0) * log_ratio - 0.75 * p1).im
                    + ((s2 / 4.0) * p1 - (sg / 2.0) * p2).re;
                Ok((u, v))
            }
            HalfPlaneBranch::General(_) => {
                let (one_minus, one_plus) = one_minus_plus(s2, c2);
                let s_bar = self.s.conj();
                let l1 = nlog(-s_bar, z)?;
                let l2 = nlog(s_bar, z)?;
                let l3 = nlog(self.rot, z)?;
                let cc = c2 * c2;
                let tail = (self.q * pole_term(z, self.q, 1)?).re;
                let u = (sg / (2.0 * one_minus) * l1 + sg / (2.0 * one_plus) * l2 - sg / cc * l3).im
                    - cg / c2
                    - cg / c2 * tail;
                let v = (cg / (2.0 * one_minus) * l1 + cg / (2.0 * one_plus) * l2 - cg / cc * l3).im
                    - sg / c2
                    - sg / c2 * tail;
                Ok((u, v))
            }
        }
    }

    fn height_bracket(&self, z: Complex) -> Result<Complex> {
        let (s2, c2) = (self.sin_2g, self.cos_2g);
        match self.branch {
            HalfPlaneBranch::Special(_) => {
                let cp = self.q;
                // Re Log((z + c)/(z - c)) = ln|z + c| - ln|z - c|
                let log_ratio = nlog(-cp.conj(), z)? - nlog(cp.conj(), z)?;
                Ok((s2 / 4.0) * log_ratio
                    + 0.5 * (I * self.rot) * pole_term(z, cp, 1)?
                    + 0.5 * I * pole_term(z, cp, 2)?)
            }
            HalfPlaneBranch::General(_) => {
                let (one_minus, one_plus) = one_minus_plus(s2, c2);
                let s_bar = self.s.conj();
                Ok(nlog(-s_bar, z)? / (2.0 * one_minus)
                    - nlog(s_bar, z)? / (2.0 * one_plus)
                    - (s2 / (c2 * c2)) * nlog(self.rot, z)?
                    - (I * self.q / c2) * pole_term(z, self.q, 1)?)
            }
        }
    }

    /// `Re int_0^z 2 i t h'(t) dt`. The special-gamma bracket is the
    /// negative of this integral.
    pub(crate) fn height_plus(&self, z: Complex) -> Result<f64> {
        let zero = Complex::new(0.0, 0.0);
        let delta = (self.height_bracket(z)? - self.height_bracket(zero)?).re;
        Ok(if self.is_special() { -delta } else { delta })
    }

    pub(crate) fn image_margin(&self, w: Complex) -> f64 {
        (self.rot * w).re + 0.5
    }
}

pub fn eval_half_plane(gamma: Angle, z: Complex) -> Result<MapEval> {
    DomainCase::half_plane(gamma, Sign::Plus)?.eval(z)
}

/// Closed-form `(u, v)` for the half-plane family, normalized to
/// `f(0) = 0`.
pub fn half_plane_uv(gamma: Angle, z: Complex) -> Result<(f64, f64)> {
    DomainCase::half_plane(gamma, Sign::Plus)?.closed_uv(z)
}
