//! Asymmetric vertical strips
//! `Omega_alpha = { w : (alpha - pi)/(2 sin alpha) < Re w < alpha/(2 sin alpha) }`,
//! `pi/2 <= alpha < pi`.
//!
//! `h + g = psi` with `psi(z) = Log((1 + z e^{i a})/(1 + z e^{-i a})) / (2 i sin a)`
//! and `h' = psi'/(1 + z^2)`.

use core::f64::consts::{FRAC_PI_2, PI};

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::kernel::{c, nlog, pole_term, Complex, I};

use super::{DomainCase, MapEval, Sign, CONDITIONING_TAU};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripBranch {
    /// `alpha = pi/2` exactly: `h' = 1/((z + i)^2 (z - i)^2)`.
    RightAngle,
    General,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Strip {
    pub alpha: Angle,
    pub branch: StripBranch,
    sin_a: f64,
    cos_a: f64,
    sin_2a: f64,
    /// `e^{i alpha}`
    rot: Complex,
}

impl Strip {
    pub fn new(alpha: Angle) -> Result<Self> {
        let in_range = match alpha {
            Angle::PiMultiple { num, den } => 2 * num >= den as i64 && num < den as i64,
            Angle::Radians(x) => (FRAC_PI_2..PI).contains(&x),
        };
        if !in_range {
            return Err(Error::bad(alloc::format!("alpha = {alpha} outside [pi/2, pi)")));
        }
        let branch =
            if alpha.as_pi_fraction() == Some((1, 2)) { StripBranch::RightAngle } else { StripBranch::General };
        let (sin_a, cos_a) = alpha.sin_cos();
        let sin_2a = alpha.double().sin();
        if branch == StripBranch::General && !(sin_2a.abs() >= CONDITIONING_TAU) {
            return Err(Error::IllConditioned { what: "|sin 2 alpha|", value: sin_2a.abs() });
        }
        Ok(Strip { alpha, branch, sin_a, cos_a, sin_2a, rot: c(cos_a, sin_a) })
    }

    /// `(lower, upper)` bounds of `Re w` on the image strip.
    pub fn bounds(&self) -> (f64, f64) {
        let a = self.alpha.radians_value();
        ((a - PI) / (2.0 * self.sin_a), a / (2.0 * self.sin_a))
    }

    /// `Log(1 + z e^{i a}) - Log(1 + z e^{-i a})`
    fn log_ratio(&self, z: Complex) -> Result<Complex> {
        Ok(nlog(-self.rot, z)? - nlog(-self.rot.conj(), z)?)
    }

    pub fn psi(&self, z: Complex) -> Result<Complex> {
        Ok(self.log_ratio(z)? / (2.0 * I * self.sin_a))
    }

    pub fn dpsi(&self, z: Complex) -> Result<Complex> {
        Ok(pole_term(z, -self.rot, 1)? * pole_term(z, -self.rot.conj(), 1)?)
    }

    fn h(&self, z: Complex) -> Result<Complex> {
        match self.branch {
            StripBranch::RightAngle => {
                // (1/4)[i Log(z+i) - i Log(z-i) + 1/(z+i) + 1/(z-i) + pi], shifted to h(0) = 0
                let logs = I * (nlog(I, z)? - nlog(-I, z)?);
                Ok(0.25 * (logs + pole_term(z, -I, 1)? + pole_term(z, I, 1)?))
            }
            StripBranch::General => {
                let log_quad = nlog(I, z)? + nlog(-I, z)?; // Log(1 + z^2)
                let k = 2.0 * self.sin_2a;
                Ok(-log_quad / (4.0 * self.cos_a) + (I * self.rot.conj() / k) * nlog(-self.rot.conj(), z)?
                    - (I * self.rot / k) * nlog(-self.rot, z)?)
            }
        }
    }

    pub(crate) fn eval(&self, z: Complex) -> Result<MapEval> {
        let psi = self.psi(z)?;
        let h = self.h(z)?;
        let dpsi = self.dpsi(z)?;
        let dh = dpsi * pole_term(z, I, 1)? * pole_term(z, -I, 1)?;
        MapEval::assemble(z, h, psi - h, dh, dpsi - dh)
    }

    pub(crate) fn closed_uv_raw(&self, z: Complex) -> Result<(f64, f64)> {
        let u = self.log_ratio(z)?.im / (2.0 * self.sin_a);
        let v = match self.branch {
            StripBranch::RightAngle => (z * pole_term(z, I, 1)? * pole_term(z, -I, 1)?).im,
            StripBranch::General => {
                let num = nlog(-self.rot, z)? + nlog(-self.rot.conj(), z)?;
                let den = nlog(I, z)? + nlog(-I, z)?;
                (num - den).im / (2.0 * self.cos_a)
            }
        };
        Ok((u, v))
    }

    /// `Re int_0^z 2 i t h'(t) dt`, which is `Im(1/(z^2 + 1))` for
    /// `alpha = pi/2`.
    pub(crate) fn height_plus(&self, z: Complex) -> Result<f64> {
        match self.branch {
            StripBranch::RightAngle => {
                let w = pole_term(z, I, 1)? * pole_term(z, -I, 1)?;
                Ok(w.im)
            }
            StripBranch::General => {
                // Re Log((z+i)/(z-i)) and Re Log((z+e^{ia})/(z+e^{-ia})) up to unit-modulus constants
                let l_i = nlog(I, z)? - nlog(-I, z)?;
                let l_a = nlog(-self.rot.conj(), z)? - nlog(-self.rot, z)?;
                let bracket = l_i / (2.0 * self.cos_a) - l_a / self.sin_2a;
                Ok(-bracket.re)
            }
        }
    }

    pub(crate) fn image_margin(&self, w: Complex) -> f64 {
        let (lo, hi) = self.bounds();
        (w.re - lo).min(hi - w.re)
    }
}

pub fn eval_strip(alpha: Angle, z: Complex) -> Result<MapEval> {
    DomainCase::strip(alpha, Sign::Plus)?.eval(z)
}
