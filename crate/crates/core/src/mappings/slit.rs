//! The plane slit along the negative real axis. `h - g = z/(1 - z)^2` and
//! `h' = 1/(1 - z)^4`.

use crate::error::Result;
use crate::kernel::{c, pole_term, Complex};

use super::{DomainCase, MapEval, Sign};

/// Radial limit of `f(r)` as `r -> -1`; the slit is `(-inf, -1/3]`.
pub const SLIT_TIP: f64 = -1.0 / 3.0;

/// Clearance required between `f(z)` and the slit.
pub const SLIT_CLEARANCE: f64 = 1e-6;

const ONE: Complex = Complex::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Slit;

impl Slit {
    pub(crate) fn eval(&self, z: Complex) -> Result<MapEval> {
        let p1 = pole_term(z, ONE, 1)?;
        let p2 = p1 * p1;
        let p3 = p2 * p1;
        // h = 1/(3(1-z)^3) - 1/3 and 1/(1-z)^3 = -1/(z-1)^3
        let h = -p3 / 3.0 - c(1.0 / 3.0, 0.0);
        let koebe = z * p2;
        let dh = p2 * p2;
        // h' - g' = (1+z)/(1-z)^3
        let dg = dh + (1.0 + z) * p3;
        MapEval::assemble(z, h, h - koebe, dh, dg)
    }

    pub(crate) fn closed_uv_raw(&self, z: Complex) -> Result<(f64, f64)> {
        let p1 = pole_term(z, ONE, 1)?;
        let p2 = p1 * p1;
        let z2 = z * z;
        let num = 2.0 * z2 * z - 3.0 * z2 + 3.0 * z;
        let u = (-num * p2 * p1 / 3.0).re;
        let v = (z * p2).im;
        Ok((u, v))
    }

    /// `Im(1/(z-1)^2 + 2/(3(z-1)^3))`
    pub(crate) fn height_plus(&self, z: Complex) -> Result<f64> {
        let p1 = pole_term(z, ONE, 1)?;
        let p2 = p1 * p1;
        Ok((p2 + 2.0 * p2 * p1 / 3.0).im)
    }

    pub(crate) fn image_margin(&self, w: Complex) -> f64 {
        let start = SLIT_TIP - SLIT_CLEARANCE;
        let distance = if w.re <= start { w.im.abs() } else { libm::hypot(w.re - start, w.im) };
        distance - SLIT_CLEARANCE
    }
}

pub fn eval_slit(z: Complex) -> Result<MapEval> {
    DomainCase::slit(Sign::Plus).eval(z)
}
