//! The upper half-plane with `f(0) = p`.
//!
//! With `K(z) = (1/2) Log((1+z)/(1-z)) + z/(1-z)^2` the decomposition is
//! `h + g = i p2 K + p` and `h - g = 2 i p2 z/(1 - z) + p`, which keeps
//! `h(0) = p`, `g(0) = 0` and `h' = 2 i p2 / ((1 - z)^3 (1 + z))`.

use crate::error::{Error, Result};
use crate::kernel::{finite, nlog, pole_term, Complex, I};

use super::{DomainCase, MapEval, Sign};

const ONE: Complex = Complex::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jun {
    pub p: Complex,
}

impl Jun {
    pub fn new(p: Complex) -> Result<Self> {
        let p = finite(p, "p")?;
        if !(p.im > 0.0) {
            return Err(Error::bad(alloc::format!("jun requires Im p > 0, got {p}")));
        }
        Ok(Jun { p })
    }

    /// `(1/2) Log((1+z)/(1-z))`
    fn atanh(z: Complex) -> Result<Complex> {
        Ok(0.5 * (nlog(-ONE, z)? - nlog(ONE, z)?))
    }

    fn k(z: Complex) -> Result<Complex> {
        Ok(Self::atanh(z)? + z * pole_term(z, ONE, 2)?)
    }

    pub(crate) fn eval(&self, z: Complex) -> Result<MapEval> {
        let p2 = self.p.im;
        let k = Self::k(z)?;
        let p1 = pole_term(z, ONE, 1)?;
        let chord = -2.0 * z * p1; // 2z/(1-z)
        let half = 0.5 * I * p2;
        let h = self.p + half * (k + chord);
        let g = half * (k - chord);
        let dh = 2.0 * I * p2 * (-p1 * p1 * p1) * pole_term(z, -ONE, 1)?;
        let dg = dh - 2.0 * I * p2 * p1 * p1;
        MapEval::assemble(z, h, g, dh, dg)
    }

    pub(crate) fn closed_uv_raw(&self, z: Complex) -> Result<(f64, f64)> {
        let (p1, p2) = (self.p.re, self.p.im);
        let k = Self::k(z)?;
        let u = (p1 + 0.5 * I * p2 * (k - k.conj())).re;
        let cayley = -(1.0 + z) * pole_term(z, ONE, 1)?;
        let v = 0.5 * p2 * (cayley + cayley.conj()).re;
        Ok((u, v))
    }

    /// `-p2 Re(z/(1-z)^2 - (1/2) Log((1+z)/(1-z)))`
    pub(crate) fn height_plus(&self, z: Complex) -> Result<f64> {
        let m = z * pole_term(z, ONE, 2)? - Self::atanh(z)?;
        Ok(-self.p.im * m.re)
    }

    pub(crate) fn image_margin(&self, w: Complex) -> f64 {
        w.im
    }
}

/// Closed-form `(u, v)` over the upper half-plane, with `(u, v)(0) = p`.
pub fn eval_jun_upper_half_plane(p: Complex, z: Complex) -> Result<(f64, f64)> {
    DomainCase::jun(p, Sign::Plus)?.closed_uv_raw(z)
}
