//! Weierstrass-Enneper lift of the harmonic mappings.
//!
//! For `f = h + conj(g)` with `g' = b^2 h'`, `b = +-z`,
//!
//! ```text
//! phi1 = h' + g',   phi2 = -i (h' - g'),   phi3 = 2 i b h'
//! ```
//!
//! and the surface is `(Re int phi1, Re int phi2, Re int phi3)`. The closed
//! forms for the height `F` are integrated by hand per family; the
//! [`integrate_phi`] quadrature is the independent check on all of them.

use crate::error::Result;
use crate::kernel::{Complex, I};
use crate::mappings::{DomainCase, MapEval, Sign};
use crate::quadrature::integrate_segment;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiTriple {
    pub phi1: Complex,
    pub phi2: Complex,
    pub phi3: Complex,
}

impl PhiTriple {
    pub fn from_eval(m: &MapEval, sign: Sign) -> Self {
        PhiTriple { phi1: m.dh + m.dg, phi2: -I * (m.dh - m.dg), phi3: sign.factor() * 2.0 * I * m.z * m.dh }
    }

    /// `|phi1^2 + phi2^2 + phi3^2| / (|phi1|^2 + |phi2|^2 + |phi3|^2)`.
    pub fn conformality_residual(&self) -> f64 {
        let sum = self.phi1 * self.phi1 + self.phi2 * self.phi2 + self.phi3 * self.phi3;
        sum.norm() / (self.phi1.norm_sqr() + self.phi2.norm_sqr() + self.phi3.norm_sqr())
    }

    pub fn get(&self, which: PhiIndex) -> Complex {
        match which {
            PhiIndex::One => self.phi1,
            PhiIndex::Two => self.phi2,
            PhiIndex::Three => self.phi3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiIndex {
    One,
    Two,
    Three,
}

impl TryFrom<u8> for PhiIndex {
    type Error = crate::Error;

    fn try_from(k: u8) -> Result<Self> {
        match k {
            1 => Ok(PhiIndex::One),
            2 => Ok(PhiIndex::Two),
            3 => Ok(PhiIndex::Three),
            _ => Err(crate::Error::bad(alloc::format!("phi index {k} not in 1..=3"))),
        }
    }
}

/// A point `(u, v, F(u, v))` of the minimal surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub u: f64,
    pub v: f64,
    pub height: f64,
}

impl SurfacePoint {
    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.v.is_finite() && self.height.is_finite()
    }
}

pub fn phi_triple(case: &DomainCase, z: Complex) -> Result<PhiTriple> {
    Ok(PhiTriple::from_eval(&case.eval(z)?, case.sign))
}

/// Closed-form height with `F(0) = 0`; flipping the case's sign negates it.
pub fn height_f(case: &DomainCase, z: Complex) -> Result<f64> {
    Ok(case.sign.factor() * case.height_plus(z)?)
}

/// `int_0^z phi_which(t) dt` along the segment to absolute accuracy `tol`.
pub fn integrate_phi(case: &DomainCase, z: Complex, which: PhiIndex, tol: f64) -> Result<Complex> {
    let [v] = integrate_segment(|t| Ok([phi_triple(case, t)?.get(which)]), z, tol)?;
    Ok(v)
}

/// Segment integrals of `h'`, `g'` and the three `phi`s from one adaptive pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleIntegrals {
    pub h: Complex,
    pub g: Complex,
    pub phi: [Complex; 3],
}

pub fn oracle_integrals(case: &DomainCase, z: Complex, tol: f64) -> Result<OracleIntegrals> {
    let [h, g, p1, p2, p3] = integrate_segment(
        |t| {
            let m = case.eval(t)?;
            let phi = PhiTriple::from_eval(&m, case.sign);
            Ok([m.dh, m.dg, phi.phi1, phi.phi2, phi.phi3])
        },
        z,
        tol,
    )?;
    Ok(OracleIntegrals { h, g, phi: [p1, p2, p3] })
}

pub fn surface_point(case: &DomainCase, z: Complex) -> Result<SurfacePoint> {
    let (u, v) = case.closed_uv(z)?;
    let height = height_f(case, z)?;
    Ok(SurfacePoint { u, v, height })
}
