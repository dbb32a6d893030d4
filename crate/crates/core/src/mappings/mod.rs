//! Closed-form `h`, `g`, `f = h + conj(g)` and derivatives for the four
//! mapping families. All families share the dilatation `g'/h' = z^2`.

mod half_plane;
mod jun;
mod slit;
mod strip;

pub use half_plane::{
    eval_half_plane, half_plane_uv, residue_coeffs, HalfPlane, HalfPlaneBranch, ResidueCoeffs, SpecialCase,
};
pub use jun::{eval_jun_upper_half_plane, Jun};
pub use slit::{eval_slit, Slit, SLIT_TIP};
pub use strip::{eval_strip, Strip, StripBranch};

use crate::angle::Angle;
use crate::error::Result;
use crate::kernel::{check_disk, finite, Complex};

/// Smallest admissible `|cos 2 gamma|` (half-plane) or `|sin 2 alpha|` (strip)
/// away from the exactly special parameters.
pub const CONDITIONING_TAU: f64 = 1e-6;

/// Which root of the dilatation `z^2 = b^2` lifts the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// `b(z) = +z`
    Plus,
    /// `b(z) = -z`
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Values of the harmonic mapping and its analytic parts at one disk point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapEval {
    pub z: Complex,
    pub h: Complex,
    pub g: Complex,
    pub f: Complex,
    pub dh: Complex,
    pub dg: Complex,
}

impl MapEval {
    pub(crate) fn assemble(z: Complex, h: Complex, g: Complex, dh: Complex, dg: Complex) -> Result<Self> {
        let f = h + g.conj();
        Ok(MapEval {
            z,
            h: finite(h, "h")?,
            g: finite(g, "g")?,
            f: finite(f, "f")?,
            dh: finite(dh, "h'")?,
            dg: finite(dg, "g'")?,
        })
    }

    /// `|g' - z^2 h'| / |h'|`.
    pub fn dilatation_residual(&self) -> f64 {
        (self.dg - self.z * self.z * self.dh).norm() / self.dh.norm()
    }

    /// `|h'|^2 - |g'|^2`.
    pub fn jacobian(&self) -> f64 {
        self.dh.norm_sqr() - self.dg.norm_sqr()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    SlantedHalfPlane(HalfPlane),
    VerticalStrip(Strip),
    SingleSlit(Slit),
    JunUpperHalfPlane(Jun),
}

/// A validated mapping family with its parameters and the `b = +-z` branch.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainCase {
    pub family: Family,
    pub sign: Sign,
}

impl DomainCase {
    pub fn half_plane(gamma: Angle, sign: Sign) -> Result<Self> {
        Ok(DomainCase { family: Family::SlantedHalfPlane(HalfPlane::new(gamma)?), sign })
    }

    pub fn strip(alpha: Angle, sign: Sign) -> Result<Self> {
        Ok(DomainCase { family: Family::VerticalStrip(Strip::new(alpha)?), sign })
    }

    pub fn slit(sign: Sign) -> Self {
        DomainCase { family: Family::SingleSlit(Slit), sign }
    }

    pub fn jun(p: Complex, sign: Sign) -> Result<Self> {
        Ok(DomainCase { family: Family::JunUpperHalfPlane(Jun::new(p)?), sign })
    }

    pub fn with_sign(&self, sign: Sign) -> Self {
        DomainCase { family: self.family.clone(), sign }
    }

    /// Short family tag: `halfplane`, `strip`, `slit` or `jun`.
    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::SlantedHalfPlane(_) => "halfplane",
            Family::VerticalStrip(_) => "strip",
            Family::SingleSlit(_) => "slit",
            Family::JunUpperHalfPlane(_) => "jun",
        }
    }

    pub fn eval(&self, z: Complex) -> Result<MapEval> {
        check_disk(z)?;
        match &self.family {
            Family::SlantedHalfPlane(m) => m.eval(z),
            Family::VerticalStrip(m) => m.eval(z),
            Family::SingleSlit(m) => m.eval(z),
            Family::JunUpperHalfPlane(m) => m.eval(z),
        }
    }

    /// `(u, v)` from the standalone closed-form expressions, shifted by
    /// [`closed_uv_offset`](Self::closed_uv_offset) so that it agrees with
    /// `f(0)`.
    pub fn closed_uv(&self, z: Complex) -> Result<(f64, f64)> {
        let (u, v) = self.closed_uv_raw(z)?;
        let (du, dv) = self.closed_uv_offset()?;
        Ok((u - du, v - dv))
    }

    /// The closed forms evaluated literally, with `Log(-1) = i pi` wherever a
    /// logarithm of a ratio has a negative value at the origin.
    pub fn closed_uv_raw(&self, z: Complex) -> Result<(f64, f64)> {
        check_disk(z)?;
        match &self.family {
            Family::SlantedHalfPlane(m) => m.closed_uv_raw(z),
            Family::VerticalStrip(m) => m.closed_uv_raw(z),
            Family::SingleSlit(m) => m.closed_uv_raw(z),
            Family::JunUpperHalfPlane(m) => m.closed_uv_raw(z),
        }
    }

    /// Constant by which the literal closed forms miss `f(0)`.
    pub fn closed_uv_offset(&self) -> Result<(f64, f64)> {
        let zero = Complex::new(0.0, 0.0);
        let (u, v) = self.closed_uv_raw(zero)?;
        let f0 = self.eval(zero)?.f;
        Ok((u - f0.re, v - f0.im))
    }

    /// Height `F` for `b = +z`, normalized to `F(0) = 0`.
    pub(crate) fn height_plus(&self, z: Complex) -> Result<f64> {
        check_disk(z)?;
        match &self.family {
            Family::SlantedHalfPlane(m) => m.height_plus(z),
            Family::VerticalStrip(m) => m.height_plus(z),
            Family::SingleSlit(m) => m.height_plus(z),
            Family::JunUpperHalfPlane(m) => m.height_plus(z),
        }
    }

    /// Signed distance-like margin of `w` inside the image domain; positive
    /// means strictly inside.
    pub fn image_margin(&self, w: Complex) -> f64 {
        match &self.family {
            Family::SlantedHalfPlane(m) => m.image_margin(w),
            Family::VerticalStrip(m) => m.image_margin(w),
            Family::SingleSlit(m) => m.image_margin(w),
            Family::JunUpperHalfPlane(m) => m.image_margin(w),
        }
    }

    /// Whether `f(conj z) = conj f(z)` holds for this family.
    pub fn reflection_symmetric(&self) -> bool {
        matches!(self.family, Family::VerticalStrip(_) | Family::SingleSlit(_))
    }

    /// Residue coefficients, for the general-gamma half-plane branch only.
    pub fn residue_coeffs(&self) -> Option<ResidueCoeffs> {
        match &self.family {
            Family::SlantedHalfPlane(m) => match m.branch {
                HalfPlaneBranch::General(rc) => Some(rc),
                HalfPlaneBranch::Special(_) => None,
            },
            _ => None,
        }
    }
}
