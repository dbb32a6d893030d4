//! Image curves of circles `|z| = r` and radial spokes, the planar half of
//! each illustration.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::kernel::{cis, Complex};
use crate::mappings::DomainCase;

/// Spokes run out to this radius when no rings are requested.
pub const DEFAULT_SPOKE_RADIUS: f64 = 0.99;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveKind {
    Ring { radius: f64 },
    Spoke { theta: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub kind: CurveKind,
    /// `(u, v)` points.
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub case: DomainCase,
    pub curves: Vec<Polyline>,
}

impl FigureData {
    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }
}

/// Rings are closed (`pts + 1` points, last equal to first); spokes run from
/// the origin to the largest ring radius with `pts` points.
pub fn figure_data(case: &DomainCase, rings: &[f64], spokes: usize, pts: usize) -> Result<FigureData> {
    if pts < 16 {
        return Err(Error::bad(alloc::format!("pts = {pts} must be at least 16")));
    }
    if let Some(r) = rings.iter().find(|&&r| !(r > 0.0 && r <= 0.99)) {
        return Err(Error::bad(alloc::format!("ring radius {r} outside (0, 0.99]")));
    }
    let image = |z: Complex| -> Result<(f64, f64)> {
        let w = case.eval(z)?.f;
        Ok((w.re, w.im))
    };
    let mut curves = Vec::with_capacity(rings.len() + spokes);
    for &radius in rings {
        let points =
            (0..=pts).map(|j| image(radius * cis(TAU * (j % pts) as f64 / pts as f64))).collect::<Result<Vec<_>>>()?;
        curves.push(Polyline { kind: CurveKind::Ring { radius }, points });
    }
    let reach = rings.iter().copied().fold(f64::NAN, f64::max);
    let reach = if reach.is_nan() { DEFAULT_SPOKE_RADIUS } else { reach };
    for k in 0..spokes {
        let theta = TAU * k as f64 / spokes as f64;
        let dir = cis(theta);
        let points = (0..pts).map(|j| image(reach * j as f64 / (pts - 1) as f64 * dir)).collect::<Result<Vec<_>>>()?;
        curves.push(Polyline { kind: CurveKind::Spoke { theta }, points });
    }
    Ok(FigureData { case: case.clone(), curves })
}
