//! Polar-grid triangulation of the disk `|z| <= r_max` carrying surface
//! points.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::kernel::{cis, Complex};
use crate::mappings::DomainCase;
use crate::weierstrass::{surface_point, SurfacePoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshVertex {
    pub z: Complex,
    pub point: SurfacePoint,
}

/// Vertex 0 is the center; ring `i` (1-based) angle `j` sits at index
/// `1 + (i - 1) * ntheta + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskMesh {
    pub nr: usize,
    pub ntheta: usize,
    pub r_max: f64,
    pub vertices: Vec<MeshVertex>,
    pub faces: Vec<[usize; 3]>,
}

pub fn check_grid(nr: usize, ntheta: usize, r_max: f64) -> Result<()> {
    if nr < 2 {
        return Err(Error::bad(alloc::format!("nr = {nr} must be at least 2")));
    }
    if ntheta < 8 {
        return Err(Error::bad(alloc::format!("ntheta = {ntheta} must be at least 8")));
    }
    if !(r_max > 0.0 && r_max <= 0.99) {
        return Err(Error::bad(alloc::format!("r_max = {r_max} outside (0, 0.99]")));
    }
    Ok(())
}

/// Polar grid nodes `r_i = r_max i / nr`, `theta_j = 2 pi j / ntheta`,
/// center first.
pub fn polar_nodes(nr: usize, ntheta: usize, r_max: f64) -> Vec<Complex> {
    let mut out = Vec::with_capacity(nr * ntheta + 1);
    out.push(Complex::new(0.0, 0.0));
    for i in 1..=nr {
        let r = r_max * i as f64 / nr as f64;
        for j in 0..ntheta {
            out.push(r * cis(TAU * j as f64 / ntheta as f64));
        }
    }
    out
}

fn triangulate(nr: usize, ntheta: usize) -> Vec<[usize; 3]> {
    let idx = |i: usize, j: usize| 1 + (i - 1) * ntheta + (j % ntheta);
    let mut faces = Vec::with_capacity(ntheta * (2 * nr - 1));
    for j in 0..ntheta {
        faces.push([0, idx(1, j), idx(1, j + 1)]);
    }
    for i in 1..nr {
        for j in 0..ntheta {
            faces.push([idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)]);
            faces.push([idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)]);
        }
    }
    faces
}

pub fn build_mesh(case: &DomainCase, nr: usize, ntheta: usize, r_max: f64) -> Result<DiskMesh> {
    check_grid(nr, ntheta, r_max)?;
    let vertices = polar_nodes(nr, ntheta, r_max)
        .into_iter()
        .map(|z| Ok(MeshVertex { z, point: surface_point(case, z)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiskMesh { nr, ntheta, r_max, vertices, faces: triangulate(nr, ntheta) })
}

impl DiskMesh {
    /// Twice the signed area of face `k` in the parameter disk.
    pub fn parameter_area2(&self, k: usize) -> f64 {
        let [a, b, c] = self.faces[k].map(|i| self.vertices[i].z);
        let (e1, e2) = (b - a, c - a);
        e1.re * e2.im - e1.im * e2.re
    }

    /// Twice the signed area of face `k` in the `(u, v)` projection.
    pub fn projected_area2(&self, k: usize) -> f64 {
        let [a, b, c] = self.faces[k].map(|i| self.vertices[i].point);
        (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u)
    }
}
