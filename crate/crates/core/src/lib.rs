//! Harmonic univalent mappings of the unit disk onto slanted half-planes,
//! asymmetric vertical strips, the single-slit plane and the upper
//! half-plane, together with the minimal surfaces they project from.
//!
//! Every mapping is of the form `f = h + conj(g)` with dilatation
//! `g'/h' = z^2`. The Weierstrass-Enneper data
//!
//! ```text
//! phi1 = h' + g',   phi2 = -i (h' - g'),   phi3 = 2 i b h',   b(z) = +-z
//! ```
//!
//! lifts `f` to a minimal surface `(u, v, F)` over the image domain.
//!
//! The crate is `no_std` (it needs `alloc` for meshes, figure polylines and
//! the quadrature work stack). IO, reports and the CLI live in the
//! `minsurf` crate.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

extern crate alloc;

pub mod angle;
pub mod error;
pub mod figure;
pub mod kernel;
pub mod mappings;
pub mod mesh;
pub mod quadrature;
pub mod weierstrass;

pub use angle::Angle;
pub use error::{Error, Result};
pub use kernel::{nlog, pole_term, principal_log, Complex};
pub use mappings::{
    eval_half_plane, eval_jun_upper_half_plane, eval_slit, eval_strip, half_plane_uv, residue_coeffs, DomainCase,
    Family, HalfPlane, Jun, MapEval, ResidueCoeffs, Sign, Slit, Strip,
};
pub use weierstrass::{height_f, integrate_phi, phi_triple, surface_point, PhiIndex, PhiTriple, SurfacePoint};
