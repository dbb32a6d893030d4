//! Branch-safe complex scalar operations shared by every evaluator.

use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

/// Minimum admissible distance between an evaluation point and a pole.
pub const NEAR_POLE_GUARD: f64 = 1e-9;

pub const I: Complex = Complex::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// `e^{i t}`.
#[inline]
pub fn cis(t: f64) -> Complex {
    Complex::new(libm::cos(t), libm::sin(t))
}

#[inline]
pub fn abs(z: Complex) -> f64 {
    libm::hypot(z.re, z.im)
}

#[inline]
pub fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Principal logarithm with imaginary part in `(-pi, pi]`.
///
/// A negative real axis approached from below (`im == -0.0`) still maps to
/// `+i pi`.
pub fn principal_log(z: Complex) -> Result<Complex> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let arg = if z.im == 0.0 && z.re < 0.0 { core::f64::consts::PI } else { libm::atan2(z.im, z.re) };
    Ok(Complex::new(libm::log(abs(z)), arg))
}

/// Zero-normalized logarithm `Log(1 - z a)` for `|z| < 1`, `|a| <= 1`.
///
/// The argument `1 - z a` stays in the right half-plane, so the principal
/// branch is analytic over the whole disk and `nlog(a, 0) == 0` exactly.
/// The real part goes through `log1p` so small `z` keeps full relative
/// precision.
pub fn nlog(a: Complex, z: Complex) -> Result<Complex> {
    check_disk(z)?;
    if !(abs(a) <= 1.0 + 1e-12) {
        return Err(Error::bad("nlog anchor must satisfy |a| <= 1"));
    }
    let w = -z * a;
    let re = 0.5 * libm::log1p(2.0 * w.re + w.norm_sqr());
    let im = libm::atan2(w.im, 1.0 + w.re);
    Ok(Complex::new(re, im))
}

/// `1 / (z - pole)^order`, refusing points closer than [`NEAR_POLE_GUARD`].
pub fn pole_term(z: Complex, pole: Complex, order: u32) -> Result<Complex> {
    let d = z - pole;
    let distance = abs(d);
    if !(distance >= NEAR_POLE_GUARD) {
        return Err(Error::NearPole { distance });
    }
    let inv = d.inv();
    let mut out = Complex::new(1.0, 0.0);
    for _ in 0..order {
        out *= inv;
    }
    Ok(out)
}

/// Rejects `|z| >= 1` and non-finite input.
pub fn check_disk(z: Complex) -> Result<()> {
    let modulus = abs(z);
    if !is_finite(z) || !(modulus < 1.0) {
        return Err(Error::OutsideDisk { modulus });
    }
    Ok(())
}

pub(crate) fn finite(z: Complex, what: &'static str) -> Result<Complex> {
    if is_finite(z) {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Componentwise `|a - b| <= atol + rtol * |b|`.
pub fn approx_eq(a: Complex, b: Complex, atol: f64, rtol: f64) -> bool {
    let close = |x: f64, y: f64| (x - y).abs() <= atol + rtol * y.abs();
    close(a.re, b.re) && close(a.im, b.im)
}
