#![allow(dead_code)]

use core::f64::consts::TAU;

use minsurf_core::{Angle, Complex, DomainCase, Sign};

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn half_planes(sign: Sign) -> Vec<DomainCase> {
    (0..8).map(|k| DomainCase::half_plane(Angle::pi_frac(k, 4), sign).unwrap()).collect()
}

/// Generic slant angles, away from the odd multiples of pi/4.
pub fn generic_half_planes(sign: Sign) -> Vec<DomainCase> {
    [0.1, 0.5, 1.0, 2.0, 2.9, 3.5, 4.4, 6.0]
        .into_iter()
        .map(|g| DomainCase::half_plane(Angle::Radians(g), sign).unwrap())
        .collect()
}

pub fn strips(sign: Sign) -> Vec<DomainCase> {
    [(1, 2), (2, 3), (3, 4), (9, 10), (3, 5), (11, 20), (7, 10), (4, 5)]
        .into_iter()
        .map(|(n, d)| DomainCase::strip(Angle::pi_frac(n, d), sign).unwrap())
        .collect()
}

pub fn juns(sign: Sign) -> Vec<DomainCase> {
    [c(0.0, 1.0), c(1.0, 2.0), c(-0.5, 0.3), c(2.0, 0.5), c(0.0, 3.0), c(-3.0, 1.0), c(0.7, 0.7), c(0.1, 10.0)]
        .into_iter()
        .map(|p| DomainCase::jun(p, sign).unwrap())
        .collect()
}

pub fn all_cases(sign: Sign) -> Vec<DomainCase> {
    let mut out = half_planes(sign);
    out.extend(generic_half_planes(sign));
    out.extend(strips(sign));
    out.push(DomainCase::slit(sign));
    out.extend(juns(sign));
    out
}

/// Polar grid without the center, `r` up to `r_max`.
pub fn grid(nr: usize, nt: usize, r_max: f64) -> Vec<Complex> {
    let mut out = Vec::with_capacity(nr * nt);
    for i in 1..=nr {
        let r = r_max * i as f64 / nr as f64;
        for j in 0..nt {
            out.push(Complex::from_polar(r, TAU * (j as f64 + 0.5) / nt as f64));
        }
    }
    out
}
