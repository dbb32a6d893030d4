//! Angles that remember whether they are an exact rational multiple of pi.
//!
//! Branch selection in the half-plane and strip families depends on exact
//! membership in a measure-zero set (`gamma = pi/4`, `alpha = pi/2`, ...), so
//! that membership is decided on the symbolic form only. A float that happens
//! to be close to `pi/4` stays a float.

use core::f64::consts::{FRAC_1_SQRT_2, PI};
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Angle {
    /// `num * pi / den`, stored reduced with `den > 0`.
    PiMultiple {
        num: i64,
        den: u64,
    },
    Radians(f64),
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Angle {
    pub fn pi_frac(num: i64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den).max(1);
        Angle::PiMultiple { num: num / g as i64, den: den / g }
    }

    pub fn radians_value(self) -> f64 {
        match self {
            Angle::PiMultiple { num, den } => num as f64 * PI / den as f64,
            Angle::Radians(x) => x,
        }
    }

    /// `num/den` as a rational multiple of pi, if symbolic.
    pub fn as_pi_fraction(self) -> Option<(i64, u64)> {
        match self {
            Angle::PiMultiple { num, den } => Some((num, den)),
            Angle::Radians(_) => None,
        }
    }

    pub fn double(self) -> Self {
        match self {
            Angle::PiMultiple { num, den } => Angle::pi_frac(2 * num, den),
            Angle::Radians(x) => Angle::Radians(2.0 * x),
        }
    }

    /// `(sin, cos)`, exact at multiples of `pi/4`.
    pub fn sin_cos(self) -> (f64, f64) {
        match self {
            Angle::PiMultiple { num, den } if 4 % den == 0 => {
                // quarter-turn eighths: num * (4/den) in units of pi/4
                let eighth = (num * (4 / den) as i64).rem_euclid(8);
                let h = FRAC_1_SQRT_2;
                match eighth {
                    0 => (0.0, 1.0),
                    1 => (h, h),
                    2 => (1.0, 0.0),
                    3 => (h, -h),
                    4 => (0.0, -1.0),
                    5 => (-h, -h),
                    6 => (-1.0, 0.0),
                    _ => (-h, h),
                }
            }
            _ => {
                let x = self.radians_value();
                (libm::sin(x), libm::cos(x))
            }
        }
    }

    pub fn sin(self) -> f64 {
        self.sin_cos().0
    }

    pub fn cos(self) -> f64 {
        self.sin_cos().1
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Angle::PiMultiple { num: 0, .. } => write!(f, "0"),
            Angle::PiMultiple { num, den } => {
                match num {
                    1 => write!(f, "pi")?,
                    -1 => write!(f, "-pi")?,
                    n => write!(f, "{n}pi")?,
                }
                if den != 1 {
                    write!(f, "/{den}")?;
                }
                Ok(())
            }
            Angle::Radians(x) => write!(f, "{x:?}"),
        }
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// Accepts `pi`, `-pi/4`, `3pi/4`, `3*pi/4`, `2pi/3`, or a plain float in
    /// radians.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::bad(alloc::format!("cannot parse angle '{s}'"));
        let t = s.trim();
        let Some(at) = t.find("pi") else {
            let x: f64 = t.parse().map_err(|_| bad())?;
            if !x.is_finite() {
                return Err(bad());
            }
            return Ok(Angle::Radians(x));
        };
        let (head, tail) = (&t[..at], &t[at + 2..]);
        let head = head.trim().trim_end_matches('*').trim();
        let num: i64 = match head {
            "" | "+" => 1,
            "-" => -1,
            h => h.parse().map_err(|_| bad())?,
        };
        let tail = tail.trim();
        let den: u64 = if tail.is_empty() {
            1
        } else {
            let d = tail.strip_prefix('/').ok_or_else(bad)?.trim();
            d.parse().map_err(|_| bad())?
        };
        if den == 0 {
            return Err(bad());
        }
        Ok(Angle::pi_frac(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_symbolic_forms() {
        assert_eq!("pi/4".parse::<Angle>().unwrap(), Angle::pi_frac(1, 4));
        assert_eq!("3pi/4".parse::<Angle>().unwrap(), Angle::pi_frac(3, 4));
        assert_eq!("3*pi/4".parse::<Angle>().unwrap(), Angle::pi_frac(3, 4));
        assert_eq!("6pi/8".parse::<Angle>().unwrap(), Angle::pi_frac(3, 4));
        assert_eq!("pi".parse::<Angle>().unwrap(), Angle::pi_frac(1, 1));
        assert_eq!("-pi/2".parse::<Angle>().unwrap(), Angle::pi_frac(-1, 2));
        assert_eq!("0pi".parse::<Angle>().unwrap(), Angle::pi_frac(0, 1));
    }

    #[test]
    fn floats_stay_floats() {
        let a: Angle = "0.7853981633974483".parse().unwrap();
        assert_eq!(a, Angle::Radians(core::f64::consts::FRAC_PI_4));
        assert!(a.as_pi_fraction().is_none());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "pie", "pi/0", "x", "pi/4/2", "inf", "2pi/-3"] {
            assert!(s.parse::<Angle>().is_err(), "{s}");
        }
    }

    #[test]
    fn exact_quarter_values() {
        assert_eq!(Angle::pi_frac(1, 2).sin_cos(), (1.0, 0.0));
        assert_eq!(Angle::pi_frac(3, 2).sin_cos(), (-1.0, 0.0));
        assert_eq!(Angle::pi_frac(1, 4).double().cos(), 0.0);
        assert_eq!(Angle::pi_frac(7, 4).sin_cos(), (-FRAC_1_SQRT_2, FRAC_1_SQRT_2));
        let (s, c) = Angle::pi_frac(2, 3).sin_cos();
        assert!((s - libm::sin(2.0 * PI / 3.0)).abs() < 1e-16);
        assert!((c + 0.5).abs() < 1e-15);
    }

    #[test]
    fn display_round_trips() {
        for s in ["pi/4", "3pi/4", "pi", "-pi/2", "9pi/10", "0"] {
            let a: Angle = s.parse().unwrap_or(Angle::pi_frac(0, 1));
            assert_eq!(a.to_string().parse::<Angle>().unwrap().radians_value(), a.radians_value());
        }
    }
}
