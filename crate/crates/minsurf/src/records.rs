//! Flat JSON records. Reals travel as decimal strings with 17 significant
//! digits so that a write-read cycle is lossless.

use std::fmt;

use minsurf_core::figure::{CurveKind, FigureData};
use minsurf_core::{DomainCase, Family, MapEval, SurfacePoint};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::verify::VerificationReport;

/// An `f64` serialized as `"d.dddddddddddddddde+x"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.16e}", self.0)
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RealVisitor;
        impl Visitor<'_> for RealVisitor {
            type Value = Real;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a decimal string")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Real, E> {
                v.trim().parse().map(Real).map_err(|_| E::custom(format!("bad real '{v}'")))
            }
        }
        d.deserialize_str(RealVisitor)
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real(x)
    }
}

/// Family tag, sign and parameters, flattened into the enclosing record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub family: String,
    pub sign: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_re: Option<Real>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_im: Option<Real>,
}

impl From<&DomainCase> for CaseRecord {
    fn from(case: &DomainCase) -> Self {
        let mut rec = CaseRecord {
            family: case.family_name().to_string(),
            sign: case.sign.symbol().to_string(),
            gamma: None,
            alpha: None,
            p_re: None,
            p_im: None,
        };
        match &case.family {
            Family::SlantedHalfPlane(m) => rec.gamma = Some(m.gamma.to_string()),
            Family::VerticalStrip(m) => rec.alpha = Some(m.alpha.to_string()),
            Family::SingleSlit(_) => {}
            Family::JunUpperHalfPlane(m) => {
                rec.p_re = Some(Real(m.p.re));
                rec.p_im = Some(Real(m.p.im));
            }
        }
        rec
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    #[serde(flatten)]
    pub case: CaseRecord,
    pub z_re: Real,
    pub z_im: Real,
    pub h_re: Real,
    pub h_im: Real,
    pub g_re: Real,
    pub g_im: Real,
    pub f_re: Real,
    pub f_im: Real,
    pub u: Real,
    pub v: Real,
    pub height: Real,
}

impl EvalRecord {
    pub fn new(case: &DomainCase, m: &MapEval, p: &SurfacePoint) -> Self {
        EvalRecord {
            case: case.into(),
            z_re: m.z.re.into(),
            z_im: m.z.im.into(),
            h_re: m.h.re.into(),
            h_im: m.h.im.into(),
            g_re: m.g.re.into(),
            g_im: m.g.im.into(),
            f_re: m.f.re.into(),
            f_im: m.f.im.into(),
            u: p.u.into(),
            v: p.v.into(),
            height: p.height.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub max_residual: Real,
    pub threshold: Real,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    #[serde(flatten)]
    pub case: CaseRecord,
    pub nr: usize,
    pub ntheta: usize,
    pub r_max: Real,
    pub seed: u64,
    pub elapsed_s: Real,
    pub uv_offset_u: Real,
    pub uv_offset_v: Real,
    pub all_pass: bool,
    pub checks: Vec<CheckRecord>,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        ReportRecord {
            case: (&r.case).into(),
            nr: r.grid.nr,
            ntheta: r.grid.ntheta,
            r_max: r.grid.r_max.into(),
            seed: r.seed,
            elapsed_s: r.elapsed.into(),
            uv_offset_u: r.uv_offset.0.into(),
            uv_offset_v: r.uv_offset.1.into(),
            all_pass: r.all_pass(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckRecord {
                    name: c.name.to_string(),
                    max_residual: c.max_residual.into(),
                    threshold: c.threshold.into(),
                    pass: c.pass,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRecord {
    /// `ring` or `spoke`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<Real>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Real>,
    pub u: Vec<Real>,
    pub v: Vec<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureRecord {
    #[serde(flatten)]
    pub case: CaseRecord,
    pub curves: Vec<CurveRecord>,
}

impl From<&FigureData> for FigureRecord {
    fn from(fig: &FigureData) -> Self {
        let curves = fig
            .curves
            .iter()
            .map(|c| {
                let (kind, radius, theta) = match c.kind {
                    CurveKind::Ring { radius } => ("ring", Some(Real(radius)), None),
                    CurveKind::Spoke { theta } => ("spoke", None, Some(Real(theta))),
                };
                CurveRecord {
                    kind: kind.to_string(),
                    radius,
                    theta,
                    u: c.points.iter().map(|p| Real(p.0)).collect(),
                    v: c.points.iter().map(|p| Real(p.1)).collect(),
                }
            })
            .collect();
        FigureRecord { case: (&fig.case).into(), curves }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use minsurf_core::{Angle, Complex, Sign};

    #[test]
    fn real_round_trips_bit_for_bit() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE, 0.0, -0.0] {
            let s = serde_json::to_string(&Real(x)).unwrap();
            let back: Real = serde_json::from_str(&s).unwrap();
            assert_eq!(back.0.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(Real(0.5).to_string(), "5.0000000000000000e-1");
    }

    #[test]
    fn case_record_fields() {
        let r = CaseRecord::from(&DomainCase::half_plane(Angle::pi_frac(1, 4), Sign::Minus).unwrap());
        assert_eq!(r.gamma.as_deref(), Some("pi/4"));
        assert_eq!(r.sign, "-");
        let r = CaseRecord::from(&DomainCase::jun(Complex::new(0.5, 2.0), Sign::Plus).unwrap());
        assert_eq!((r.p_re, r.p_im), (Some(Real(0.5)), Some(Real(2.0))));
        let json = serde_json::to_string(&CaseRecord::from(&DomainCase::slit(Sign::Plus))).unwrap();
        assert_eq!(json, r#"{"family":"slit","sign":"+"}"#);
    }
}
