//! Verification campaigns: every identity the mappings and surfaces must
//! satisfy, measured on a polar grid and collected into a report.
//!
//! Point failures (a pole hit, a quadrature budget exhausted) are recorded
//! as an infinite residual for the check concerned; only parameter errors
//! abort a campaign.

use std::f64::consts::TAU;
use std::time::Instant;

use minsurf_core::mesh::{check_grid, polar_nodes};
use minsurf_core::weierstrass::{oracle_integrals, PhiTriple};
use minsurf_core::{height_f, Complex, DomainCase, Result as CoreResult};

use crate::error::Result;

pub const DILATATION_TOL: f64 = 1e-12;
pub const ORACLE_TOL: f64 = 1e-9;
pub const QUADRATURE_TOL: f64 = 1e-10;
pub const CONFORMALITY_TOL: f64 = 1e-10;
pub const REFLECTION_TOL: f64 = 1e-12;
pub const RESIDUE_TOL: f64 = 1e-14;
pub const CLOSED_UV_TOL: f64 = 1e-10;
pub const MIN_LAPLACIAN_SLOPE: f64 = 1.9;
pub const ISOTHERMAL_TOL: f64 = 1e-6;
pub const INJECTIVITY_SAMPLES: usize = 2000;
pub const DEFAULT_SEED: u64 = 1;

/// Laplacian stencil steps; each halves the previous one.
pub const LAPLACIAN_STEPS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];

/// Interior points for the stencil checks, kept off the real and imaginary
/// axes where some components vanish identically.
pub const STENCIL_POINTS: [(f64, f64); 4] = [(0.3, 0.7), (0.45, 2.2), (0.2, 4.0), (0.4, 5.3)];

/// Below this a Laplacian is already at roundoff and carries no slope.
const LAPLACIAN_FLOOR: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub nr: usize,
    pub ntheta: usize,
    pub r_max: f64,
}

impl GridSpec {
    pub const VERIFY_DEFAULT: GridSpec = GridSpec { nr: 40, ntheta: 64, r_max: 0.95 };
    pub const MESH_DEFAULT: GridSpec = GridSpec { nr: 80, ntheta: 128, r_max: 0.99 };

    pub fn new(nr: usize, ntheta: usize, r_max: f64) -> Result<Self> {
        check_grid(nr, ntheta, r_max)?;
        Ok(GridSpec { nr, ntheta, r_max })
    }

    pub fn nodes(&self) -> Vec<Complex> {
        polar_nodes(self.nr, self.ntheta, self.r_max)
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::VERIFY_DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(name: &'static str, max_residual: f64, threshold: f64) -> Self {
        // NaN residuals fail
        CheckResult { name, max_residual, threshold, pass: max_residual <= threshold }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub case: DomainCase,
    pub grid: GridSpec,
    pub checks: Vec<CheckResult>,
    pub elapsed: f64,
    pub seed: u64,
    /// Constant by which the standalone `(u, v)` formulas miss `f(0)`.
    pub uv_offset: (f64, f64),
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Largest value of `residual` over `points`; an evaluation error counts as
/// an infinite residual.
fn max_over<T: Copy>(points: &[T], mut residual: impl FnMut(T) -> CoreResult<f64>) -> f64 {
    points.iter().fold(f64::NEG_INFINITY, |acc, &z| match residual(z) {
        Ok(r) if r.is_nan() => f64::INFINITY,
        Ok(r) => acc.max(r),
        Err(_) => f64::INFINITY,
    })
}

pub fn run_campaign(case: &DomainCase, grid: GridSpec) -> Result<VerificationReport> {
    run_campaign_seeded(case, grid, DEFAULT_SEED)
}

pub fn run_campaign_seeded(case: &DomainCase, grid: GridSpec, seed: u64) -> Result<VerificationReport> {
    check_grid(grid.nr, grid.ntheta, grid.r_max)?;
    let start = Instant::now();
    let nodes = grid.nodes();
    let other = case.with_sign(case.sign.flipped());
    let mut checks = Vec::new();

    checks.push(CheckResult::new(
        "dilatation",
        max_over(&nodes, |z| Ok(case.eval(z)?.dilatation_residual())),
        DILATATION_TOL,
    ));

    let oracle = oracle_checks(case, &nodes);
    checks.extend(oracle);

    checks.push(CheckResult::new(
        "conformality",
        max_over(&nodes, |z| {
            let m = case.eval(z)?;
            let a = PhiTriple::from_eval(&m, case.sign).conformality_residual();
            let b = PhiTriple::from_eval(&m, other.sign).conformality_residual();
            Ok(a.max(b))
        }),
        CONFORMALITY_TOL,
    ));

    // margins are reported negated so that "residual <= threshold" reads as
    // "margin strictly positive"
    checks.push(CheckResult::new(
        "image_membership",
        max_over(&nodes, |z| Ok(-case.image_margin(case.eval(z)?.f))),
        -f64::MIN_POSITIVE,
    ));
    checks.push(CheckResult::new(
        "jacobian_positivity",
        max_over(&nodes, |z| Ok(-case.eval(z)?.jacobian())),
        -f64::MIN_POSITIVE,
    ));

    checks.push(CheckResult::new("harmonicity_slope", 2.0 - min_laplacian_slope(case), 2.0 - MIN_LAPLACIAN_SLOPE));
    checks.push(CheckResult::new(
        "isothermal",
        max_over(&nodes, |z| isothermal_residual(case, z).map(|(a, b, scale)| a.max(b) / scale)),
        ISOTHERMAL_TOL,
    ));

    if case.reflection_symmetric() {
        checks.push(CheckResult::new(
            "reflection_symmetry",
            max_over(&nodes, |z| {
                let a = case.eval(z.conj())?.f;
                let b = case.eval(z)?.f.conj();
                Ok((a - b).norm() / a.norm().max(1.0))
            }),
            REFLECTION_TOL,
        ));
    }

    if let Some(rc) = case.residue_coeffs() {
        checks.push(CheckResult::new("residue_identity", rc.sum_residual(), RESIDUE_TOL));
    }

    checks.push(CheckResult::new(
        "closed_form_uv",
        max_over(&nodes, |z| {
            let f = case.eval(z)?.f;
            let (u, v) = case.closed_uv(z)?;
            Ok((u - f.re).abs().max((v - f.im).abs()))
        }),
        CLOSED_UV_TOL,
    ));

    let collisions = injectivity_smoke_seeded(case, INJECTIVITY_SAMPLES, grid.r_max, seed);
    checks.push(CheckResult::new("injectivity", collisions as f64, 0.0));

    let uv_offset = case.closed_uv_offset()?;
    Ok(VerificationReport { case: case.clone(), grid, checks, elapsed: start.elapsed().as_secs_f64(), seed, uv_offset })
}

/// Closed-form `h`, `g`, `F` and the surface `(u, v)` against segment
/// quadrature of `h'`, `g'`, `phi1`, `phi2`, `phi3`.
fn oracle_checks(case: &DomainCase, nodes: &[Complex]) -> [CheckResult; 4] {
    let mut worst = [0.0f64; 4];
    let origin = case.eval(Complex::new(0.0, 0.0));
    for &z in nodes {
        let residuals = origin.clone().and_then(|f0| {
            let m = case.eval(z)?;
            let q = oracle_integrals(case, z, QUADRATURE_TOL)?;
            let height = height_f(case, z)?;
            let (u, v) = case.closed_uv(z)?;
            let surface = (u - f0.f.re - q.phi[0].re).abs().max((v - f0.f.im - q.phi[1].re).abs());
            Ok([(m.h - f0.h - q.h).norm(), (m.g - f0.g - q.g).norm(), (height - q.phi[2].re).abs(), surface])
        });
        match residuals {
            Ok(r) => {
                for k in 0..4 {
                    worst[k] = if r[k].is_nan() { f64::INFINITY } else { worst[k].max(r[k]) };
                }
            }
            Err(_) => worst = [f64::INFINITY; 4],
        }
    }
    [
        CheckResult::new("oracle_h", worst[0], ORACLE_TOL),
        CheckResult::new("oracle_g", worst[1], ORACLE_TOL),
        CheckResult::new("oracle_height", worst[2], ORACLE_TOL),
        CheckResult::new("representation_uv", worst[3], ORACLE_TOL),
    ]
}

/// Surface coordinates `(u, v, F)` at `z`.
pub fn embedding(case: &DomainCase, z: Complex) -> CoreResult<[f64; 3]> {
    let f = case.eval(z)?.f;
    Ok([f.re, f.im, height_f(case, z)?])
}

/// Five-point Laplacian of `(u, v, F)` with step `s` at `z`.
pub fn discrete_laplacian(case: &DomainCase, z: Complex, s: f64) -> CoreResult<[f64; 3]> {
    let centre = embedding(case, z)?;
    let mut acc = centre.map(|x| -4.0 * x);
    for d in [Complex::new(s, 0.0), Complex::new(-s, 0.0), Complex::new(0.0, s), Complex::new(0.0, -s)] {
        let x = embedding(case, z + d)?;
        for k in 0..3 {
            acc[k] += x[k];
        }
    }
    Ok(acc.map(|x| x / (s * s)))
}

/// Log-log slopes of the discrete Laplacian of `u`, `v`, `F` between the
/// coarsest and finest step. Components already at roundoff on the coarsest
/// step report `None`.
pub fn laplacian_slopes(case: &DomainCase, z: Complex) -> CoreResult<[Option<f64>; 3]> {
    let coarse = discrete_laplacian(case, z, LAPLACIAN_STEPS[0])?;
    let fine = discrete_laplacian(case, z, LAPLACIAN_STEPS[2])?;
    let ratio = (LAPLACIAN_STEPS[0] / LAPLACIAN_STEPS[2]).ln();
    let mut out = [None; 3];
    for k in 0..3 {
        if coarse[k].abs() > LAPLACIAN_FLOOR {
            out[k] = Some((coarse[k].abs() / fine[k].abs()).ln() / ratio);
        }
    }
    Ok(out)
}

fn min_laplacian_slope(case: &DomainCase) -> f64 {
    let mut worst = f64::INFINITY;
    for (r, t) in STENCIL_POINTS {
        match laplacian_slopes(case, Complex::from_polar(r, t)) {
            Ok(slopes) => {
                for s in slopes.into_iter().flatten() {
                    worst = worst.min(if s.is_nan() { f64::NEG_INFINITY } else { s });
                }
            }
            Err(_) => return f64::NEG_INFINITY,
        }
    }
    worst
}

/// `(||X_x|^2 - |X_y|^2|, |X_x . X_y|, |X_x|^2 + |X_y|^2)` by central
/// differences with step `1e-5 (1 - |z|)`.
pub fn isothermal_residual(case: &DomainCase, z: Complex) -> CoreResult<(f64, f64, f64)> {
    let h = 1e-5 * (1.0 - z.norm());
    let diff = |d: Complex| -> CoreResult<[f64; 3]> {
        let a = embedding(case, z + d)?;
        let b = embedding(case, z - d)?;
        Ok([0, 1, 2].map(|k| (a[k] - b[k]) / (2.0 * h)))
    };
    let xx = diff(Complex::new(h, 0.0))?;
    let xy = diff(Complex::new(0.0, h))?;
    let dot = |a: &[f64; 3], b: &[f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let (ex, ey) = (dot(&xx, &xx), dot(&xy, &xy));
    Ok(((ex - ey).abs(), dot(&xx, &xy).abs(), ex + ey))
}

/// Radical inverse of `i` in `base`.
fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut out = 0.0;
    let mut scale = inv;
    while i > 0 {
        out += (i % base) as f64 * scale;
        i /= base;
        scale *= inv;
    }
    out
}

/// `n` points of the base-(2, 3) Halton sequence starting at index `seed + 1`,
/// mapped area-uniformly onto `|z| <= r_max`.
pub fn halton_disk(n: usize, r_max: f64, seed: u64) -> Vec<Complex> {
    (0..n as u64)
        .map(|k| {
            let i = seed + 1 + k;
            Complex::from_polar(r_max * radical_inverse(i, 2).sqrt(), TAU * radical_inverse(i, 3))
        })
        .collect()
}

/// Pairs with `|f(z_i) - f(z_j)| < 1e-9` while `|z_i - z_j| > 1e-6`, over
/// `n` quasi-random points with `|z| <= 0.95`.
pub fn injectivity_smoke(case: &DomainCase, n: usize) -> usize {
    injectivity_smoke_seeded(case, n, 0.95, DEFAULT_SEED)
}

pub fn injectivity_smoke_seeded(case: &DomainCase, n: usize, r_max: f64, seed: u64) -> usize {
    const IMAGE_EPS: f64 = 1e-9;
    const PARAM_EPS: f64 = 1e-6;
    let mut samples: Vec<(Complex, Complex)> = halton_disk(n.min(100_000), r_max, seed)
        .into_iter()
        .filter_map(|z| case.eval(z).ok().map(|m| (m.f, z)))
        .collect();
    samples.sort_by(|a, b| a.0.re.total_cmp(&b.0.re));
    let mut collisions = 0;
    for i in 0..samples.len() {
        let (fi, zi) = samples[i];
        for &(fj, zj) in &samples[i + 1..] {
            if fj.re - fi.re >= IMAGE_EPS {
                break;
            }
            if (fi - fj).norm() < IMAGE_EPS && (zi - zj).norm() > PARAM_EPS {
                collisions += 1;
            }
        }
    }
    collisions
}

/// Plain-text rendering, one line per check.
pub fn render_text(report: &VerificationReport) -> String {
    let mut out = format!(
        "{}\ngrid {}x{} r_max {} seed {}\n",
        crate::presets::label(&report.case),
        report.grid.nr,
        report.grid.ntheta,
        report.grid.r_max,
        report.seed
    );
    for c in &report.checks {
        out += &format!(
            "{:4} {:<20} max {:>12.4e}  threshold {:>11.4e}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.max_residual,
            c.threshold
        );
    }
    let (du, dv) = report.uv_offset;
    out += &format!("closed-form (u, v) offset ({du:.3e}, {dv:.3e})\n");
    out += &format!(
        "{} in {:.3} s\n",
        if report.all_pass() { "all checks passed" } else { "verification FAILED" },
        report.elapsed
    );
    out
}
