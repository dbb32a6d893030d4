//! `minsurf eval | verify | mesh | figure`.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for
//! argument or parameter errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minsurf_core::figure::figure_data;
use minsurf_core::mesh::build_mesh;
use minsurf_core::{surface_point, Angle, Complex, DomainCase, Sign};

use crate::error::{Error, Result};
use crate::export::{export_mesh, MeshFormat};
use crate::records::{EvalRecord, FigureRecord, Real, ReportRecord};
use crate::verify::{render_text, run_campaign, GridSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_SPOKES: usize = 24;
const DEFAULT_RING_COUNT: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "minsurf", version, about = "Harmonic mappings of the disk and their minimal surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print h, g, f and the surface point (u, v, F) at one disk point.
    Eval(EvalArgs),
    /// Run the verification campaign; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Export a surface mesh over a polar grid.
    Mesh(MeshArgs),
    /// Write images of circles and spokes as JSON polylines.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Halfplane,
    Strip,
    Slit,
    Jun,
}

#[derive(Debug, Args)]
struct CaseArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Slant angle in [0, 2pi): radians or a symbolic form such as 3pi/4.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Strip angle in [pi/2, pi): radians or a symbolic form such as 2pi/3.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Image of the origin for the upper half-plane family, as RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Branch b(z) = +z or -z.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sign: String,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    case: CaseArgs,
    /// Disk point as RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    case: CaseArgs,
    /// Polar grid as NRxNTHETA.
    #[arg(long, default_value = "40x64")]
    grid: String,
    #[arg(long, default_value_t = 0.95)]
    rmax: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct MeshArgs {
    #[command(flatten)]
    case: CaseArgs,
    #[arg(long)]
    out: PathBuf,
    /// obj, ply or csv.
    #[arg(long, default_value = "obj")]
    format: String,
    #[arg(long, default_value = "80x128")]
    grid: String,
    #[arg(long, default_value_t = 0.99)]
    rmax: f64,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[command(flatten)]
    case: CaseArgs,
    #[arg(long)]
    out: PathBuf,
    /// Comma-separated ring radii; defaults to ten evenly spaced radii up to 0.99.
    #[arg(long)]
    rings: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SPOKES)]
    spokes: usize,
    /// Points per polyline.
    #[arg(long, default_value_t = 128)]
    pts: usize,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub fn parse_complex(s: &str) -> Result<Complex> {
    let (re, im) = s.split_once(',').ok_or_else(|| usage(format!("expected RE,IM, got '{s}'")))?;
    let part = |t: &str| -> Result<f64> {
        let x: f64 = t.trim().parse().map_err(|_| usage(format!("bad number '{t}' in '{s}'")))?;
        if x.is_finite() {
            Ok(x)
        } else {
            Err(usage(format!("non-finite number in '{s}'")))
        }
    };
    Ok(Complex::new(part(re)?, part(im)?))
}

pub fn parse_sign(s: &str) -> Result<Sign> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        _ => Err(usage(format!("sign must be + or -, got '{s}'"))),
    }
}

pub fn parse_grid(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| usage(format!("expected NRxNT, got '{s}'")))?;
    let n = |t: &str| t.trim().parse::<usize>().map_err(|_| usage(format!("bad grid '{s}'")));
    Ok((n(a)?, n(b)?))
}

fn parse_radii(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<f64>().map_err(|_| usage(format!("bad radius '{t}'"))))
        .collect()
}

fn build_case(args: &CaseArgs) -> Result<DomainCase> {
    let sign = parse_sign(&args.sign)?;
    let angle = |name: &str, v: &Option<String>| -> Result<Angle> {
        let s = v.as_deref().ok_or_else(|| usage(format!("--family {name} needs --{}", param_name(name))))?;
        Ok(s.parse::<Angle>()?)
    };
    let reject = |flag: &str, v: &Option<String>| -> Result<()> {
        match v {
            Some(_) => Err(usage(format!("--{flag} does not apply to this family"))),
            None => Ok(()),
        }
    };
    let case = match args.family {
        FamilyArg::Halfplane => {
            reject("alpha", &args.alpha)?;
            reject("p", &args.p)?;
            DomainCase::half_plane(angle("halfplane", &args.gamma)?, sign)?
        }
        FamilyArg::Strip => {
            reject("gamma", &args.gamma)?;
            reject("p", &args.p)?;
            DomainCase::strip(angle("strip", &args.alpha)?, sign)?
        }
        FamilyArg::Slit => {
            reject("gamma", &args.gamma)?;
            reject("alpha", &args.alpha)?;
            reject("p", &args.p)?;
            DomainCase::slit(sign)
        }
        FamilyArg::Jun => {
            reject("gamma", &args.gamma)?;
            reject("alpha", &args.alpha)?;
            let p = args.p.as_deref().ok_or_else(|| usage("--family jun needs --p RE,IM"))?;
            DomainCase::jun(parse_complex(p)?, sign)?
        }
    };
    Ok(case)
}

fn param_name(family: &str) -> &'static str {
    match family {
        "halfplane" => "gamma",
        _ => "alpha",
    }
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<i32> {
    let case = build_case(&args.case)?;
    let z = parse_complex(&args.z)?;
    let m = case.eval(z)?;
    let p = surface_point(&case, z)?;
    if args.json {
        serde_json::to_writer(&mut *out, &EvalRecord::new(&case, &m, &p))?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}", crate::presets::label(&case))?;
        let pair = |w: Complex| format!("{} {}", Real(w.re), Real(w.im));
        writeln!(out, "z {}", pair(m.z))?;
        writeln!(out, "h {}", pair(m.h))?;
        writeln!(out, "g {}", pair(m.g))?;
        writeln!(out, "f {}", pair(m.f))?;
        writeln!(out, "u {}", Real(p.u))?;
        writeln!(out, "v {}", Real(p.v))?;
        writeln!(out, "F {}", Real(p.height))?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let case = build_case(&args.case)?;
    let (nr, ntheta) = parse_grid(&args.grid)?;
    let report = run_campaign(&case, GridSpec::new(nr, ntheta, args.rmax)?)?;
    if args.json {
        serde_json::to_writer(&mut *out, &ReportRecord::from(&report))?;
        writeln!(out)?;
    } else {
        write!(out, "{}", render_text(&report))?;
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_mesh(args: &MeshArgs, out: &mut dyn Write) -> Result<i32> {
    let case = build_case(&args.case)?;
    let format: MeshFormat = args.format.parse()?;
    let (nr, ntheta) = parse_grid(&args.grid)?;
    let mesh = build_mesh(&case, nr, ntheta, args.rmax)?;
    let mut file = BufWriter::new(File::create(&args.out)?);
    export_mesh(&mesh, format, &mut file)?;
    file.flush()?;
    writeln!(out, "wrote {} ({} vertices, {} faces)", args.out.display(), mesh.vertices.len(), mesh.faces.len())?;
    Ok(EXIT_OK)
}

fn cmd_figure(args: &FigureArgs, out: &mut dyn Write) -> Result<i32> {
    let case = build_case(&args.case)?;
    let rings = match &args.rings {
        Some(s) => parse_radii(s)?,
        None => (1..=DEFAULT_RING_COUNT).map(|k| 0.99 * k as f64 / DEFAULT_RING_COUNT as f64).collect(),
    };
    let fig = figure_data(&case, &rings, args.spokes, args.pts)?;
    let mut file = BufWriter::new(File::create(&args.out)?);
    serde_json::to_writer(&mut file, &FigureRecord::from(&fig))?;
    file.flush()?;
    writeln!(out, "wrote {} ({} curves)", args.out.display(), fig.curves.len())?;
    Ok(EXIT_OK)
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Mesh(a) => cmd_mesh(a, out),
        Command::Figure(a) => cmd_figure(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Io(_) => 1,
                _ => EXIT_USAGE,
            }
        }
    }
}
