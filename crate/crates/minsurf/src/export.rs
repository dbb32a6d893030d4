//! Mesh export to OBJ, PLY and CSV, and strict readers for checking the
//! output. Numbers are written with 17 significant digits.

use std::f64::consts::TAU;
use std::io::Write;
use std::str::FromStr;

use minsurf_core::mesh::DiskMesh;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Ply,
    Csv,
}

impl FromStr for MeshFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(MeshFormat::Obj),
            "ply" => Ok(MeshFormat::Ply),
            "csv" => Ok(MeshFormat::Csv),
            _ => Err(Error::Usage(format!("unknown mesh format '{s}' (expected obj, ply or csv)"))),
        }
    }
}

pub fn export_mesh(mesh: &DiskMesh, format: MeshFormat, out: &mut impl Write) -> Result<()> {
    match format {
        MeshFormat::Obj => write_obj(mesh, out),
        MeshFormat::Ply => write_ply(mesh, out),
        MeshFormat::Csv => write_csv(mesh, out),
    }
}

pub fn write_obj(mesh: &DiskMesh, out: &mut impl Write) -> Result<()> {
    writeln!(out, "# {} vertices, {} faces", mesh.vertices.len(), mesh.faces.len())?;
    for v in &mesh.vertices {
        let p = v.point;
        writeln!(out, "v {:.16e} {:.16e} {:.16e}", p.u, p.v, p.height)?;
    }
    for [a, b, c] in &mesh.faces {
        writeln!(out, "f {} {} {}", a + 1, b + 1, c + 1)?;
    }
    Ok(())
}

pub fn write_ply(mesh: &DiskMesh, out: &mut impl Write) -> Result<()> {
    writeln!(out, "ply\nformat ascii 1.0")?;
    writeln!(out, "element vertex {}", mesh.vertices.len())?;
    writeln!(out, "property double x\nproperty double y\nproperty double z")?;
    writeln!(out, "element face {}", mesh.faces.len())?;
    writeln!(out, "property list uchar int vertex_indices\nend_header")?;
    for v in &mesh.vertices {
        let p = v.point;
        writeln!(out, "{:.16e} {:.16e} {:.16e}", p.u, p.v, p.height)?;
    }
    for [a, b, c] in &mesh.faces {
        writeln!(out, "3 {a} {b} {c}")?;
    }
    Ok(())
}

/// One row `r,theta,u,v,F` per vertex, `theta` in `[0, 2 pi)`.
pub fn write_csv(mesh: &DiskMesh, out: &mut impl Write) -> Result<()> {
    writeln!(out, "r,theta,u,v,F")?;
    for v in &mesh.vertices {
        let theta = if v.z.norm() == 0.0 { 0.0 } else { v.z.arg().rem_euclid(TAU) };
        let p = v.point;
        writeln!(out, "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}", v.z.norm(), theta, p.u, p.v, p.height)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObjMesh {
    pub vertices: Vec<[f64; 3]>,
    /// 0-based.
    pub faces: Vec<[usize; 3]>,
}

fn parse_real(tok: &str, line: usize) -> Result<f64> {
    let x: f64 = tok.parse().map_err(|_| Error::parse(line, format!("bad number '{tok}'")))?;
    if !x.is_finite() {
        return Err(Error::parse(line, format!("non-finite number '{tok}'")));
    }
    Ok(x)
}

/// Triangle-only OBJ: comments and blank lines, then `v x y z` records, then
/// `f i j k` records with 1-based indices of already declared vertices.
pub fn parse_obj_strict(text: &str) -> Result<ObjMesh> {
    let mut mesh = ObjMesh { vertices: Vec::new(), faces: Vec::new() };
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_ascii_whitespace();
        let tag = toks.next().unwrap_or_default();
        let rest: Vec<&str> = toks.collect();
        if rest.len() != 3 {
            return Err(Error::parse(line, format!("expected 3 fields after '{tag}', got {}", rest.len())));
        }
        match tag {
            "v" => {
                if !mesh.faces.is_empty() {
                    return Err(Error::parse(line, "vertex after faces"));
                }
                let mut xyz = [0.0; 3];
                for (slot, tok) in xyz.iter_mut().zip(&rest) {
                    *slot = parse_real(tok, line)?;
                }
                mesh.vertices.push(xyz);
            }
            "f" => {
                let mut idx = [0usize; 3];
                for (slot, tok) in idx.iter_mut().zip(&rest) {
                    let i: usize = tok.parse().map_err(|_| Error::parse(line, format!("bad index '{tok}'")))?;
                    if i == 0 || i > mesh.vertices.len() {
                        return Err(Error::parse(line, format!("index {i} out of range 1..={}", mesh.vertices.len())));
                    }
                    *slot = i - 1;
                }
                if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
                    return Err(Error::parse(line, "degenerate face"));
                }
                mesh.faces.push(idx);
            }
            other => return Err(Error::parse(line, format!("unknown record '{other}'"))),
        }
    }
    Ok(mesh)
}

/// Rows of the CSV export, header checked.
pub fn parse_csv(text: &str) -> Result<Vec<[f64; 5]>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "r,theta,u,v,F")) => {}
        _ => return Err(Error::parse(1, "missing header 'r,theta,u,v,F'")),
    }
    lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(k, l)| {
            let fields: Vec<&str> = l.split(',').collect();
            if fields.len() != 5 {
                return Err(Error::parse(k + 1, format!("expected 5 fields, got {}", fields.len())));
            }
            let mut row = [0.0; 5];
            for (slot, tok) in row.iter_mut().zip(&fields) {
                *slot = parse_real(tok, k + 1)?;
            }
            Ok(row)
        })
        .collect()
}

/// `(vertex count, face count)` from an ascii PLY header.
pub fn ply_element_counts(text: &str) -> Result<(usize, usize)> {
    let mut lines = text.lines().enumerate();
    if lines.next().map(|(_, l)| l) != Some("ply") {
        return Err(Error::parse(1, "missing 'ply' magic"));
    }
    let (mut vertices, mut faces) = (None, None);
    for (k, l) in lines {
        if l == "end_header" {
            return match (vertices, faces) {
                (Some(v), Some(f)) => Ok((v, f)),
                _ => Err(Error::parse(k + 1, "header lacks vertex or face element")),
            };
        }
        let toks: Vec<&str> = l.split_ascii_whitespace().collect();
        if let ["element", name, n] = toks[..] {
            let n: usize = n.parse().map_err(|_| Error::parse(k + 1, "bad element count"))?;
            match name {
                "vertex" => vertices = Some(n),
                "face" => faces = Some(n),
                _ => {}
            }
        }
    }
    Err(Error::parse(0, "no end_header"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use minsurf_core::mesh::build_mesh;
    use minsurf_core::{DomainCase, Sign};

    fn small() -> DiskMesh {
        build_mesh(&DomainCase::slit(Sign::Plus), 2, 8, 0.5).unwrap()
    }

    fn render(format: MeshFormat) -> String {
        let mut buf = Vec::new();
        export_mesh(&small(), format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn obj_counts() {
        let text = render(MeshFormat::Obj);
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 17);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 24);
        let parsed = parse_obj_strict(&text).unwrap();
        assert_eq!((parsed.vertices.len(), parsed.faces.len()), (17, 24));
    }

    #[test]
    fn ply_counts() {
        assert_eq!(ply_element_counts(&render(MeshFormat::Ply)).unwrap(), (17, 24));
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let mesh = small();
        let rows = parse_csv(&render(MeshFormat::Csv)).unwrap();
        assert_eq!(rows.len(), mesh.vertices.len());
        for (row, v) in rows.iter().zip(&mesh.vertices) {
            assert_eq!(row[0], v.z.norm());
            assert_eq!([row[2], row[3], row[4]], [v.point.u, v.point.v, v.point.height]);
        }
    }

    #[test]
    fn strict_obj_rejections() {
        for bad in [
            "f 1 2 3\n",
            "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 4\n",
            "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\nv 1 1 1\n",
            "v 0 0\n",
            "v 0 0 nan\n",
            "vt 0 0 0\n",
            "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 1 2\n",
            "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 0 1 2\n",
        ] {
            assert!(parse_obj_strict(bad).is_err(), "{bad:?}");
        }
        assert!(parse_obj_strict("# c\n\nv 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n").is_ok());
    }

    #[test]
    fn format_names() {
        assert_eq!("OBJ".parse::<MeshFormat>().unwrap(), MeshFormat::Obj);
        assert!("stl".parse::<MeshFormat>().is_err());
    }
}
