use minsurf::cli::run;
use minsurf::export::{parse_csv, parse_obj_strict, ply_element_counts};
use minsurf::records::{EvalRecord, FigureRecord, ReportRecord};

fn minsurf(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("minsurf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_jun_origin() {
    let (code, out, _) = minsurf(&["eval", "--family", "jun", "--p", "0,1", "--z", "0,0"]);
    assert_eq!(code, 0);
    let value = |key: &str| -> f64 {
        let line = out.lines().find(|l| l.starts_with(&format!("{key} "))).unwrap();
        line.split_whitespace().nth(1).unwrap().parse().unwrap()
    };
    assert_eq!((value("u"), value("v"), value("F")), (0.0, 1.0, 0.0));
}

#[test]
fn eval_json_round_trips() {
    let (code, out, _) =
        minsurf(&["eval", "--family", "strip", "--alpha", "3pi/4", "--sign", "-", "--z", "-0.3,0.45", "--json"]);
    assert_eq!(code, 0);
    let rec: EvalRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.case.alpha.as_deref(), Some("3pi/4"));
    assert_eq!(rec.case.sign, "-");
    assert_eq!((rec.z_re.0, rec.z_im.0), (-0.3, 0.45));
    let again = serde_json::to_string(&rec).unwrap();
    assert_eq!(again.trim(), out.trim());
    // values agree with the library to the last bit
    let case = minsurf_core::DomainCase::strip("3pi/4".parse().unwrap(), minsurf_core::Sign::Minus).unwrap();
    let p = minsurf_core::surface_point(&case, minsurf_core::Complex::new(-0.3, 0.45)).unwrap();
    assert_eq!((rec.u.0, rec.v.0, rec.height.0), (p.u, p.v, p.height));
}

#[test]
fn symbolic_quarter_angle_is_special_and_float_is_rejected() {
    let (code, _, _) = minsurf(&["eval", "--family", "halfplane", "--gamma", "pi/4", "--z", "0.1,0.2"]);
    assert_eq!(code, 0);
    let (code, _, err) = minsurf(&["eval", "--family", "halfplane", "--gamma", "0.7853981633974483", "--z", "0.1,0.2"]);
    assert_eq!(code, 2);
    assert!(err.contains("ill-conditioned"), "{err}");
}

#[test]
fn argument_errors_exit_2() {
    for args in [
        &["eval", "--family", "halfplane", "--z", "0,0"][..],
        &["eval", "--family", "slit", "--gamma", "1", "--z", "0,0"],
        &["eval", "--family", "slit", "--z", "1.5,0"],
        &["eval", "--family", "slit", "--z", "0.5"],
        &["eval", "--family", "jun", "--p", "0,-1", "--z", "0,0"],
        &["eval", "--family", "strip", "--alpha", "pi/3", "--z", "0,0"],
        &["eval", "--family", "slit", "--sign", "x", "--z", "0,0"],
        &["verify", "--family", "slit", "--grid", "1x8"],
        &["verify", "--family", "slit", "--rmax", "0.999"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(minsurf(args).0, 2, "{args:?}");
    }
}

#[test]
fn verify_passes_for_slit_and_reports_json() {
    let (code, out, _) = minsurf(&["verify", "--family", "slit"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("all checks passed"));
    let (code, out, _) = minsurf(&["verify", "--family", "halfplane", "--gamma", "2", "--grid", "10x16", "--json"]);
    assert_eq!(code, 0);
    let rec: ReportRecord = serde_json::from_str(&out).unwrap();
    assert!(rec.all_pass);
    assert_eq!((rec.nr, rec.ntheta), (10, 16));
    assert!(rec.checks.iter().any(|c| c.name == "residue_identity"));
}

#[test]
fn verify_failure_exits_1() {
    let (code, out, _) =
        minsurf(&["verify", "--family", "halfplane", "--gamma", "0.7853991633974483", "--grid", "4x8"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("verification FAILED"));
    assert!(out.contains("FAIL oracle_h"));
}

#[test]
fn mesh_in_three_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let base = ["mesh", "--family", "halfplane", "--gamma", "pi/4", "--grid", "6x16", "--out"];

    let obj = path("s.obj");
    let args: Vec<&str> = base.iter().copied().chain([obj.as_str(), "--format", "obj"]).collect();
    assert_eq!(minsurf(&args).0, 0);
    let mesh = parse_obj_strict(&std::fs::read_to_string(&obj).unwrap()).unwrap();
    assert_eq!((mesh.vertices.len(), mesh.faces.len()), (97, 16 * 11));

    let ply = path("s.ply");
    let args: Vec<&str> = base.iter().copied().chain([ply.as_str(), "--format", "ply"]).collect();
    assert_eq!(minsurf(&args).0, 0);
    assert_eq!(ply_element_counts(&std::fs::read_to_string(&ply).unwrap()).unwrap(), (97, 176));

    let csv = path("s.csv");
    let args: Vec<&str> = base.iter().copied().chain([csv.as_str(), "--format", "csv"]).collect();
    assert_eq!(minsurf(&args).0, 0);
    let rows = parse_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    assert_eq!(rows.len(), 97);
    for (row, v) in rows.iter().zip(&mesh.vertices) {
        assert_eq!([row[2], row[3], row[4]], *v);
    }

    let args: Vec<&str> = base.iter().copied().chain([csv.as_str(), "--format", "stl"]).collect();
    assert_eq!(minsurf(&args).0, 2);
}

#[test]
fn mesh_default_grid() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("d.obj");
    let (code, out, _) = minsurf(&["mesh", "--family", "jun", "--p", "0,1", "--out", obj.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("10241 vertices"), "{out}");
}

#[test]
fn figure_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig.json");
    let p = out.to_str().unwrap();
    assert_eq!(minsurf(&["figure", "--family", "slit", "--out", p, "--rings", "0.5,0.9", "--spokes", "4"]).0, 0);
    let fig: FigureRecord = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(fig.curves.len(), 6);
    let ring = &fig.curves[0];
    assert_eq!(ring.kind, "ring");
    assert_eq!(ring.u.first(), ring.u.last());
    assert!(fig.curves.iter().all(|c| c.u.len() >= 16 && c.u.len() == c.v.len()));

    assert_eq!(minsurf(&["figure", "--family", "strip", "--alpha", "pi/2", "--out", p]).0, 0);
    let fig: FigureRecord = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(fig.curves.len(), 10 + 24);

    assert_eq!(minsurf(&["figure", "--family", "slit", "--out", p, "--rings", "", "--spokes", "0"]).0, 0);
    let fig: FigureRecord = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(fig.curves.is_empty());

    assert_eq!(minsurf(&["figure", "--family", "slit", "--out", p, "--rings", "1.2"]).0, 2);
}
