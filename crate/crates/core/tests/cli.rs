use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expinterp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<(String, f64, f64)> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("kind,"))
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].to_string(), f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect()
}

fn count(rows: &[(String, f64, f64)], kind: &str) -> usize {
    rows.iter().filter(|r| r.0 == kind).count()
}

#[test]
fn pade_one_has_zero_minus_two_and_pole_two() {
    let o = bin(&["interpolate", "--n", "1", "--precision-bits", "256"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let re = |k: &str| v[k][0]["re"].as_str().unwrap().parse::<f64>().unwrap();
    assert_eq!(v["zeros"].as_array().unwrap().len(), 1);
    assert!((re("zeros") + 2.0).abs() < 1e-15);
    assert!((re("poles") - 2.0).abs() < 1e-15);
    assert_eq!(v["metadata"]["precision"], 256);
    assert_eq!(v["metadata"]["normalization"], "q_at_zero_is_one");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    let o = bin(&["interpolate", "--scheme", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    assert_eq!(bin(&["interpolate", "--n", "2", "--precision-bits", "64"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "theorem1", "--n", "5", "--n-sweep", "5,10"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "theorem1", "--n-sweep", "20,10"]).status.code(), Some(2));
    assert_eq!(bin(&["figure", "--preset", "circle-61"]).status.code(), Some(2));
    assert_eq!(bin(&["interpolate", "--grid", "0:1"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn degenerate_scheme_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"n1": 2, "n2": 2, "points": [{"re": "0", "im": "0", "mult": 3}]}"#).unwrap();
    let o = bin(&["interpolate", "--scheme", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scheme_file_with_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    std::fs::write(
        &path,
        r#"{"n1": 1, "n2": 1, "points": [{"re": "0.5", "im": "0", "mult": 1}, {"re": "-0.5", "im": "0", "mult": 1}, {"re": "0", "im": "0.5", "mult": 1}]}"#,
    )
    .unwrap();
    let out = dir.path().join("r.json");
    let o = bin(&[
        "interpolate",
        "--scheme",
        path.to_str().unwrap(),
        "--grid",
        "-1:1:3,-1:1:2",
        "--out",
        out.to_str().unwrap(),
        "--precision-bits",
        "256",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["grid"].as_array().unwrap().len(), 6);
}

#[test]
fn two_point_preset_counts() {
    let o = bin(&["interpolate", "--preset", "two-point-50", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# precision: 1024\n"));
    assert!(text.contains("# scheme_hash: "));
    assert!(text.contains("# normalization: q_at_zero_is_one"));
    let rows = csv_rows(&text);
    // Type (51, 50): deg p = 51, deg q = 50, two nodes of multiplicity 51.
    assert_eq!(count(&rows, "zero"), 51);
    assert_eq!(count(&rows, "pole"), 50);
    assert_eq!(count(&rows, "interp_point"), 102);
}

#[test]
fn line_figure_is_conjugation_symmetric_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("line");
    let o = bin(&["figure", "--preset", "line-60", "--out", stem.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(stem.with_extension("csv")).unwrap();
    let svg = std::fs::read_to_string(stem.with_extension("svg")).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.contains("viewBox=\"-150 -150 300 300\""));

    let rows = csv_rows(&csv);
    assert_eq!(count(&rows, "interp_point"), 101);
    assert!(count(&rows, "pade_zero") == 50 && count(&rows, "pade_pole") == 50);
    for kind in ["zero", "pole"] {
        let pts: Vec<(f64, f64)> = rows.iter().filter(|r| r.0 == kind).map(|r| (r.1, r.2)).collect();
        for &(x, y) in &pts {
            let mirrored = pts.iter().any(|&(u, v)| (u - x).abs() + (v + y).abs() < 1e-9 * (1.0 + x.abs() + y.abs()));
            assert!(mirrored, "{kind} {x} {y} has no conjugate");
        }
    }

    let again = bin(&["figure", "--preset", "line-60", "--format", "svg"]);
    assert_eq!(stdout(&again), svg);
}

#[test]
fn verify_theorem1_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = bin(&["verify", "theorem1", "--n-sweep", "10,20,40", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS [3]"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["suite"], "theorem1");
    assert!(v["criteria"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn failing_verification_exits_with_one() {
    // A single-degree sweep cannot show a decrease, so the ratio rows fail.
    let o = bin(&["verify", "theorem1", "--n", "10"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}
