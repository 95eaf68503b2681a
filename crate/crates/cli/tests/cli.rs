use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn omega(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omega"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write_polygon(dir: &TempDir, name: &str, vertices: &[[f64; 2]]) -> String {
    let path = dir.path().join(name);
    let json = serde_json::json!({ "vertices": vertices });
    std::fs::write(&path, json.to_string()).unwrap();
    path.to_str().unwrap().to_owned()
}

fn regular(n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            [t.cos(), t.sin()]
        })
        .collect()
}

fn data_rows(text: &str) -> usize {
    text.lines().count() - 1
}

#[test]
fn leaf_writes_deduplicated_rows() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("leaf.csv");
    let out = omega(&["leaf", "--samples", "256", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("arc,param,delta,theta\n"));
    assert_eq!(data_rows(&csv), 511);
}

#[test]
fn leaf_to_stdout() {
    let out = omega(&["leaf", "--samples", "2", "--out", "-"]);
    assert!(out.status.success());
    assert_eq!(data_rows(&stdout(&out)), 3);
}

#[test]
fn leaf_usage_and_io_errors() {
    assert_eq!(omega(&["leaf", "--samples", "1"]).status.code(), Some(2));
    let out = omega(&["leaf", "--out", "/nonexistent-dir/leaf.csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot write"));
}

#[test]
fn dowker_regular_octagon() {
    let dir = TempDir::new().unwrap();
    let file = write_polygon(&dir, "oct.json", &regular(8));
    let out = omega(&["dowker", &file]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["delta_L"].as_f64().unwrap() - 0.9061637).abs() < 1e-6);
    assert!((v["theta_L"].as_f64().unwrap() - 1.1715729).abs() < 1e-6);
    assert!((v["area"].as_f64().unwrap() - 2.0 * 2f64.sqrt()).abs() < 1e-12);
    assert_eq!(v["inscribed"]["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["circumscribed"]["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn dowker_square_and_compact_output() {
    let dir = TempDir::new().unwrap();
    let file = write_polygon(
        &dir,
        "sq.json",
        &[[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]],
    );
    let out = omega(&["dowker", &file, "--json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!((v["delta_L"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert!((v["theta_L"].as_f64().unwrap() - 1.0).abs() < 1e-6);
}

#[test]
fn dowker_domain_and_parse_errors() {
    let dir = TempDir::new().unwrap();
    let tri = write_polygon(&dir, "tri.json", &[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
    let out = omega(&["dowker", &tri]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("not centrally symmetric"));

    let skew = write_polygon(
        &dir,
        "skew.json",
        &[[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -2.0]],
    );
    assert_eq!(omega(&["dowker", &skew]).status.code(), Some(3));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"vertices\": [[0, 0], [1").unwrap();
    assert_eq!(
        omega(&["dowker", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        omega(&["dowker", "/nonexistent.json"]).status.code(),
        Some(2)
    );
}

fn svg_numbers(svg: &str) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for line in svg.lines() {
        if let Some(rest) = line.trim().strip_prefix("<circle cx=\"") {
            let cx: f64 = rest.split('"').next().unwrap().parse().unwrap();
            let cy: f64 = rest
                .split("cy=\"")
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap()
                .parse()
                .unwrap();
            out.push((cx, cy));
        } else if let Some(rest) = line.trim().strip_prefix("<path class=") {
            let d = rest
                .split("d=\"")
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap();
            for token in d.split_whitespace().filter(|t| *t != "Z") {
                let (x, y) = token
                    .trim_start_matches(['M', 'L'])
                    .split_once(',')
                    .unwrap();
                out.push((x.parse().unwrap(), y.parse().unwrap()));
            }
        }
    }
    out
}

#[test]
fn scatter_csv_and_svg() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("s.csv");
    let svg = dir.path().join("s.svg");
    let out = omega(&[
        "scatter",
        "--count",
        "10",
        "--seed",
        "7",
        "--gon",
        "4",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("index,n,delta_L,theta_L,in_U\n"));
    assert_eq!(data_rows(&text), 10);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));

    let image = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(image.matches("<circle").count(), 10);
    assert_eq!(image.matches("<path").count(), 4);
    assert!(image.trim_end().ends_with("</svg>"));
    let (w, h) = (540.0, 840.0);
    let coords = svg_numbers(&image);
    assert!(coords.len() > 10);
    for (x, y) in coords {
        assert!(
            (0.0..=w).contains(&x) && (0.0..=h).contains(&y),
            "({x}, {y})"
        );
    }
}

#[test]
fn scatter_output_ignores_worker_cap() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_omega"))
            .args(["scatter", "--count", "40", "--seed", "42", "--gon", "4"])
            .env("OMEGA_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
    let bad = Command::new(env!("CARGO_BIN_EXE_omega"))
        .args(["scatter", "--count", "4"])
        .env("OMEGA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn scatter_rejects_empty_runs() {
    assert_eq!(omega(&["scatter", "--count", "0"]).status.code(), Some(2));
}

#[test]
fn regions_report() {
    let out = omega(&["regions", "0.95", "1.1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["in_P", "in_P0", "in_U", "in_leaf"] {
        assert_eq!(v[key], serde_json::Value::Bool(true), "{key}");
    }
    let out = omega(&["regions", "0.90", "1.17"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["in_U"], serde_json::Value::Bool(false));
    assert!(v["violated"]
        .as_array()
        .unwrap()
        .iter()
        .any(|s| s == "U:lower"));
}

#[test]
fn validate_filters_by_group() {
    let out = omega(&["validate", "--only", "leaf"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|l| l.contains("leaf.")));
    assert_eq!(
        omega(&["validate", "--only", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn validate_negative_control() {
    let out = omega(&["validate", "--only", "leaf", "--printed-alpha"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("leaf.endpoints"));
}

#[test]
fn validate_full_suite() {
    let out = omega(&["validate"]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn identical_flags_give_identical_bytes() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = omega(&[
            "scatter",
            "--count",
            "12",
            "--seed",
            "9",
            "--svg",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        (out.stdout, std::fs::read(Path::new(&path)).unwrap())
    };
    assert_eq!(run("a.svg"), run("b.svg"));
}
