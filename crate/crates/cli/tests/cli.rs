use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use orchard_core::geometry::input::load_configuration;
use orchard_core::{partition_by_separation, TwoPartition};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn orchard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orchard")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn unit_square_json() {
    let o = orchard(&["color", path(&data("unit_square.json")), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"class_of_0\":[0,2],\"other\":[1,3]}\n");
}

#[test]
fn json_output_round_trips() {
    for name in ["unit_square.json", "triangle_interior.csv", "line5.csv", "pentagon.json", "cube.json"] {
        let file = data(name);
        let o = orchard(&["color", path(&file), "--format", "json"]);
        let back: TwoPartition = serde_json::from_str(&stdout(&o)).unwrap();
        let config = load_configuration(&file).unwrap();
        assert_eq!(back, partition_by_separation(&config).unwrap(), "{name}");
    }
}

#[test]
fn line_text_alternates() {
    let o = orchard(&["color", path(&data("line5.csv"))]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let classes: Vec<&str> = text.lines().skip(1).take(5).map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(classes, ["A", "B", "A", "B", "A"]);
    assert!(text.ends_with("A: 0 2 4\nB: 1 3\n"));
}

#[test]
fn non_generic_input() {
    let file = data("collinear.json");
    let o = orchard(&["color", path(&file)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("{0, 1, 2}"), "{}", stderr(&o));
    let o = orchard(&["check", path(&file)]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "non-generic: points {0, 1, 2} are affinely dependent\n");
    let o = orchard(&["check", path(&file), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"], serde_json::json!([0, 1, 2]));
    let o = orchard(&["check", path(&data("unit_square.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "generic: 4 points in R^2\n");
}

#[test]
fn parse_errors_name_the_line() {
    let o = orchard(&["color", path(&data("bad_coordinate.json"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
    let o = orchard(&["color", path(&data("repeated.csv"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let o = orchard(&["color", "/nonexistent/points.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budgets() {
    let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
    for i in 0..13 {
        writeln!(f, "{i},{}", i * i).unwrap();
    }
    let p = f.path().to_str().unwrap();
    let o = orchard(&["color", p]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("--max-points 12"));
    let o = orchard(&["color", p, "--max-points", "13"]);
    assert_eq!(o.status.code(), Some(0));

    let o = orchard(&["verify", "--n-max", "7"]);
    assert_eq!(o.status.code(), Some(4));
    let o = orchard(&["stats", "--n", "6", "--d", "2", "--box-max", "2"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn svg_rules() {
    let o = orchard(&["color", path(&data("line5.csv")), "--format", "svg"]);
    assert_eq!(o.status.code(), Some(1));
    let o = orchard(&["color", path(&data("unit_square.json")), "--format", "svg", "--lines"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg "));
    assert_eq!(svg.matches("<circle").count(), 4);
    assert_eq!(svg.matches("<line").count(), 6);
}

#[test]
fn verify_table() {
    let o = orchard(&["verify", "--n-max", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let shapes: Vec<(u64, u64)> = rows.iter().map(|r| (r["n"].as_u64().unwrap(), r["l"].as_u64().unwrap())).collect();
    assert_eq!(shapes, [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]);
    assert_eq!(rows[4]["solution_dimension"], 0);
    assert_eq!(rows[1]["exotic_detected"], true);
    assert_eq!(rows[3]["solution_dimension"], 1);
}

#[test]
fn stats_small_cases() {
    let o = orchard(&["stats", "--n", "4", "--d", "2", "--trials", "400", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 0);
    assert_eq!(v["splits"][0]["count"], 0);
    let o = orchard(&["stats", "--n", "3", "--d", "2", "--trials", "50", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["splits"][0]["count"], 50);
}

#[test]
fn cocycle_report() {
    let o = orchard(&["cocycle", path(&data("unit_square.json")), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["l"], 3);
    assert_eq!(v["kind"], "antisymmetric");
    assert_eq!(v["cocycle"].as_array().unwrap().len(), 6);
    assert_eq!(v["partition"]["other"], serde_json::json!([1, 3]));
}

#[test]
fn monochromatic_share_matches_convex_position_probability() {
    // five uniform points in a square are in convex position with
    // probability (C(8,4)/5!)^2; those, and only those, are monochromatic
    const TRIALS: u64 = 20_000;
    const SIGMAS: f64 = 5.0;
    let p = (70.0f64 / 120.0).powi(2);
    let report = orchard_cli::stats::run(&orchard_cli::stats::StatsParams {
        n: 5,
        d: 2,
        trials: TRIALS,
        seed: 3,
        box_max: orchard_core::geometry::sample::default_box(5),
        max_attempts: 10_000,
    })
    .unwrap();
    let share = report.count(0) as f64 / TRIALS as f64;
    let sd = (p * (1.0 - p) / TRIALS as f64).sqrt();
    assert!((share - p).abs() < SIGMAS * sd, "share {share}, expected {p} ± {}", SIGMAS * sd);
}
