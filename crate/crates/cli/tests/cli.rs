use std::fs;

use circum_cli::{cli_main, EXIT_INVALID};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("circum").chain(args.iter().copied());
    let code = cli_main(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn cc_square_and_collinear() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(&dir, "square.json", r#"{"dim": 2, "points": [[0,0],[4,0],[0,4],[4,4]]}"#);
    let (code, out, _) = call(&["cc", &sq]);
    assert_eq!(code, 0);
    let center: Vec<f64> = out.lines().next().unwrap()["center: ".len()..]
        .split_whitespace()
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(center, vec![2.0, 2.0]);
    assert!(out.contains("radius: 2.8284271247461903e0"), "{out}");

    let col = write(&dir, "collinear.json", r#"{"dim": 2, "points": [[0,0],[1,1],[3,3]]}"#);
    assert_eq!(call(&["cc", &col]), (0, "EMPTY\n".into(), String::new()));
}

#[test]
fn cc_output_round_trips_to_full_precision() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(&dir, "tri.json", r#"{"dim": 3, "points": [[0.1,0.2,0.3],[1.7,-0.4,0.9],[0.3,2.2,-1.1]]}"#);
    let (_, out, _) = call(&["cc", &tri]);
    let set = circum::problems::load_points(std::path::Path::new(&tri)).unwrap();
    let exact = circum::circumcenter::circumcenter(&set, &circum::CircumConfig::default())
        .into_center()
        .unwrap();
    let printed: Vec<f64> = out.lines().next().unwrap()["center: ".len()..]
        .split_whitespace()
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(printed, exact.as_slice());
}

#[test]
fn malformed_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.json", r#"{"dim": "two", "points": []}"#);
    let (code, _, err) = call(&["cc", &bad]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("dim"), "{err}");
    assert_eq!(call(&["cc", "/nonexistent/points.json"]).0, EXIT_INVALID);
    assert_eq!(call(&["frobnicate"]).0, EXIT_INVALID);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn empty_intersection_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "parallel.json",
        r#"{"dim": 2, "subspaces": [{"base": [0,0], "span": [[1,0]]}, {"base": [0,1], "span": [[1,0]]}], "z": [3,4]}"#,
    );
    let (code, _, err) = call(&["solve", &p, "--method", "cdrm"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("no intersection"), "{err}");
}

#[test]
fn cdrm_needs_exactly_two_sets() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "three.json",
        r#"{"dim": 2, "subspaces": [{"base": [0,0], "span": [[1,0]]}, {"base": [0,0], "span": [[0,1]]}, {"base": [0,0], "span": [[1,1]]}], "z": [3,4]}"#,
    );
    assert_eq!(call(&["solve", &p, "--method", "cdrm"]).0, EXIT_INVALID);
    assert_eq!(call(&["solve", &p, "--method", "crm"]).0, 0);
}

#[test]
fn gen_solve_and_bench() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    let p = p.to_str().unwrap();
    let (code, _, err) = call(&["gen", "--n", "50", "--dims", "10,10", "--cf", "0.8", "--seed", "7", "-o", p]);
    assert_eq!(code, 0, "{err}");

    let (code, out, _) = call(&["solve", p, "--method", "cdrm"]);
    assert_eq!(code, 0);
    let rate: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("estimated rate: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(rate <= 0.85, "{out}");
    let cf: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("friedrichs cos: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((cf - 0.8).abs() < 1e-6);

    let (code, csv, summaries) = call(&["bench", p, "--methods", "cdrm,dr,map"]);
    assert_eq!(code, 0);
    assert!(csv.starts_with("iter,step_norm,dist_to_solution,residual,method\n"));
    for m in ["cdrm", "dr", "map"] {
        assert!(csv.lines().any(|l| l.ends_with(&format!(",{m}"))));
        assert!(summaries.contains(&format!("method: {m}")));
    }
}

#[test]
fn infeasible_generation_fails() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    let (code, _, _) = call(&["gen", "--n", "4", "--dims", "4,4", "--cf", "0.5", "-o", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = call(&["gen", "--n", "10", "--dims", "2,2", "--cf", "1.0", "-o", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
}
