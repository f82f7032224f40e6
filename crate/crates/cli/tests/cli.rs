use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn eigensum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigensum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn generate(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["--out", path.to_str().unwrap(), "gen"];
    full.extend_from_slice(args);
    let out = eigensum(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("valid JSON")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_path_format() {
    let out = eigensum(&["gen", "path", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3 2\n0 1\n1 2\n");
}

#[test]
fn gen_edge_counts() {
    let join = stdout(&eigensum(&["gen", "join", "5", "2"]));
    assert!(join.starts_with("5 7\n"));
    assert_eq!(join.lines().count(), 8);
    assert!(stdout(&eigensum(&["gen", "complete", "4"])).starts_with("4 6\n"));
}

#[test]
fn gen_random_is_seeded() {
    let a = eigensum(&["--seed", "11", "gen", "random", "25", "0.2"]);
    let b = eigensum(&["--seed", "11", "gen", "random", "25", "0.2"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(code(&eigensum(&["gen", "join", "5", "9"])), 2);
    assert_eq!(code(&eigensum(&["gen", "random", "5"])), 2);
    assert_eq!(code(&eigensum(&["gen", "banana", "5"])), 2);
}

fn spectrum_values(file: &Path, kind: &str) -> Vec<f64> {
    let out = eigensum(&["spectrum", "--file", p(file), "--kind", kind]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,value"));
    lines
        .enumerate()
        .map(|(i, l)| {
            let (idx, v) = l.split_once(',').unwrap();
            assert_eq!(idx.parse::<usize>().unwrap(), i);
            v.parse().unwrap()
        })
        .collect()
}

#[test]
fn spectrum_k4_laplacian() {
    let dir = TempDir::new().unwrap();
    let k4 = generate(&dir, "k4.txt", &["complete", "4"]);
    let v = spectrum_values(&k4, "laplacian");
    for (x, want) in v.iter().zip([0.0, 4.0, 4.0, 4.0]) {
        assert!((x - want).abs() < 1e-10, "{v:?}");
    }
}

#[test]
fn spectrum_star_adjacency() {
    let dir = TempDir::new().unwrap();
    let star = generate(&dir, "s4.txt", &["star", "4"]);
    let v = spectrum_values(&star, "adjacency");
    let r = 3f64.sqrt();
    for (x, want) in v.iter().zip([r, 0.0, 0.0, -r]) {
        assert!((x - want).abs() < 1e-10, "{v:?}");
    }
}

#[test]
fn jacobi_solver_agrees() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "r.txt", &["random", "20", "0.3"]);
    let a = spectrum_values(&g, "normalized");
    let out = eigensum(&[
        "--solver",
        "jacobi",
        "spectrum",
        "--file",
        p(&g),
        "--kind",
        "normalized",
    ]);
    let text = stdout(&out);
    let b: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split_once(',').unwrap().1.parse().unwrap())
        .collect();
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() < 1e-10);
    }
}

#[test]
fn spectrum_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 1\n0 5\n").unwrap();
    let out = eigensum(&["spectrum", "--file", p(&bad)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&eigensum(&["spectrum", "--file", "/nonexistent/graph.txt"])), 2);
}

#[test]
fn k4_all_holds_with_equalities() {
    let dir = TempDir::new().unwrap();
    let k4 = generate(&dir, "k4.txt", &["complete", "4"]);
    let out = eigensum(&["bounds", "all", "--file", p(&k4)]);
    assert_eq!(code(&out), 0);
    let reports = json(&out);
    let reports = reports.as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        assert_eq!(r["holds"], Value::Bool(true), "{r}");
    }
    for name in [
        "fiedler_lambda1",
        "fiedler_lambda_max",
        "pair_sum_lowest",
        "pair_sum_highest",
    ] {
        let r = reports.iter().find(|r| r["name"] == name).unwrap();
        assert_eq!(r["verdict"], "EQUALITY", "{name}");
    }
}

#[test]
fn star5_laplacian_pairs_equality() {
    let dir = TempDir::new().unwrap();
    let star = generate(&dir, "s5.txt", &["star", "5"]);
    let out = eigensum(&["bounds", "laplacian-pairs", "--k", "2", "--file", p(&star)]);
    assert_eq!(code(&out), 0);
    let reports = json(&out);
    assert_eq!(reports.as_array().unwrap().len(), 1);
    assert_eq!(reports[0]["verdict"], "EQUALITY");
    assert_eq!(reports[0]["params"]["k"], 2);
    assert_eq!(reports[0]["pairs_or_subset"].as_array().unwrap().len(), 5);
}

#[test]
fn field_order_is_fixed() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "c6.txt", &["cycle", "6"]);
    let text = stdout(&eigensum(&["bounds", "fiedler", "--file", p(&g)]));
    let keys = [
        "\"name\"",
        "\"params\"",
        "\"relation\"",
        "\"bound\"",
        "\"measured\"",
        "\"slack\"",
        "\"verdict\"",
        "\"holds\"",
        "\"asserted\"",
        "\"pairs_or_subset\"",
        "\"note\"",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn explicit_pairs_file() {
    let dir = TempDir::new().unwrap();
    let star = generate(&dir, "s5.txt", &["star", "5"]);
    let pairs = dir.path().join("pairs.txt");
    fs::write(&pairs, "0 1\n1 0\n0 2\n2 0\n0 3\n3 0\n0 4\n4 0\n1 2\n2 1\n").unwrap();
    let out = eigensum(&[
        "bounds",
        "laplacian-pairs",
        "--k",
        "3",
        "--pairs-file",
        p(&pairs),
        "--file",
        p(&star),
    ]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)[0];
    assert_eq!(r["bound"], 3);
    assert_eq!(r["verdict"], "PASS");

    let wrong_size = eigensum(&[
        "bounds",
        "laplacian-pairs",
        "--k",
        "2",
        "--pairs-file",
        p(&pairs),
        "--file",
        p(&star),
    ]);
    assert_eq!(code(&wrong_size), 2);
    let no_k = eigensum(&[
        "bounds",
        "laplacian-pairs",
        "--pairs-file",
        p(&pairs),
        "--file",
        p(&star),
    ]);
    assert_eq!(code(&no_k), 2);
}

#[test]
fn verbatim_reports_are_informational() {
    let dir = TempDir::new().unwrap();
    let star = generate(&dir, "s4.txt", &["star", "4"]);
    let out = eigensum(&[
        "bounds",
        "adjacency",
        "--k",
        "2",
        "--paper-verbatim",
        "--file",
        p(&star),
    ]);
    assert_eq!(code(&out), 0);
    let reports = json(&out);
    let printed: Vec<&Value> = reports
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["asserted"] == Value::Bool(false))
        .collect();
    assert_eq!(printed.len(), 2);
    assert!(printed.iter().any(|r| r["verdict"] == "FAIL"));
}

fn cert(file: &Path, max_dim: &str) -> Value {
    let out = eigensum(&["embed-cert", "--file", p(file), "--max-dim", max_dim]);
    assert_eq!(code(&out), 0);
    json(&out)
}

#[test]
fn embed_cert_examples() {
    let dir = TempDir::new().unwrap();
    let k5 = cert(&generate(&dir, "k5.txt", &["complete", "5"]), "2");
    assert_eq!(k5[0]["nu"], 1);
    assert_eq!(k5[0]["verdict"], "EXCLUDED");
    assert!(k5[0]["first_violation_k"].as_u64().is_some());
    assert!(k5[0]["slack"].as_f64().unwrap() < 0.0);

    let p50 = cert(&generate(&dir, "p50.txt", &["path", "50"]), "1");
    assert_eq!(p50[0]["verdict"], "NOT_EXCLUDED");

    let c8 = cert(&generate(&dir, "c8.txt", &["cycle", "8"]), "2");
    assert_eq!(c8[1]["nu"], 2);
    assert_eq!(c8[1]["verdict"], "NOT_EXCLUDED");
}

#[test]
fn embed_cert_disconnected_exits_2() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("two.txt");
    fs::write(&g, "4 2\n0 1\n2 3\n").unwrap();
    let out = eigensum(&["embed-cert", "--file", p(&g)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not connected"));
}

#[test]
fn disconnected_bounds_are_marked() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("two.txt");
    fs::write(&g, "6 4\n0 1\n1 2\n3 4\n4 5\n").unwrap();
    let out = eigensum(&["bounds", "laplacian-pairs", "--file", p(&g)]);
    assert_eq!(code(&out), 0);
    for r in json(&out).as_array().unwrap() {
        assert!(r["note"].as_str().unwrap().contains("not connected"));
    }
}

#[test]
fn lattice_check_grid() {
    let dir = TempDir::new().unwrap();
    let grid = generate(&dir, "grid.txt", &["grid", "5x4"]);
    let out = eigensum(&["lattice", "check", "--file", p(&grid), "--transform", "riesz:3:2"]);
    assert_eq!(code(&out), 0);
    let reports = json(&out);
    let reports = reports.as_array().unwrap();
    assert!(reports.iter().any(|r| r["name"] == "lattice_weyl"));
    assert!(reports.iter().any(|r| r["name"] == "karamata_convex"));
    assert!(reports.iter().all(|r| r["verdict"] != "FAIL"));
}

#[test]
fn lattice_check_cluster() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("cl.txt");
    let out = eigensum(&["--seed", "5", "--out", p(&file), "gen", "cluster", "60", "--nu", "3"]);
    assert_eq!(code(&out), 0);
    let out = eigensum(&["lattice", "check", "--file", p(&file)]);
    assert_eq!(code(&out), 0);
}

#[test]
fn report_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "r.txt", &["random", "18", "0.3"]);
    let a = eigensum(&["report", "--file", p(&g)]);
    let b = eigensum(&["report", "--file", p(&g)]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = eigensum(&["report", "--file", p(&g), "--format", "csv"]);
    let d = eigensum(&["report", "--file", p(&g), "--format", "csv"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn report_join_traces() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "j.txt", &["join", "6", "2"]);
    let doc = json(&eigensum(&["report", "--file", p(&g)]));
    let reports = doc["reports"].as_array().unwrap();
    let trace = reports.iter().find(|r| r["name"] == "trace_sum").unwrap();
    assert_eq!(trace["bound"], 18);
    assert!(trace["holds"].as_bool().unwrap());
    assert_eq!(doc["graph"]["m"], 9);
    assert_eq!(doc["summary"]["asserted_failures"], 0);
    assert!(doc["manifest"]["input_digest"]
        .as_str()
        .unwrap()
        .starts_with("fnv1a64:"));
    assert_eq!(doc["embedding"].as_array().unwrap().len(), 3);
}

#[test]
fn digest_ignores_formatting() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    fs::write(&a, "3 2\n0 1\n1 2\n").unwrap();
    fs::write(&b, "# a path\n3 2\n2 1\n\n1 0\n").unwrap();
    let da = json(&eigensum(&["report", "--file", p(&a)]))["manifest"]["input_digest"].clone();
    let db = json(&eigensum(&["report", "--file", p(&b)]))["manifest"]["input_digest"].clone();
    assert_eq!(da, db);
}

#[test]
fn report_lattice_mode() {
    let dir = TempDir::new().unwrap();
    let grid = generate(&dir, "g.txt", &["grid", "4x4"]);
    let doc = json(&eigensum(&["report", "--lattice", "--file", p(&grid)]));
    assert_eq!(doc["graph"]["lattice_dimension"], 2);
    let reports = doc["reports"].as_array().unwrap();
    assert!(reports.iter().any(|r| r["name"] == "riesz_mean_weyl"));
}

#[test]
fn exit_code_tracks_asserted_failures() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "j.txt", &["join", "6", "2"]);
    for tol in ["1e-9", "0"] {
        let out = eigensum(&["--tolerance", tol, "report", "--file", p(&g)]);
        let failures = json(&out)["summary"]["asserted_failures"].as_u64().unwrap();
        assert_eq!(code(&out), if failures > 0 { 1 } else { 0 }, "tolerance {tol}");
    }
    assert_eq!(code(&eigensum(&["--tolerance", "-1", "report", "--file", p(&g)])), 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("values.csv");
    let g = generate(&dir, "c.txt", &["cycle", "5"]);
    let out = eigensum(&["--out", p(&target), "spectrum", "--file", p(&g)]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert!(fs::read_to_string(&target).unwrap().starts_with("index,value\n0,"));
}
