use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_calissons"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

const ENCLOSED_INFINITE: &str =
    r#"{"region":{"type":"infinite"},"edges":[{"v":[0,0],"axis":"x"},{"v":[1,0],"axis":"y"},{"v":[1,1],"axis":"z"}]}"#;

#[test]
fn solve_then_check_hexagon_six() {
    let dir = tempfile::tempdir().unwrap();
    let doc = data("hexagon6.json");
    let out = dir.path().join("solution.json");
    for method in ["advancing", "bellman-ford"] {
        for side in ["--highest", "--lowest"] {
            let o = run(&["solve", doc.to_str().unwrap(), side, "--method", method, "--out", out.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
            let c = run(&["check", doc.to_str().unwrap(), out.to_str().unwrap()]);
            assert_eq!(c.status.code(), Some(0));
            assert_eq!(stdout(&c)["violations"], serde_json::json!([]));
        }
    }
}

#[test]
fn both_methods_print_the_same_tiling() {
    let doc = data("hexagon6.json");
    let a = stdout(&run(&["solve", doc.to_str().unwrap(), "--lowest"]));
    let b = stdout(&run(&["solve", doc.to_str().unwrap(), "--lowest", "--method", "bellman-ford"]));
    assert_eq!(a["tiling"], b["tiling"]);
}

#[test]
fn decide_enclosed_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "tri.json", ENCLOSED_INFINITE);
    let o = run(&["decide", &f]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout(&o);
    assert_eq!(v["verdict"], "unsolvable");
    let total: i64 = v["cycle"].as_array().unwrap().iter().map(|a| a["weight"].as_i64().unwrap()).sum();
    assert!(total < 0);
    assert_eq!(v["total_weight"].as_i64(), Some(total));
}

#[test]
fn enumerate_counts_hexagon_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "h2.json", r#"{"region":{"type":"hexagon","n":2},"edges":[]}"#);
    let o = run(&["enumerate", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o)["count"], 20);
    let o = run(&["enumerate", &f, "--limit", "3"]);
    assert_eq!(stdout(&o)["count"], 3);
    assert_eq!(stdout(&o)["truncated"], true);
}

#[test]
fn input_errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "bad.json", "{\"region\": {\"type\": \"hexagon\", \"n\": 2},\n \"edges\": [{\"v\": [0, 0]}]}");
    let o = run(&["solve", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["code"], "parse_error");
    assert_eq!(err["error"]["location"], "line 2, column 24");

    let f = write(&dir, "edge.json", r#"{"region":{"type":"hexagon","n":1},"edges":[{"v":[1,0],"axis":"y"}]}"#);
    let o = run(&["solve", &f]);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["code"], "edge_on_boundary");

    assert_eq!(run(&["solve", "/nonexistent/doc.json"]).status.code(), Some(2));
    let inf = write(&dir, "inf.json", ENCLOSED_INFINITE);
    assert_eq!(run(&["solve", &inf]).status.code(), Some(2));
    assert_eq!(run(&["decide", data("hexagon6.json").to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn check_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "h1.json", r#"{"region":{"type":"hexagon","n":1},"edges":[{"v":[0,0],"axis":"x"}]}"#);
    // the raised-cube tiling covers the x edge at the origin
    let t = write(
        &dir,
        "t.json",
        r#"[{"cube":[1,0,0],"normal":"x"},{"cube":[0,1,0],"normal":"y"},{"cube":[0,0,1],"normal":"z"}]"#,
    );
    let o = run(&["check", &f, &t]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout(&o);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["kind"], "x_overlapped");
}

#[test]
fn render_is_deterministic() {
    let doc = data("hexagon6.json");
    let a = run(&["render", doc.to_str().unwrap()]);
    let b = run(&["render", doc.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("<svg"));
    let ascii = run(&["render", doc.to_str().unwrap(), "--format", "ascii"]);
    assert!(String::from_utf8_lossy(&ascii.stdout).contains('#'));
}

#[test]
fn encode_sat_prints_dimacs() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "h1.json", r#"{"region":{"type":"hexagon","n":1}}"#);
    let o = run(&["encode-sat", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).lines().any(|l| l == "p cnf 6 12"));
}

#[test]
fn generate_is_seeded() {
    for kind in ["region", "hexagon", "infinite"] {
        let a = run(&["generate", "--kind", kind, "--seed", "9", "--size", "6"]);
        let b = run(&["generate", "--kind", kind, "--seed", "9", "--size", "6"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        let c = run(&["generate", "--kind", kind, "--seed", "10", "--size", "6"]);
        assert_ne!(a.stdout, c.stdout, "{kind}");
    }
}

#[test]
fn standard_input_is_accepted() {
    use std::io::Write;
    let mut child = bin()
        .args(["enumerate", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"region":{"type":"hexagon","n":1}}"#).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o)["count"], 2);
}
