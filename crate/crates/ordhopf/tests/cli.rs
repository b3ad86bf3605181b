use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn ordhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordhopf")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn golden_segment_table_is_byte_identical() {
    let o = ordhopf(&["golden", "segment-table", "--fixture", &fixture("segment_table.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("segment_table.txt")).unwrap());
}

#[test]
fn golden_mismatch_exits_one() {
    let dir = std::env::temp_dir().join(format!("ordhopf-golden-{}", std::process::id()));
    std::fs::write(&dir, "w | chi1 | chi2 | chi3 | bounded\n").unwrap();
    let o = ordhopf(&["golden", "segment-table", "--fixture", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_file(dir).unwrap();
}

#[test]
fn oracle_suite_on_hypersimplices() {
    let o = ordhopf(&["verify", "--suite", "oracle", "--family", "hypersimplex", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn classify_upsilon() {
    let o = ordhopf(&["classify", "--input", &fixture("upsilon.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("matroid=false"), "{text}");
    assert!(text.contains("prefix-pure(1234)=true"), "{text}");
}

#[test]
fn indicator_of_unbounded_hypersimplex() {
    let o = ordhopf(&["indicator", "--input", &fixture("unbounded_hypersimplex.json"), "--order", "4321"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = ordhopf(&["--format", "json", "indicator", "--input", &fixture("upsilon.json")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn antipode_json_is_sorted_and_parallel_independent() {
    let a = ordhopf(&["--format", "json", "antipode", "--input", &fixture("segment.json"), "--method", "ogp"]);
    let b = ordhopf(&[
        "--format", "json", "--parallel", "1", "antipode", "--input", &fixture("segment.json"), "--method", "takeuchi",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(!v["terms"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("ordhopf-bad-{}.json", std::process::id()));
    std::fs::write(&dir, "{\n  \"ground\": [\"1\",\n").unwrap();
    let o = ordhopf(&["classify", "--input", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    std::fs::remove_file(dir).unwrap();
    assert_eq!(ordhopf(&["verify", "--suite", "ziegler"]).status.code(), Some(2));
    assert_eq!(ordhopf(&["antipode", "--method", "star", "--n", "3"]).status.code(), Some(2));
    assert_eq!(ordhopf(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bounded_orders_of_cone_and_scrope_table() {
    let o = ordhopf(&["bounded-orders", "--input", &fixture("cone.json")]);
    assert!(stdout(&o).lines().any(|l| l == "1234"));
    let o = ordhopf(&["scrope", "--k", "7", "--intervals", "1:3,2:4,3:6,4:7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("reduced Euler characteristic"));
}

#[test]
#[ignore = "runs over all 10! orders; use --ignored"]
fn ziegler_ball_count() {
    let o = ordhopf(&["verify", "--suite", "ziegler", "--long", "--strategy", "exhaustive"]);
    assert_eq!(stdout(&o), "prefix-pure orders: 6528\n");
    let o = ordhopf(&["verify", "--suite", "ziegler", "--long"]);
    assert_eq!(stdout(&o), "prefix-pure orders: 6528\n");
}
