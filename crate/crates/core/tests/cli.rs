use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superpbw")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn dim_and_count() {
    assert_eq!(stdout(&["dim", "--algebra", "B(0,1)", "--labels", "3"]).trim(), "7");
    assert_eq!(stdout(&["polytope", "--algebra", "B(0,2)", "--labels", "1,0", "--count"]).trim(), "5");
    assert_eq!(stdout(&["dim", "--algebra", "D(2,1;2)", "--labels", "4,1,0"]).trim(), (16 * 3 * 2).to_string());
    assert_eq!(stdout(&["dim", "--algebra", "A(1,0)", "--labels", "2"]).trim(), "12");
}

#[test]
fn listing_matches_count() {
    let list = stdout(&["polytope", "--algebra", "B(0,2)", "--labels", "0,1", "--list"]);
    assert_eq!(list.lines().count(), 1 + 10);
}

#[test]
fn typicality() {
    assert_eq!(stdout(&["typical", "--algebra", "B(0,2)", "--labels", "1,1"]).trim(), "yes");
    assert!(stdout(&["typical", "--algebra", "D(2,1;1)", "--labels", "0,0,0"]).starts_with("no:"));
}

#[test]
fn basis_file() {
    let path = std::env::temp_dir().join(format!("superpbw-basis-{}.json", std::process::id()));
    let count = stdout(&["basis", "--algebra", "B(0,2)", "--labels", "1,1", "--out", path.to_str().unwrap()]);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(count.trim(), "35");
    assert_eq!(json["points"].as_array().unwrap().len(), 35);
}

#[test]
fn roots_json() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&["roots", "--algebra", "G(3)", "--json"])).unwrap();
    assert!(json.is_object());
}

#[test]
fn dyck_listing() {
    assert!(stdout(&["dyck", "--algebra", "B(0,2)", "--list"]).ends_with("4 paths\n"));
}

#[test]
fn apply_ops_support() {
    let out = stdout(&[
        "apply-ops", "--algebra", "D(2,1;1)", "--generator", "2e1", "--power", "5", "--ops",
        "e1-e2-e3,e1-e2+e3,e1+e2-e3,e1+e2+e3",
    ]);
    assert!(out.starts_with("support 3 monomials"));
}

#[test]
fn verify_exit_codes() {
    assert!(stdout(&["verify", "comb", "--max-m", "8", "--max-l", "8"]).ends_with("0 failed\n"));
    assert!(run(&["verify", "kt", "--max-n", "3"]).status.success());
    // the literal greedy split misses at n = 3, λ = ϖ₂ + ϖ₃
    let literal = run(&["verify", "split", "--algebra", "B(0,3)", "--max-label", "1", "--literal"]);
    assert_eq!(literal.status.code(), Some(1));
    assert!(run(&["verify", "split", "--algebra", "B(0,3)", "--max-label", "1"]).status.success());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["dim", "--algebra", "X", "--labels", "1"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "--algebra", "B(0,2)", "--labels", "1"]).status.code(), Some(2));
    assert_eq!(run(&["polytope", "--algebra", "D(2,1;1)", "--labels", "0,0,0", "--count"]).status.code(), Some(2));
}
