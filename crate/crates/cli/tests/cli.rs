#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_solvgraph"));
    c.env_remove("SOLVGRAPH_WORKERS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn shipped(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../catalog")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn sol_of_e2_is_empty() {
    let o = run(&["sol", &shipped("E2_p3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "sol(L) = {} (empty)\n");
    assert!(stderr(&o).contains("super Jacobi identity fails on (x, x, y)"));
}

#[test]
fn sol_at_an_element_and_nilpotentizer() {
    let o = run(&["sol", &shipped("E1_p3.json"), "--element", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("sol_L(h) = {0, x, 2x, h,"),
        "{}",
        stdout(&o)
    );
    assert!(stdout(&o).ends_with("(9 elements)\n"));
    let o = run(&["sol", &shipped("E1_p3.json"), "--element", "1,0", "--nil"]);
    assert_eq!(stdout(&o), "nil_L(h) = {0, h, 2h} (3 elements)\n");
    let o = run(&["sol", &shipped("E1_p3.json"), "--element", "1,0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn graph_measure_matches_oracle() {
    let table = oracle::e2().pair_table();
    let (v, e) = table.solvable_graph();
    let (num, den) = oracle::nu(v.len(), e.len());
    let o = run(&[
        "graph",
        &shipped("E2_p3.json"),
        "--kind",
        "solvable",
        "--measure",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("|V|=26\n"), "{out}");
    assert!(out.contains(&format!("|E|={}\n", e.len())), "{out}");
    assert!(out.contains(&format!("nu={num}/{den} (≈ ")), "{out}");
}

#[test]
fn graph_exports() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let csv = dir.path().join("g.csv");
    let o = run(&[
        "graph",
        &shipped("E2_p3.json"),
        "--kind",
        "solvable",
        "--dot",
        dot.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("graph solvable {\n"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 26);
    let csv = std::fs::read_to_string(csv).unwrap();
    let edges: usize = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("|E|="))
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(csv.lines().count(), edges);
}

#[test]
fn graph_of_a_solvable_algebra_fails() {
    let o = run(&["graph", &shipped("E1_p3.json"), "--kind", "solvable"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_is_strict() {
    let ok = run(&["validate", &shipped("sl2_p3.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "valid: p=3 dim=3 (3|0)\n");
    let bad = run(&["validate", &shipped("E2_p3.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("(x, x, y)"));
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let even = write_temp(
        &dir,
        "p2.json",
        r#"{"p": 2, "dim_even": 1, "dim_odd": 0, "brackets": []}"#,
    );
    let o = run(&["validate", &even]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains('2'));
    let broken = write_temp(&dir, "broken.json", "{ not json");
    let o = run(&["info", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"));
    let o = run(&["info", "/definitely/not/here.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn absent_pairs_default_to_zero() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{"p": 3, "dim_even": 1, "dim_odd": 2, "basis_names": ["h","x","y"],
        "brackets": [{"i": 0, "j": 1, "coeffs": {"1": 1}}, {"i": 0, "j": 2, "coeffs": {"2": -1}}]}"#;
    let path = write_temp(&dir, "sparse.json", text);
    assert_eq!(run(&["validate", &path]).status.code(), Some(0));
    let info = stdout(&run(&["info", &path]));
    assert!(info.contains("solvable = true"), "{info}");
}

#[test]
fn info_reports_series() {
    let out = stdout(&run(&["info", "catalog:gl2split@3"]));
    assert!(out.contains("dim = 4 (even 4, odd 0)"));
    assert!(out.contains("derived series dims = 4 > 3 > 3"));
    assert!(out.contains("solvable = false"));
}

#[test]
fn catalog_commands() {
    let list = stdout(&run(&["catalog", "list"]));
    assert!(list.contains("algebra\tE2@3\n"));
    assert!(list.contains("morphism\tE2.psi@3\n"));
    let show = run(&["catalog", "show", "E2.psi@3"]);
    assert!(stdout(&show).contains("x -> y"));
    assert_eq!(run(&["catalog", "show", "nope@3"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let o = run(&["catalog", "export", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let exported = std::fs::read_to_string(dir.path().join("E2_p3.json")).unwrap();
    assert_eq!(
        exported,
        std::fs::read_to_string(shipped("E2_p3.json")).unwrap()
    );
}

#[test]
fn verify_exit_codes_and_format() {
    let o = run(&["verify", "ses"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().last().unwrap().starts_with("summary\tpass="));
    assert!(out
        .lines()
        .all(|l| l.starts_with("ses\t") || l.starts_with("summary\t")));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "ses", "--p", "7"]).status.code(), Some(2));
    let o = run(&[
        "verify",
        "solvabilizer",
        "--p",
        "5",
        "--trials",
        "3",
        "--seed",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("gen3:"));
}

#[test]
fn workers_from_environment() {
    let a = bin()
        .args(["verify", "iso"])
        .env("SOLVGRAPH_WORKERS", "1")
        .output()
        .unwrap();
    let b = run(&["--workers", "3", "verify", "iso"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        run(&["--workers", "0", "verify", "iso"]).status.code(),
        Some(2)
    );
}
