use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use p19free_cli::corpus;
use p19free_cli::report::{Verdict, VerificationReport, SCHEMA, SCHEMA_VERSION};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_p19free"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(rel)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn schema_errors(instance: &Value) -> Vec<String> {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let errors = match compiled.validate(instance) {
        Ok(()) => Vec::new(),
        Err(errs) => errs
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect(),
    };
    errors
}

fn load_report(path: &Path) -> (Value, VerificationReport) {
    let text = std::fs::read_to_string(path).unwrap();
    (
        serde_json::from_str(&text).unwrap(),
        serde_json::from_str(&text).unwrap(),
    )
}

#[test]
fn mycielski_writes_canonical_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m5.graph");
    let o = run(&["mycielski", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("graph 23 71\n"));

    let o = run(&["mycielski", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "graph 2 1\nv 0 mycielski\nv 1 mycielski\ne 0 1\n"
    );
}

#[test]
fn mycielski_guard() {
    let o = run(&["mycielski", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn build_reduction_graphs() {
    let dir = tempfile::tempdir().unwrap();
    for (name, n) in [("single_clause", 41), ("fano", 141)] {
        let out = dir.path().join(format!("{name}.graph"));
        let input = data(&format!("instances/{name}.mnae"));
        let o = run(&[
            "build",
            input.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let header = std::fs::read_to_string(&out)
            .unwrap()
            .lines()
            .next()
            .unwrap()
            .to_string();
        assert!(header.starts_with(&format!("graph {n} ")), "{header}");
    }
}

#[test]
fn malformed_inputs_fail_with_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mnae");
    std::fs::write(&bad, "mnae 3 1\n0 1 1\n").unwrap();
    let o = run(&["build", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");

    let bad_graph = dir.path().join("bad.graph");
    std::fs::write(&bad_graph, "graph 2 1\nv 0 plain\nv 1 plain\ne 0 7\n").unwrap();
    let o = run(&["check", "triangle-free", bad_graph.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["check", "snake", data("core/g1.graph").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "missing --target");
}

#[test]
fn check_snake_on_core_graph() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("snake.json");
    let g = data("core/g0_3.graph");
    let o = run(&[
        "check",
        "snake",
        "--target",
        "19",
        g.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exhausted-no"));
    let record: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(record["decision"], "exhausted-no");
    assert_eq!(record["exhaustive"], true);

    let o = run(&[
        "check",
        "snake",
        "--target",
        "18",
        g.to_str().unwrap(),
        "--threads",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("found"));
}

#[test]
fn check_snake_budget_is_inconclusive() {
    let g = data("core/g3.graph");
    let o = run(&[
        "check",
        "snake",
        "--target",
        "19",
        g.to_str().unwrap(),
        "--budget-nodes",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("budget-exhausted"));
}

#[test]
fn check_coloring_and_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let m5 = dir.path().join("m5.graph");
    assert_eq!(
        run(&["mycielski", "5", "--out", m5.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let o = run(&["check", "coloring", "--k", "4", m5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not-colorable"));
    let o = run(&["check", "coloring", "--k", "5", m5.to_str().unwrap()]);
    assert!(stdout(&o).contains(": colorable"));

    let o = run(&[
        "check",
        "triangle-free",
        data("core/g1.graph").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("triangle-free (pass)"));
}

#[test]
fn verify_all_passes_and_matches_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&[
        "verify-all",
        "--report",
        path.to_str().unwrap(),
        "--threads",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let (value, report) = load_report(&path);
    assert_eq!(schema_errors(&value), Vec::<String>::new());
    assert_eq!(report.verdict, Verdict::Pass);
    assert_eq!(report.schema_version, SCHEMA_VERSION);
    assert!(report
        .checks
        .iter()
        .all(|c| c.status == Verdict::Pass && c.exhaustive));
    let p19 = report
        .checks
        .iter()
        .filter(|c| c.name == "core/p19-free")
        .count();
    let p18 = report
        .checks
        .iter()
        .filter(|c| c.name == "core/p18-witness" && c.witness.is_some())
        .count();
    assert_eq!((p19, p18), (9, 6));
    assert!(stdout(&o).contains("verdict: pass"));
}

#[test]
fn verify_all_small_budget_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&[
        "verify-all",
        "--report",
        path.to_str().unwrap(),
        "--budget-nodes",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let (value, report) = load_report(&path);
    assert_eq!(schema_errors(&value), Vec::<String>::new());
    assert_eq!(report.verdict, Verdict::Inconclusive);
    assert!(report.failures().all(|c| c.status == Verdict::Inconclusive));
    for c in report.checks.iter().filter(|c| c.name == "core/p19-free") {
        assert_eq!(
            (c.status, c.decision.as_str()),
            (Verdict::Inconclusive, "budget-exhausted"),
            "{}",
            c.target
        );
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let mut report = serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "p19free", "version": "0.1.0"},
        "seed": 19,
        "budget": {"max_nodes": null, "max_seconds": 7200.0},
        "checks": [],
        "observations": [],
        "verdict": "pass",
        "total_nodes": 0,
        "wall_seconds": 0.0
    });
    assert!(schema_errors(&report).is_empty());
    report["verdict"] = "maybe".into();
    assert!(!schema_errors(&report).is_empty());
}

#[test]
fn bundled_instance_files_match_corpus() {
    let dir = data("instances");
    let bless = std::env::var_os("P19FREE_BLESS").is_some();
    for inst in corpus::bundled(corpus::DEFAULT_SEED) {
        let path = dir.join(format!("{}.mnae", inst.name));
        if bless {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, inst.instance.to_text()).unwrap();
        }
        let text =
            std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(
            p19free_core::parse_mnae(&text).unwrap(),
            inst.instance,
            "{}",
            inst.name
        );
    }
}
