//! End-to-end checks of the compiled binary: formats, golden values, and
//! byte-exact determinism.

use std::io::Write;
use std::process::{Command, Stdio};

fn ilth() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ilth"))
}

fn run_ok(args: &[&str]) -> String {
    let out = ilth().args(args).output().expect("spawn ilth");
    assert!(
        out.status.success(),
        "ilth {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> String {
    let mut child = ilth()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ilth");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(
        out.status.success(),
        "ilth {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn generate_writes_figure_one_instance() {
    let out = run_ok(&["generate", "--k", "3", "--t", "1"]);
    assert_eq!(out, "3 6 4\n0 1 2\n1 2 3\n0 2 4\n0 1 5\n");
}

#[test]
fn generate_pipes_into_metrics() {
    let hgf = run_ok(&["generate", "--k", "4", "--t", "2"]);
    let json = run_with_stdin(&["metrics"], &hgf);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema"], "ilth/metrics/v1");
    assert_eq!(v["n"], 16);
    assert_eq!(v["m"], 25);
    assert_eq!(v["diameter"], 2);
    assert_eq!(v["connected"], true);
}

#[test]
fn motifs_golden_values() {
    let json = run_ok(&["motifs", "--generate", "6", "2"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["motif_numbers"]["16"], 7680);
    let json = run_ok(&["motifs", "--generate", "3", "2", "--brute-force"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["motif_numbers"]["2"], 45);
    assert_eq!(v["motif_numbers"]["6"], 126);
    assert_eq!(v["motif_numbers"]["11"], 75);
    assert_eq!(v["motif_numbers"]["26"], 45);
}

#[test]
fn motifs_cardinality_vector_breakdown() {
    let json = run_ok(&[
        "motifs",
        "--generate",
        "3",
        "1",
        "--by-cardinality-vector",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = v["cardinality_vectors"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    // the three type-11 triples of the first generation share one vector
    assert!(rows
        .iter()
        .any(|r| r["motif_number"] == 11 && r["count"] == 3 && r["cv"].as_array().unwrap().len() == 7));
}

#[test]
fn clustering_report_fields() {
    let json = run_ok(&["clustering", "--generate", "3", "1"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let report = &v["report"];
    assert_eq!(report["paths2"], 60);
    assert_eq!(report["p_prime"], 30);
    assert_eq!(report["hc2"]["fraction"], "1/2");
    // trend mode nests one report per generation
    let json = run_ok(&["clustering", "--generate", "3", "0", "--iterate", "2"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["generations"].as_array().unwrap().len(), 3);
}

#[test]
fn random_is_seed_deterministic_and_round_trips() {
    let a = run_ok(&["random", "--n", "20", "--k", "3", "--p", "16/220", "--seed", "9"]);
    let b = run_ok(&["random", "--n", "20", "--k", "3", "--p", "16/220", "--seed", "9"]);
    assert_eq!(a, b);
    let c = run_ok(&["random", "--n", "20", "--k", "3", "--p", "16/220", "--seed", "10"]);
    assert_ne!(a, c);
    // read back through metrics to prove the HGF round-trips
    let json = run_with_stdin(&["metrics"], &a);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 20);
    assert_eq!(v["k"], 3);
}

#[test]
fn metrics_spectrum_flag() {
    let json = run_ok(&["metrics", "--generate", "3", "0", "--spectrum"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let eigen = v["spectrum"]["eigenvalues"].as_array().unwrap();
    assert_eq!(eigen.len(), 3);
    assert!((eigen[0].as_f64().unwrap() - 2.0).abs() < 1e-8);
}

#[test]
fn compare_reports_generations() {
    let json = run_ok(&[
        "compare",
        "--generate",
        "3",
        "0",
        "--t-max",
        "1",
        "--seed",
        "5",
        "--trials",
        "8",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let gens = v["generations"].as_array().unwrap();
    assert_eq!(gens.len(), 2);
    assert_eq!(gens[1]["t"], 1);
    assert_eq!(gens[1]["matched_p"]["fraction"], "1/5"); // 4 of C(6,3)=20
}

#[test]
fn embed_subcommand_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let gpath = dir.path().join("c5.edges");
    let hpath = dir.path().join("h0.hgf");
    std::fs::write(&gpath, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    std::fs::write(&hpath, "3 3 1\n0 1 2\n").unwrap();
    let json = run_ok(&[
        "embed",
        "--graph",
        gpath.to_str().unwrap(),
        "--h0",
        hpath.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["homomorphic"], true);
    assert_eq!(v["injective"], true);
    assert_eq!(v["induced"], true);
    assert!(v["t"].as_u64().unwrap() <= 7);
}

#[test]
fn tables_subcommand_small_range() {
    let out = run_ok(&["tables", "--k", "3", "--t-max", "2"]);
    assert!(out.contains("TABLES OK"), "{out}");
    assert!(out.contains("motif 11"));
}

#[test]
fn identical_config_and_seed_give_identical_bytes() {
    let args = [
        "compare", "--generate", "3", "0", "--t-max", "1", "--seed", "3", "--trials", "4",
    ];
    assert_eq!(run_ok(&args), run_ok(&args));
    let args = ["metrics", "--generate", "3", "2", "--spectrum"];
    assert_eq!(run_ok(&args), run_ok(&args));
}

#[test]
fn output_is_independent_of_thread_count() {
    let single = run_ok(&["motifs", "--generate", "4", "3", "--threads", "1"]);
    let multi = run_ok(&["motifs", "--generate", "4", "3", "--threads", "4"]);
    assert_eq!(single, multi);
}

#[test]
fn tsv_format_flattens_reports() {
    let out = run_ok(&["metrics", "--generate", "3", "1", "--format", "tsv"]);
    assert!(out.lines().any(|l| l == "n\t6"), "{out}");
    assert!(out.lines().any(|l| l == "wiener_unordered\t21"), "{out}");
}

#[test]
fn errors_are_machine_readable() {
    let out = ilth()
        .args(["metrics", "--input", "/nonexistent/x.hgf"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["schema"], "ilth/error/v1");

    // malformed HGF reports line and column
    let mut child = ilth()
        .args(["metrics"])
        .stdin(Stdio::piped())
        .stderr(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"3 3 1\n0 x 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(!out.status.success());
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("2:3"), "{msg}");
}

#[test]
fn edge_cap_env_is_honored() {
    let out = ilth()
        .args(["generate", "--k", "3", "--t", "5"])
        .env("ILTH_MAX_EDGES", "100")
        .output()
        .unwrap();
    assert!(!out.status.success());
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("1024"), "{msg}");
}

#[test]
fn generate_from_h0_file_and_multi_model() {
    let dir = tempfile::tempdir().unwrap();
    let hpath = dir.path().join("h0.hgf");
    std::fs::write(&hpath, "# comment\n3 4 2\n0 1 2\n1 2 3\n").unwrap();
    let out = run_ok(&[
        "generate",
        "--h0",
        hpath.to_str().unwrap(),
        "--t",
        "1",
    ]);
    assert!(out.starts_with("3 8 8\n"), "{out}");
    let out = run_ok(&["generate", "--k", "3", "--t", "1", "--model", "ilth2"]);
    assert!(out.starts_with("3 9 10\n"), "{out}");
}
