//! End-to-end tests of the `ccegraph` binary: output formats, exit codes,
//! and the bundled data files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cce_graphs::{cce, fixtures, spec_equal, Digraph, UndirectedGraph};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ccegraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn data_file(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn write_temp(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn bundled_data_files_match_the_fixtures() {
    let text = std::fs::read_to_string(data_file("triangle-witness.dg")).unwrap();
    assert_eq!(Digraph::from_text(&text).unwrap(), fixtures::triangle_witness());
    let text = std::fs::read_to_string(data_file("square-witness.dg")).unwrap();
    assert_eq!(Digraph::from_text(&text).unwrap(), fixtures::square_witness());
}

#[test]
fn recognize_exit_codes_and_output() {
    let out = run(&["recognize", "P2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "NO (SingleNontrivialPath)\n");

    let out = run(&["recognize", "C3 + 6xP1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "YES\n");

    let out = run(&["recognize", "--interval", "C4 + P1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "NO (HoleForbidden)\n");

    let out = run(&["recognize", "totally-bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn cce_then_analyze_reproduces_the_triangle_spec() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["cce", data_file("triangle-witness.dg").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let graph_text = stdout(&out);
    assert_eq!(graph_text, "graph 9\n1 2\n1 3\n2 3\n");

    let graph_file = write_temp(&dir, "triangle.g", &graph_text);
    let out = run(&["analyze", graph_file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "spec: C3 + 6xP1\ninterval: yes\nhole: no\n");
}

#[test]
fn analyze_flags_the_square_witness_as_non_interval() {
    let dir = tempfile::tempdir().unwrap();
    let g = cce(&fixtures::square_witness());
    let graph_file = write_temp(&dir, "square.g", &g.to_text());
    let out = run(&["analyze", graph_file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "spec: C4 + 7xP1\ninterval: no\nhole: yes\n");
}

#[test]
fn analyze_rejects_branching_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let graph_file = write_temp(&dir, "claw.g", "graph 4\n1 2\n1 3\n1 4\n");
    let out = run(&["analyze", graph_file.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "spec: not paths and cycles\n");
}

#[test]
fn competition_subsumes_cce_on_the_triangle_witness() {
    let out = run(&["competition", data_file("triangle-witness.dg").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let comp = UndirectedGraph::from_text(&stdout(&out)).unwrap();
    for &(u, v) in cce(&fixtures::triangle_witness()).edges() {
        assert!(comp.has_edge(u, v));
    }
}

#[test]
fn dot_exports() {
    let out = run(&["cce", "--dot", data_file("triangle-witness.dg").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let dot = stdout(&out);
    assert!(dot.starts_with("graph G {\n"));
    assert!(dot.contains("  1 -- 2;\n"));

    // the dot subcommand handles both file formats
    let out = run(&["dot", data_file("triangle-witness.dg").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("  1 -> 4;\n"));

    let dir = tempfile::tempdir().unwrap();
    let graph_file = write_temp(&dir, "g.g", "graph 2\n1 2\n");
    let out = run(&["dot", graph_file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "graph G {\n  1;\n  2;\n  1 -- 2;\n}\n");
}

#[test]
fn synthesize_writes_a_witness_file_with_recipe() {
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("witness.dg");
    let out = run(&["synthesize", "C4 + 2xP3 + P1", "-o", output.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let content = std::fs::read_to_string(&output).unwrap();
    // the header comment carries the canonical rendering
    assert!(content.contains("# realizes: C4 + P1 + 2xP3"));
    let witness = Digraph::from_text(&content).unwrap();
    assert!(spec_equal(&cce(&witness), &"C4 + 2xP3 + P1".parse().unwrap()));
}

#[test]
fn synthesize_refuses_unrealizable_specs() {
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("nope.dg");
    let out = run(&["synthesize", "P2", "-o", output.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "NO (SingleNontrivialPath)\n");
    assert!(!output.exists());
}

#[test]
fn verify_against_the_triangle_witness() {
    let out = run(&["verify", data_file("triangle-witness.dg").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("minimal: yes\n"));
    assert!(text.contains("property=structure-props"));
    assert!(text.contains("property=acyclic-props"));
    assert!(text.contains("violations=0"));
}

#[test]
fn verify_json_reports_are_parseable() {
    let out = run(&[
        "verify",
        "--structure",
        "--json",
        data_file("square-witness.dg").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["property"], "structure-props");
    assert_eq!(value["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_minimality_needs_an_acyclic_input() {
    let dir = tempfile::tempdir().unwrap();
    // a 2-cycle is bounded but not acyclic
    let file = write_temp(&dir, "two.dg", "digraph 2\n1 2\n2 1\n");
    let out = run(&["verify", "--minimal", file.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn enumerate_counts_and_shards() {
    let out = run(&["enumerate", "--n", "3", "--no-reduction"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("property=enumerate checked=64 violations=0"));

    let parse_checked = |s: &str| -> u64 {
        s.split_whitespace()
            .find_map(|tok| tok.strip_prefix("checked="))
            .unwrap()
            .parse()
            .unwrap()
    };
    let half0 = parse_checked(&stdout(&run(&[
        "enumerate", "--n", "3", "--no-reduction", "--shard", "0/2",
    ])));
    let half1 = parse_checked(&stdout(&run(&[
        "enumerate", "--n", "3", "--no-reduction", "--shard", "1/2",
    ])));
    assert_eq!(half0 + half1, 64);
}

#[test]
fn enumerate_checks_pass_at_small_scale() {
    let out = run(&["enumerate", "--n", "4", "--check", "theorem13", "--workers", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("violations=0"));

    let out = run(&["enumerate", "--n", "5", "--check", "no-cycle"]);
    assert_eq!(code(&out), 0);

    let out = run(&["enumerate", "--n", "4", "--check", "props", "--acyclic"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = run(&[
        "enumerate", "--n", "10", "--check", "props", "--random", "50", "--seed", "3",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["cce", "/nonexistent/file.dg"]);
    assert_eq!(code(&out), 2);

    let out = run(&["enumerate", "--n", "4", "--check", "theorem13", "--acyclic"]);
    assert_eq!(code(&out), 2);

    let out = run(&["enumerate", "--n", "4", "--shard", "5/2"]);
    assert_eq!(code(&out), 2);

    let out = run(&["enumerate", "--n", "4", "--random", "10"]);
    assert_eq!(code(&out), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(&dir, "bad.dg", "digraph 2\n1 2\n1 2\n");
    let out = run(&["cce", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn analyze_round_trips_mixed_specs_through_synthesize() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["C3 + C5 + 4xP1", "2xP2", "P7 + P1", "C4 + C4"] {
        let witness_file = dir.path().join("w.dg");
        let out = run(&["synthesize", spec, "-o", witness_file.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "synthesize {}", spec);

        let out = run(&["cce", witness_file.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        let graph_file = write_temp(&dir, "w.g", &stdout(&out));

        let out = run(&["analyze", graph_file.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        let expected: cce_graphs::ComponentSpec = spec.parse().unwrap();
        assert!(
            stdout(&out).starts_with(&format!("spec: {}\n", expected)),
            "analyze of {} printed {}",
            spec,
            stdout(&out)
        );
    }
}
