//! End-to-end tests of the `ainfty` binary: exit codes, output stability,
//! and corpus round trips.

use std::path::Path;
use std::process::{Command, Output};

fn ainfty(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ainfty")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("stderr is utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn corpus_list_names_every_entry() {
    let out = ainfty(&["corpus", "list"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for name in ["interval", "circle", "sphere2", "torus", "heisenberg", "abelian3"] {
        assert!(text.contains(name), "missing {name} in:\n{text}");
    }
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn check_passes_on_every_corpus_entry() {
    for name in ["interval", "circle", "sphere2", "torus", "heisenberg", "abelian3"] {
        let out = ainfty(&["check", name]);
        assert_eq!(code(&out), 0, "{name} failed:\n{}{}", stdout(&out), stderr(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn unreadable_input_exits_with_two() {
    let out = ainfty(&["cohomology", "/no/such/file.json"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("neither a readable file nor a corpus entry"));
}

#[test]
fn malformed_json_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"degrees\": [oops").unwrap();
    let out = ainfty(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unrecognized_shape_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shape.json");
    std::fs::write(&path, "{\"entries\": []}").unwrap();
    let out = ainfty(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("`degrees`, `vertices`, or `dim`"));
}

#[test]
fn axiom_violation_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dsq.json");
    std::fs::write(
        &path,
        r#"{"degrees":{"0":["a"],"1":["b"],"2":["c"]},
            "differential":[{"from":"a","to":[{"basis":"b","coeff":"1"}]},
                            {"from":"b","to":[{"basis":"c","coeff":"1"}]}],
            "products":[]}"#,
    )
    .unwrap();
    let out = ainfty(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("differential squares to zero"));
}

#[test]
fn jacobi_violation_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lie.json");
    std::fs::write(
        &path,
        r#"{"dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1"},{"i":1,"j":3,"k":1,"c":"1"}]}"#,
    )
    .unwrap();
    let out = ainfty(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("Jacobi identity fails"));
}

#[test]
fn massey_reports_pinned_product() {
    let out = ainfty(&["massey", "heisenberg", "x", "y", "x"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "representative: 2*xz\nindeterminacy dimension: 0\nm3: -2*xz\n\
         verdict: m3 matches massey with sign -1\n"
    );

    let combined = ainfty(&["massey", "heisenberg", "x+2*y", "y", "x"]);
    assert_eq!(
        stdout(&combined),
        "representative: 2*xz + 2*yz\nindeterminacy dimension: 0\nm3: -2*xz - 2*yz\n\
         verdict: m3 matches massey with sign -1\n"
    );
}

#[test]
fn massey_with_a_zero_input_is_defined_and_zero() {
    let out = ainfty(&["massey", "heisenberg", "0", "y", "x"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "representative: 0\nindeterminacy dimension: 0\nm3: 0\n\
         verdict: m3 matches massey with sign +1,-1\n"
    );
}

#[test]
fn undefined_massey_product_exits_with_one() {
    let out = ainfty(&["massey", "heisenberg", "x", "yz", "x"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("not defined"));
}

#[test]
fn unknown_label_in_massey_argument_exits_with_two() {
    let out = ainfty(&["massey", "heisenberg", "w", "y", "x"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown basis label"));
}

#[test]
fn transfer_rejects_small_arity() {
    let out = ainfty(&["transfer", "heisenberg", "--max-arity", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn transfer_json_is_identical_across_runs_and_parallel_mode() {
    let first = ainfty(&["transfer", "heisenberg", "--max-arity", "5", "--format", "json"]);
    let second = ainfty(&["transfer", "heisenberg", "--max-arity", "5", "--format", "json"]);
    let parallel = ainfty(&[
        "transfer",
        "heisenberg",
        "--max-arity",
        "5",
        "--format",
        "json",
        "--parallel",
    ]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, parallel.stdout);
}

#[test]
fn transfer_table_shows_pinned_operations() {
    let out = ainfty(&["transfer", "heisenberg", "--max-arity", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("m2: 15 nonzero entries"));
    assert!(text.contains("m3(x, y, x) = -2*xz"));
    assert!(text.contains("degree 1: x, y"));
}

#[test]
fn stasheff_reports_one_pass_line_per_arity() {
    let out = ainfty(&["stasheff", "heisenberg", "--max-arity", "4"]);
    assert_eq!(code(&out), 0);
    let passes =
        stdout(&out).lines().filter(|l| l.starts_with("stasheff identity") && l.ends_with("pass")).count();
    assert_eq!(passes, 4);
}

#[test]
fn cohomology_json_reports_betti_numbers() {
    let expected: &[(&str, &[usize])] = &[
        ("interval", &[1, 0]),
        ("circle", &[1, 1]),
        ("sphere2", &[1, 0, 1]),
        ("torus", &[1, 2, 1]),
        ("heisenberg", &[1, 2, 2, 1]),
        ("abelian3", &[1, 3, 3, 1]),
    ];
    for (name, betti) in expected {
        let out = ainfty(&["cohomology", name, "--format", "json"]);
        assert_eq!(code(&out), 0);
        let doc: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
        let got: Vec<usize> =
            doc["betti"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect();
        assert_eq!(&got, betti, "{name}");
    }
}

#[test]
fn corpus_emit_matches_loading_by_name() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["interval", "circle", "sphere2", "torus", "heisenberg", "abelian3"] {
        let path = dir.path().join(format!("{name}.json"));
        let emitted = ainfty(&["corpus", "emit", name, path.to_str().unwrap()]);
        assert_eq!(code(&emitted), 0);
        assert!(Path::new(&path).is_file());

        let by_name = ainfty(&["cohomology", name, "--format", "json"]);
        let by_file = ainfty(&["cohomology", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(by_name.stdout, by_file.stdout, "{name}");
    }
}

#[test]
fn corpus_emit_to_stdout_parses_back() {
    let out = ainfty(&["corpus", "emit", "heisenberg"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    assert!(doc.get("degrees").is_some());
}

#[test]
fn corpus_emit_unknown_name_exits_with_one() {
    let out = ainfty(&["corpus", "emit", "nosuch"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("unknown corpus entry"));
}

#[test]
fn cohomology_table_lists_both_betti_computations_and_products() {
    let out = ainfty(&["cohomology", "torus"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("degree 1: betti 2, harmonic 2"));
    assert!(text.contains("euler characteristic: 0"));
    assert!(text.contains("H1[0] * H1[1] ="));
}
