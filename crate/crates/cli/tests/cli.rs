use std::process::{Command, Output};

fn detloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detloc")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn lyubeznik_latex_matches_displayed_matrix() {
    let out = detloc(&["lyubeznik", "--m", "3", "--n", "2", "--p", "1", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "\\begin{pmatrix}\n\
                    0 & 0 & 0 & 1 & 0 \\\\\n\
                    0 & 0 & 0 & 0 & 0 \\\\\n\
                    0 & 0 & 0 & 0 & 1 \\\\\n\
                    0 & 0 & 0 & 0 & 0 \\\\\n\
                    0 & 0 & 0 & 0 & 1\n\
                    \\end{pmatrix}\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn iterate_3x2_has_three_entries() {
    let out = detloc(&["iterate", "--m", "3", "--n", "2", "--start", "S", "--chain", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let entries: Vec<&str> = text.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(entries, vec!["(0,3): D0", "(2,2): D0", "(4,2): D0"]);

    let json = detloc(&["iterate", "--m", "3", "--n", "2", "--chain", "1,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["chain"], serde_json::json!([0, 1]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    assert_eq!(v["entries"][0]["module"], serde_json::json!({"family": "D", "mult": [1, 0, 0]}));
}

#[test]
fn verify_all_passes() {
    let out = detloc(&["verify", "--suite", "all", "--max", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS") || l.ends_with("checks passed")));
}

#[test]
fn verify_selects_by_name_and_module() {
    let out = detloc(&["verify", "--suite", "lyub-cross-check", "--max", "4", "--sequential"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS lyub-cross-check"));

    let out = detloc(&["verify", "--suite", "quiver", "--max", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["iterate", "--m", "5", "--n", "4", "--chain", "3,1,0", "--format", "json"][..],
        &["verify", "--suite", "all", "--max", "4", "--format", "json"],
        &["character", "--m", "3", "--n", "2", "--start", "D", "--p", "1", "--bound", "2"],
    ] {
        let first = detloc(args);
        let second = detloc(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status.code(), Some(0));
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["lyubeznik", "--m", "2", "--n", "3", "--p", "1"][..],
        &["lyubeznik", "--m", "3", "--n", "2"],
        &["lyubeznik", "--m", "3", "--n", "2", "--p", "2"],
        &["iterate", "--m", "3", "--n", "2", "--chain", "0,1"],
        &["loccoh", "--m", "3", "--n", "2", "--t", "1", "--format", "latex"],
        &["verify", "--suite", "no-such-check"],
        &["frobnicate"],
    ] {
        let out = detloc(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn other_subcommands_render() {
    let out = detloc(&["loccoh", "--m", "4", "--n", "4", "--t", "2"]);
    assert!(stdout(&out).ends_with("H^4: Q2\nH^6: Q1\nH^8: Q0\n"));

    let out = detloc(&["bott", "--weight", "1,3,0"]);
    assert_eq!(stdout(&out), "degree 1, weight (2,2,0)\n");
    let out = detloc(&["bott", "--weight", "0,1", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"vanishes\":true}\n");

    let out = detloc(&["quiver", "--n", "3", "--p", "2"]);
    assert!(stdout(&out).ends_with("socle: D^(2)^1\nadd(Q): Q^(2)^1\n"));
    let out = detloc(&["quiver", "--n", "3", "--p", "2", "--start", "D"]);
    assert!(stdout(&out).contains("add(Q): not in add(Q)"));
}
