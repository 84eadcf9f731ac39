use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn specmin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_specmin"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn check_triangle_at_minus_one() {
    let out = specmin(&["check", "--mu", "-1", "Bw"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["multiplicity"], 2);
    assert_eq!(v["n"], 3);
    assert_eq!(v["d"], 1);
    assert_eq!(v["extremal"], true);
}

#[test]
fn check_accepts_fractions_and_reports_disconnected() {
    let out = specmin(&["check", "--mu", "1/2", "D??"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["multiplicity"], 0);
    assert!(v["d"].is_null() && v["extremal"].is_null());
}

#[test]
fn construct_diamond() {
    let out = specmin(&["construct", "diamond", "--d", "7", "--w", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    let g = specmin::graph::parse_graph6(line.trim()).unwrap();
    assert_eq!((g.order(), g.edge_count()), (9, 9));
}

#[test]
fn construct_family_and_classify_from_stdin() {
    let fam = specmin(&["construct", "family", "--d", "10"], None);
    assert_eq!(stdout(&fam).lines().count(), 4);
    let out = specmin(&["classify"], Some(&stdout(&fam)));
    assert_eq!(out.status.code(), Some(0));
    let records = json_lines(&out);
    assert_eq!(records.len(), 4);
    for r in records {
        assert_eq!(r["classification"]["class"], "diamond-family");
        assert_eq!(r["classification"]["spec"]["d"], 10);
    }
}

#[test]
fn graphs_from_a_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "Bw\n\nCF").unwrap();
    let out = specmin(&["canonical", file.path().to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Bw\nCF\n");
}

#[test]
fn canonical_relabels() {
    // P_5 in a scrambled labelling
    let out = specmin(&["canonical", "DQc"], None);
    assert_eq!(stdout(&out).trim(), "DBg");
}

#[test]
fn starset_lists_decompositions() {
    let out = specmin(&["starset", "--mu", "-1", "--limit", "2", "Bw"], None);
    let v = &json_lines(&out)[0];
    assert_eq!(v["star_sets"].as_array().unwrap().len(), 2);
    assert_eq!(v["star_sets"][0]["star_set"], serde_json::json!([0, 1]));
}

#[test]
fn starset_rejects_non_eigenvalues() {
    let out = specmin(&["starset", "--mu", "3", "Bw"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an eigenvalue"));
}

#[test]
fn enumerate_small_census_is_clean() {
    let out = specmin(
        &["enumerate", "--n", "5", "--checks", "all", "--jobs", "1"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["counts"]["graphs"], 31);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
}

#[test]
fn enumerate_is_deterministic() {
    let a = specmin(
        &["enumerate", "--n", "5", "--checks", "minus-one,bounds"],
        None,
    );
    let b = specmin(
        &["enumerate", "--n", "5", "--checks", "minus-one,bounds"],
        None,
    );
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_lists_census() {
    let out = specmin(&["enumerate", "--n", "4", "--list"], None);
    assert_eq!(stdout(&out).lines().count(), 1 + 1 + 2 + 6);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["check", "bad!"],
        vec!["check", "--mu", "x", "Bw"],
        vec!["construct", "family", "--d", "8"],
        vec!["construct", "diamond", "--d", "4", "--w", "4"],
        vec!["enumerate", "--n", "9"],
        vec!["enumerate", "--n", "3", "--checks", "nope"],
        vec!["classify", "A?"],
        vec!["frobnicate"],
    ] {
        let out = specmin(&args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn vertex_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_specmin"))
        .args(["check", "Bw"])
        .env("SPECMIN_VERTEX_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
