//! Black-box checks of the `knot` binary on small canned inputs.

use std::process::Command;

use knot_core::samples;

fn knot(args: &[&str], input_lines: &[&str]) -> (String, i32) {
    let dir = std::env::temp_dir().join("knot-cli-examples");
    std::fs::create_dir_all(&dir).unwrap();
    // unique file per call so parallel tests never collide
    let file = dir.join(format!(
        "in-{}-{:x}.txt",
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos()
    ));
    std::fs::write(&file, input_lines.join("\n")).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_knot"))
        .args(args)
        .arg(file.to_str().unwrap())
        .output()
        .unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn invariants_trefoil_and_empty_file() {
    let (out, code) = knot(&["invariants"], &["[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"]);
    assert_eq!(code, 0);
    let rec: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(rec["det"], "3");
    assert_eq!(rec["alternating"], true);

    let (out, code) = knot(&["invariants"], &[]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
}

#[test]
fn invariants_hard_diagram_has_trivial_jones() {
    let (out, code) = knot(&["invariants"], &[samples::HARD_42_PD]);
    assert_eq!(code, 0);
    let rec: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(rec["jones"], "1");
}

#[test]
fn unknot_replay_certifies_fixture_sequence() {
    let pd = samples::SUM_12A916.initial_pd;
    let (out, code) =
        knot(&["unknot", "--replay", "10,44,46,47,53,33,42,7,36"], &[pd]);
    assert_eq!(code, 0);
    let rec: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(rec["outcome"], "Unknotted");
    assert_eq!(rec["length"], 9);
}

#[test]
fn hardness_filters_easy_and_dedups() {
    let (out, code) = knot(&["hardness"], &["[[0,0,1,1]]"]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> =
        out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["verdict"], "Filtered"); // kink simplifies

    let trefoil = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
    let (out, code) = knot(&["hardness"], &[trefoil, trefoil]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> =
        out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["verdict"], "Filtered"); // nontrivial Jones
    assert_eq!(lines[2]["summary"]["distinct"], 1); // duplicate input lines
}

#[test]
fn malformed_line_is_isolated() {
    let (out, code) =
        knot(&["validate"], &["[[1,4,2,5],[3,6,4,1],[5,2,6,3]]", "garbage", "[] # unknot"]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> =
        out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].get("error").is_none());
    assert!(lines[1].get("error").is_some());
    assert_eq!(lines[2]["n"], 0);
}
