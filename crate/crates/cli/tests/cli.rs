use std::path::Path;
use std::process::Command;

use projdiff::files::{parse_input, read_input, input_to_string};
use projdiff::run_args;

fn run(args: &[&str]) -> projdiff::Outcome {
    let mut all = vec!["projdiff"];
    all.extend_from_slice(args);
    run_args(all)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn class1_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("class1.json");
    let gen = run(&["gen", "1", "--n", "3", "--r", "1", "-o", path_str(&file)]);
    assert_eq!(gen.code, 0, "{}", gen.stderr);
    let out = run(&["analyze", path_str(&file), "--point", "1,0,0,0,0,0", "--order", "5", "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["class"]["tag"], "CI_TWO_QUADRICS");
    assert_eq!(v["pencil"]["tag"], "FOUR_DISTINCT");
    assert_eq!(v["fubini"]["holds"], true);
    assert_eq!(v["chart"]["K"], 5);
    assert_eq!(v["witnesses"]["sigma"][0][1][1], "-1/1");
}

#[test]
fn generated_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (class, name) in [("1", "a.json"), ("2", "b.json"), ("3", "c.json"), ("6", "d.json")] {
        let file = dir.path().join(name);
        assert_eq!(run(&["gen", class, "--n", "3", "--r", "2", "-o", path_str(&file)]).code, 0);
        let text = std::fs::read_to_string(&file).unwrap();
        let parsed = read_input(&file).unwrap();
        assert_eq!(input_to_string(&parsed), text);
        assert_eq!(parse_input(&input_to_string(&parsed)).unwrap(), parsed);
    }
}

#[test]
fn splitting_of_the_fermat_cubic_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cubic.json");
    std::fs::write(
        &file,
        r#"{"vars": 4, "gens": [[["1/1",[3,0,0,0]],["1/1",[0,3,0,0]],["1/1",[0,0,3,0]],["1/1",[0,0,0,3]]]]}"#,
    )
    .unwrap();
    let out = run(&["splitting", path_str(&file), "--line", "1,-1,0,0;0,0,1,-1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("splitting: (-1)\n"), "{}", out.stdout);
    let bad = run(&["splitting", path_str(&file), "--line", "1,0,0,0;0,1,0,0"]);
    assert_eq!(bad.code, 2);
}

#[test]
fn linear_space_is_linear() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("lin.json");
    assert_eq!(run(&["gen", "7", "--n", "3", "-o", path_str(&file)]).code, 0);
    let out = run(&["analyze", path_str(&file), "--point", "1,0,0,0,0,0", "--order", "5"]);
    assert!(out.stdout.contains("class: LINEAR"), "{}", out.stdout);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("q.json");
    std::fs::write(&file, r#"{"vars": 4, "gens": [["1/1",[1,0,0,1]],["-1/1",[0,1,1,0]]]}"#).unwrap();
    // off the variety
    assert_eq!(run(&["analyze", path_str(&file), "--point", "1,1,1,0"]).code, 2);
    // wrong point length
    assert_eq!(run(&["analyze", path_str(&file), "--point", "1,0,0"]).code, 1);
    // missing file
    assert_eq!(run(&["analyze", "/nonexistent/x.json", "--point", "1"]).code, 1);
    // order out of range
    assert_eq!(run(&["analyze", path_str(&file), "--point", "1,0,0,0", "--order", "9"]).code, 1);
    // malformed file
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, r#"{"vars": 4, "gens": [["1/1",[1,0,1]]]}"#).unwrap();
    let out = run(&["analyze", path_str(&broken), "--point", "1,0,0,0"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("exponent row"), "{}", out.stderr);
    // unknown subcommand
    assert_eq!(run(&["frobnicate"]).code, 1);
    // the quadric surface itself is fine
    let ok = run(&["analyze", path_str(&file), "--point", "1,0,0,0", "--order", "3"]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
}

#[test]
fn pencil_and_contact_commands() {
    let out = run(&["pencil", "--a", "1,0,0;0,1,0;0,0,0", "--b", "0,0,0;0,0,0;0,0,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["pencil"]["tag"], "TWO_DOUBLE");
    assert_eq!(v["pencil"]["case"], "ii");
    assert_eq!(run(&["pencil", "--a", "1,2;3,4", "--b", "1,0;0,1"]).code, 1);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("q.json");
    std::fs::write(&file, r#"{"vars": 4, "gens": [["1/1",[1,0,0,1]],["-1/1",[0,1,1,0]]]}"#).unwrap();
    let ruling = run(&["contact", path_str(&file), "--line", "1,0,0,0;0,1,0,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&ruling.stdout).unwrap();
    assert_eq!(v["contact"]["order"], "contained");
    let tangent = run(&["contact", path_str(&file), "--line", "1,0,0,0;0,1,1,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&tangent.stdout).unwrap();
    assert_eq!(v["contact"]["order"], "1");
}

#[test]
fn fubini_command_on_a_chart() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c5.json");
    assert_eq!(run(&["gen", "5", "--n", "3", "--r", "1", "-o", path_str(&file)]).code, 0);
    let out = run(&["fubini", path_str(&file), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["fubini"]["holds"], true);
    assert_eq!(v["forms"]["dimF2"], 1);
}

#[test]
fn batch_mode_is_ordered_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for (class, name) in [("7", "a.json"), ("1", "b.json"), ("6", "c.json"), ("4", "d.json")] {
        let file = dir.path().join(name);
        assert_eq!(run(&["gen", class, "--n", "3", "-o", path_str(&file)]).code, 0);
    }
    std::fs::write(dir.path().join("e.json"), "not json").unwrap();
    let first = run(&["analyze", "--batch", path_str(dir.path()), "--format", "json"]);
    let second = run(&["analyze", "--batch", path_str(dir.path()), "--format", "json"]);
    assert_eq!(first, second);
    assert_eq!(first.code, 1);
    let v: serde_json::Value = serde_json::from_str(&first.stdout).unwrap();
    let tags: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["class"]["tag"].as_str().unwrap_or("error"))
        .collect();
    assert_eq!(tags, ["LINEAR", "CI_TWO_QUADRICS", "QUADRIC_HYPERSURFACE", "CURVE_TIMES_DEGENERATE_GAUSS", "error"]);
}

#[test]
fn json_carries_the_text_fields() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c1.json");
    assert_eq!(run(&["gen", "1", "--n", "3", "-o", path_str(&file)]).code, 0);
    let text = run(&["analyze", path_str(&file)]).stdout;
    let json = run(&["analyze", path_str(&file), "--format", "json"]).stdout;
    for key in text.lines().filter_map(|l| l.split_once(": ").map(|(k, _)| k)) {
        let field = match key {
            "ci test" => "ciPasses",
            "degree count" => "sumOk",
            "contact order" => "contact",
            "warning" => "warnings",
            k => k,
        };
        assert!(json.contains(&format!("\"{}\"", field)), "{} missing", field);
    }
}

#[test]
fn binary_reports_exit_status() {
    let bin = env!("CARGO_BIN_EXE_projdiff");
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("lin.json");
    let gen = Command::new(bin).args(["gen", "7", "--n", "2", "-o", path_str(&file)]).output().unwrap();
    assert!(gen.status.success());
    let out = Command::new(bin).args(["analyze", path_str(&file), "--format", "json"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"LINEAR\""));
    let bad = Command::new(bin).args(["analyze", path_str(&file), "--point", "0,0,0,0,1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
