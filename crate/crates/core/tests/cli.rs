use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn dipebble(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dipebble"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_solve_number_classify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = dipebble(&["construct", "mixed2", "--k", "2", "--out", "m.json"], d);
    assert_eq!(code(&o), 0);
    let meta = fs::read_to_string(d.join("m.json.meta.json")).unwrap();
    assert!(meta.contains("\"extremal_config\":[3,3,0,0,0]"));

    let o = dipebble(
        &[
            "solve",
            "--graph",
            "m.json",
            "--root",
            "4",
            "--config",
            "0:3,1:3",
            "--expect",
            "unsolvable",
        ],
        d,
    );
    assert_eq!(code(&o), 0);
    let o = dipebble(
        &[
            "solve",
            "--graph",
            "m.json",
            "--root",
            "4",
            "--config",
            "[3,3,1,0,0]",
            "--expect",
            "unsolvable",
        ],
        d,
    );
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("\"solvable\": true"));

    let o = dipebble(&["number", "--graph", "m.json"], d);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pi"], 7);
    let o = dipebble(&["number", "--graph", "m.json", "--root", "4"], d);
    assert!(stdout(&o).contains("\"rooted_pi\": 7"));

    let o = dipebble(&["classify", "--graph", "m.json"], d);
    assert_eq!(stdout(&o).trim(), "Above(2)");

    let o = dipebble(
        &[
            "construct",
            "layered",
            "--d",
            "3",
            "--k",
            "1",
            "--out",
            "l.json",
        ],
        d,
    );
    assert_eq!(code(&o), 0);
    assert_eq!(
        fs::read_to_string(d.join("l.json"))
            .unwrap()
            .lines()
            .count(),
        1
    );
}

#[test]
fn census_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = dipebble(
        &[
            "census",
            "--n",
            "3",
            "--filter",
            "strongly-connected",
            "--out",
            "c.jsonl",
        ],
        d,
    );
    assert_eq!(code(&o), 0);
    assert_eq!(
        fs::read_to_string(d.join("c.jsonl"))
            .unwrap()
            .lines()
            .count(),
        5
    );
    let o = dipebble(
        &[
            "verify",
            "--records",
            "c.jsonl",
            "--theorem",
            "thm_mixed2_bound",
        ],
        d,
    );
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["pass"], true);

    // a tampered record must fail verification
    let text = fs::read_to_string(d.join("c.jsonl")).unwrap();
    let tampered = text.replacen("\"pi\":4", "\"pi\":40", 1);
    assert_ne!(tampered, text);
    fs::write(d.join("t.jsonl"), tampered).unwrap();
    let o = dipebble(
        &[
            "verify",
            "--records",
            "t.jsonl",
            "--theorem",
            "thm_mixed2_bound",
        ],
        d,
    );
    assert_eq!(code(&o), 1);

    let o = dipebble(
        &["verify", "--records", "c.jsonl", "--theorem", "thm_nothing"],
        d,
    );
    assert_eq!(code(&o), 2);
}

#[test]
fn family_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = dipebble(&["family-f", "search", "--n", "6", "--out", "f.jsonl"], d);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(d.join("f.jsonl")).unwrap();
    assert_eq!(text.lines().count(), 4);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    let arcs = &first["graph"];
    fs::write(d.join("g.json"), format!("{{\"n\":6,\"arcs\":{arcs}}}")).unwrap();
    let o = dipebble(
        &[
            "family-f",
            "check",
            "--graph",
            "g.json",
            "--labels",
            "0,1,2,3,4,5",
        ],
        d,
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("\"member\": true"));
    let o = dipebble(
        &[
            "family-f",
            "check",
            "--graph",
            "g.json",
            "--labels",
            "5,1,2,3,4,0",
        ],
        d,
    );
    assert_eq!(code(&o), 1);
    let o = dipebble(
        &[
            "family-f", "check", "--graph", "g.json", "--labels", "0,1,2",
        ],
        d,
    );
    assert_eq!(code(&o), 2);
}

#[test]
fn input_errors_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("loop.json"), "{\"n\":2,\"arcs\":[[0,0]]}").unwrap();
    assert_eq!(code(&dipebble(&["classify", "--graph", "loop.json"], d)), 2);
    assert_eq!(
        code(&dipebble(&["classify", "--graph", "missing.json"], d)),
        2
    );
    fs::write(d.join("path.json"), "{\"n\":2,\"arcs\":[[0,1]]}").unwrap();
    assert_eq!(code(&dipebble(&["number", "--graph", "path.json"], d)), 2);
    assert_eq!(code(&dipebble(&["census", "--n", "9", "--out", "x"], d)), 2);
    assert_eq!(code(&dipebble(&["nonsense"], d)), 2);

    dipebble(&["construct", "mixed2", "--k", "2", "--out", "m.json"], d);
    let o = Command::new(env!("CARGO_BIN_EXE_dipebble"))
        .args(["number", "--graph", "m.json"])
        .env("PEBBLE_NODE_BUDGET", "1")
        .current_dir(d)
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}
