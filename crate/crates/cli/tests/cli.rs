use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn osquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osquad")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = osquad(&all);
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn fig1_closures() {
    let delta = json(&["closure", "fig1", "--operator", "delta", "--l", "3"]);
    assert_eq!(delta["schema"], 1);
    assert_eq!(delta["result"]["covered"], false);
    assert!(delta["result"]["missing"].as_array().unwrap().contains(&serde_json::json!([2, 3, 5, 6])));
    let prime = json(&["closure", "fig1", "--operator", "delta-prime"]);
    assert_eq!(prime["result"]["covered"], true);
    assert_eq!(prime["command"]["operator"], "delta-prime");
}

#[test]
fn named_instances() {
    let k4 = json(&["circuits", "K_4"]);
    assert_eq!(k4["result"]["by_size"], serde_json::json!([{"size": 3, "count": 4}, {"size": 4, "count": 3}]));
    let c4 = json(&["circuits", "C_4"]);
    assert_eq!(c4["result"]["circuits"], serde_json::json!([[1, 2, 3, 4]]));
    assert_eq!(json(&["chordality", "fig1"])["result"]["chordal"], false);
    assert_eq!(json(&["chordality", "K_4"])["result"]["chordal"], true);
    let c6 = json(&["chordality", "C_6", "--l", "7"]);
    assert_eq!(c6["result"]["check"]["chordal"], true);
    assert_eq!(json(&["adicity", "fig1", "--l", "2"])["result"]["is_l_adic"], true);
    assert_eq!(json(&["adicity", "C_5", "--l", "3"])["result"]["is_l_adic"], false);
    assert_eq!(json(&["adicity", "C_5", "--l", "4", "--prime", "101"])["result"]["is_l_adic"], true);
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["verify", "--seed", "3", "--format", "json"][..],
        &["chordality", "W_5", "--format", "json"][..],
        &["verify", "fig1", "--slow-verify", "--format", "json"][..],
    ] {
        assert_eq!(osquad(args).stdout, osquad(args).stdout, "{args:?}");
    }
}

#[test]
fn echo_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["fig1", "fano", "W_4"] {
        let report = osquad(&["circuits", name, "--format", "json"]);
        let path = dir.path().join(format!("{name}.json"));
        fs::write(&path, &report.stdout).unwrap();
        let again = json(&["circuits", "--echo", path.to_str().unwrap()]);
        let first: Value = serde_json::from_slice(&report.stdout).unwrap();
        assert_eq!(first["instance"]["circuits"], again["instance"]["circuits"]);
        assert_eq!(first["instance"]["ground"], again["instance"]["ground"]);
        assert_eq!(first["result"], again["result"]);
    }
}

#[test]
fn file_sources() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k4.txt");
    fs::write(&graph, "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let matrix = dir.path().join("fano.txt");
    fs::write(&matrix, "3 7\n1010101\n0110011\n0001111\n").unwrap();
    let circuits = dir.path().join("c.txt");
    fs::write(&circuits, "# rank 2\n1 2 3\n").unwrap();

    let from_graph = json(&["circuits", "--graph", graph.to_str().unwrap()]);
    assert_eq!(from_graph["result"], json(&["circuits", "K_4"])["result"]);
    let from_matrix = json(&["circuits", "--matrix", matrix.to_str().unwrap()]);
    assert_eq!(from_matrix["result"], json(&["circuits", "fano"])["result"]);
    let from_list = json(&["circuits", "--circuits", circuits.to_str().unwrap()]);
    assert_eq!(from_list["instance"]["ground"], 3);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2 3\n1 x\n").unwrap();
    let o = osquad(&["circuits", "--circuits", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert!(o.stdout.is_empty());

    assert_eq!(osquad(&["circuits", "nope"]).status.code(), Some(2));
    assert_eq!(osquad(&["circuits"]).status.code(), Some(2));
    assert_eq!(osquad(&["chordality", "K_4", "--l", "3"]).status.code(), Some(2));
    assert_eq!(osquad(&["adicity", "K_4", "--prime", "9"]).status.code(), Some(2));
    assert_eq!(osquad(&["circuits", "K_8"]).status.code(), Some(3));
    assert_eq!(osquad(&["circuits", "fig1", "--max-n", "6"]).status.code(), Some(3));
    assert_eq!(osquad(&["circuits", "K_8", "--max-n", "28"]).status.code(), Some(0));
}

#[test]
fn verify_battery_passes() {
    let o = osquad(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 7);
    let c5 = json(&["verify", "C_5"]);
    assert_eq!(c5["result"]["passed"], true);
    assert_eq!(c5["result"]["facts"]["chordality_index"], 6);
    assert_eq!(c5["result"]["facts"]["adicity"], 4);
    let fig1 = json(&["verify", "fig1"]);
    assert_eq!(fig1["result"]["facts"]["adicity"], 2);
    assert_eq!(fig1["result"]["facts"]["delta_prime_covers"], true);
}
