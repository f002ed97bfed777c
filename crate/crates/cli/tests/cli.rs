use std::process::{Command, Output};

use serde_json::Value;

fn totdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_totdom"))
        .args(args)
        .env_remove("TOTDOM_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().last().expect("output line")).expect("json")
}

#[test]
fn solve_fixture_orientation() {
    let out = totdom(&["solve", "--fixture", "fig8", "--orientation", "left"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["gamma_t"], 11);
    let out = totdom(&["solve", "--fixture", "fig8", "--orientation", "right"]);
    assert_eq!(json(&out)["gamma_t"], 3);
}

#[test]
fn solve_directed_cycle() {
    let out = totdom(&["solve", "--graph6", "Dhc", "--orientation", "0>1 1>2 2>3 3>4 4>0"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["gamma_t"], 5);
}

#[test]
fn solve_rejects_source_vertex() {
    let out = totdom(&["solve", "--graph6", "C~", "--orientation", "[[0,1],[0,2],[0,3],[1,2],[2,3],[3,1]]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no total dominating set"));
}

#[test]
fn solve_rejects_wrong_arc_set() {
    let out = totdom(&["solve", "--graph6", "Bw", "--orientation", "0>1 1>2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn range_examples() {
    for (args, lo, hi) in [
        (vec!["--graph6", "C~"], 3, 3),
        (vec!["--fixture", "fig9(5)"], 3, 5),
        (vec!["--fixture", "cycle(7)"], 7, 7),
    ] {
        let mut full = vec!["range"];
        full.extend(args);
        let v = json(&totdom(&full));
        assert_eq!((v["dom_t"].as_u64().unwrap(), v["DOM_t"].as_u64().unwrap()), (lo, hi), "{full:?}");
    }
}

#[test]
fn range_refuses_over_budget() {
    // K8 has 28 edges.
    let out = totdom(&["range", "--graph6", "G~~~~{"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn recognize_examples() {
    assert_eq!(json(&totdom(&["recognize", "--fixture", "k4"]))["family"], "F2");
    let paw = json(&totdom(&["recognize", "--fixture", "paw"]));
    assert_eq!(paw["family"], "F1");
    assert_eq!(paw["result1_class"]["member"], true);
    assert!(json(&totdom(&["recognize", "--fixture", "petersen"]))["family"].is_null());
    let human = totdom(&["recognize", "--fixture", "petersen", "--format", "human"]);
    assert!(String::from_utf8_lossy(&human.stdout).contains("family = none"));
}

#[test]
fn generate_examples() {
    let k4 = json(&totdom(&["generate", "f2", "--cycles", "3", "--links", "3"]));
    assert_eq!(k4["graph6"], "C~");
    let fig9 = json(&totdom(&["generate", "f1", "--k", "5", "--chords", "1,2,3"]));
    let expected = json(&totdom(&["recognize", "--fixture", "fig9(5)"]));
    assert_eq!(fig9["witness"], expected["witness"]);
    assert_eq!(fig9["gamma_t"], 5);
    let f3 = json(&totdom(&[
        "generate", "f3", "--k", "4", "--cycles", "4,4", "--links", "1,1", "--case", "dwk3-via-xy",
    ]));
    assert_eq!(f3["witness"]["case_tag"], "dwk3-via-xy");
    assert_eq!(f3["gamma_t"], f3["n"].as_u64().unwrap() - 1);
}

#[test]
fn generate_rejects_bad_parameters() {
    let out = totdom(&["generate", "f1", "--k", "4", "--chords", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = totdom(&["generate", "f3", "--k", "4", "--cycles", "4,4", "--links", "1,1", "--case", "dwk2-via-x", "--to", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_main_and_result2() {
    for theorem in ["main", "result2"] {
        let out = totdom(&["verify", theorem, "--max-n", "6", "--workers", "2"]);
        assert!(out.status.success(), "{theorem}");
        let v = json(&out);
        assert_eq!(v["ok"], true);
        assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn verify_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let csv = dir.path().join("a.csv");
    for (p, workers) in [(&a, "1"), (&b, "3")] {
        let out = totdom(&["verify", "result1", "--max-n", "5", "--workers", workers, "--out", p.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let (ta, tb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ta, tb);
    let footer: Value = serde_json::from_str(ta.lines().last().unwrap()).unwrap();
    assert_eq!(footer["summary"]["graph_count"], ta.lines().count() - 1);
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("graph6,n,m,dom_t,DOM_t,family_tag\n"));
}

#[test]
fn verify_doctored_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("doctored.g6");
    // C4 filed as an F2 member; K4 and the paw filed correctly.
    std::fs::write(&file, "Cl F2\nC~ F2\nCx F1\n").unwrap();
    let out_path = dir.path().join("report.jsonl");
    let out = totdom(&["verify", "main", "--input", file.to_str().unwrap(), "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = std::fs::read_to_string(&out_path).unwrap();
    let mismatches: Vec<Value> = report
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|v| v["agree"] == false)
        .collect();
    assert_eq!(mismatches.len(), 1);
    assert_eq!(mismatches[0]["graph6"], "Cl");
}

#[test]
fn verify_cycles_file_has_no_positives() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cycles.g6");
    std::fs::write(&file, "Bw\nCl\nDhc\n").unwrap();
    let out = totdom(&["verify", "main", "--input", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["positives"], 0);
}

#[test]
fn verify_enumeration_limits() {
    assert_eq!(totdom(&["verify", "main", "--max-n", "7"]).status.code(), Some(2));
    assert_eq!(totdom(&["verify", "main", "--max-n", "9"]).status.code(), Some(3));
    assert_eq!(totdom(&["verify", "lemma"]).status.code(), Some(2));
    assert_eq!(totdom(&["verify", "main", "--workers", "0"]).status.code(), Some(2));
}

#[test]
fn verify_gap_and_concomp() {
    let out = totdom(&["verify", "gap"]);
    assert!(out.status.success());
    let out = totdom(&["verify", "concomp", "--trials", "10", "--seed", "5"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["graph_count"], 10);
}

#[test]
fn worker_count_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_totdom"))
        .args(["verify", "result2", "--max-n", "5"])
        .env("TOTDOM_WORKERS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}
