use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn modcycle(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_modcycle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn analyze_c5_and_k5() {
    let o = modcycle(&["analyze", "Dhc", "--json"], None);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["gap"], 4);
    assert_eq!(v["cycle_residues"], serde_json::json!([1]));
    assert_eq!(v["biconnected"], true);
    let v = json(&modcycle(&["analyze", "D~{", "--json"], None));
    assert_eq!(v["planar"], false);
    assert_eq!(v["mod4_cycle"]["kind"], "cycle");
    let cycle = v["mod4_cycle"]["vertices"].as_array().unwrap();
    assert_eq!((cycle.len() - 1) % 4, 0);
}

#[test]
fn analyze_reads_stdin_stream() {
    let o = modcycle(&["analyze", "-", "--json"], Some("Dhc\n\nBw\n"));
    assert!(o.status.success());
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["edges"], 3);
    let o = modcycle(&["analyze", "-"], Some("Dhc\nD!!\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn construct_families_and_expressions() {
    let g = modcycle(&["construct", "--family", "G", "--k", "2"], None);
    let e = modcycle(&["construct", "F6[a,b] (+) F4[a,b] (+) P4^2"], None);
    assert!(g.status.success() && e.status.success());
    assert_eq!(stdout(&g), stdout(&e));
    let v = json(&modcycle(&["analyze", stdout(&g).trim(), "--json"], None));
    assert_eq!((v["order"].as_u64(), v["edges"].as_u64()), (Some(12), Some(17)));

    let h = modcycle(&["construct", "--family", "H", "--n", "13", "--json"], None);
    let v = json(&h);
    assert_eq!(v["edges"], 19);
    let a = json(&modcycle(&["analyze", v["graph6"].as_str().unwrap(), "--json"], None));
    assert_eq!(a["edges"], 19);
    assert!(a["mod4_cycle"].is_null());
    let trace = v["trace"].as_array().unwrap();
    assert_eq!(trace[0]["step"], "start");
    assert_eq!(trace[1]["gadget"], "F7");

    let piped = modcycle(&["construct", "--n", "13"], None);
    let o = modcycle(&["analyze", "-", "--json"], Some(&stdout(&piped)));
    assert_eq!(json(&o)["mod4_cycle"], Value::Null);
}

#[test]
fn construct_reverse_lists_the_closure() {
    let o = modcycle(&["construct", "F6 (+) F4", "--reverse", "--json"], None);
    let v = json(&o);
    let closure = v["reversal_closure"].as_array().unwrap();
    assert!(!closure.is_empty());
    for g in closure {
        let a = json(&modcycle(&["analyze", g.as_str().unwrap(), "--json"], None));
        assert_eq!(a["edges"], 11);
        assert!(a["mod4_cycle"].is_null());
    }
}

#[test]
fn errors_exit_with_two() {
    let o = modcycle(&["construct", "F5[a,b]"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:1: unknown atom F5"));
    let o = modcycle(&["construct", "F4[a,c]"], None);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(modcycle(&["analyze", "Dhc", "--bogus"], None).status.code(), Some(2));
    assert_eq!(modcycle(&[], None).status.code(), Some(2));
    assert_eq!(modcycle(&["verify", "max-edges", "--n", "11"], None).status.code(), Some(2));
    assert_eq!(modcycle(&["verify", "prop-table", "--L", "13"], None).status.code(), Some(2));
    assert_eq!(modcycle(&["analyze", "Dhc", "--k", "65"], None).status.code(), Some(2));
    let o = modcycle(&["verify", "lemma-audit", "Ch"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("precondition"));
}

#[test]
fn verify_tasks() {
    let o = modcycle(&["verify", "prop-table", "--L", "03", "--n", "6"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["max_edges"], 7);
    assert_eq!(v["reversing_classes"], 1);
    assert_eq!(v["tight_example"], "F6");

    let o = modcycle(&["verify", "max-edges", "--n", "5", "--class", "biconnected"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["max_edges"], 5);

    let o = modcycle(&["verify", "max-edges", "--n", "9", "--class", "all", "--workers", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["max_edges"].as_u64().unwrap() <= 12);

    let o = modcycle(&["verify", "lemma-audit", "--n", "8"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["violations"], serde_json::json!([]));
}

#[test]
fn verify_prop_row_reports_the_recorded_cell() {
    // the {2,3} row holds the 4-vertex cell whose maximum is 4
    let o = modcycle(&["verify", "prop-table", "--L", "23"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let row = v.as_array().unwrap();
    assert_eq!(row.len(), 7);
    assert_eq!(row[1]["max_edges"], 4);
    assert_eq!(row[6]["tight_example"], "F9");
}

#[test]
fn out_file_gets_extremal_graphs() {
    let dir = std::env::temp_dir().join(format!("modcycle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("extremal.g6");
    let o = modcycle(&["verify", "max-edges", "--n", "7", "--class", "biconnected", "--out", path.to_str().unwrap()], None);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), json(&o)["extremal"].as_array().unwrap().len());
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    std::fs::remove_dir_all(&dir).unwrap();
}
