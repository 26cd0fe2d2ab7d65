use std::path::PathBuf;
use std::process::{Command, Output};

use hch::io::{parse, to_json, HComplexWire, PairWire};
use hch::sl2::branching::BranchingRow;
use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn hch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hch"))
        .args(args)
        .env_remove("HCH_MAX_WINDOW")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_shipped_pair() {
    for file in ["sl2_pair.json", "sl2_split_pair.json"] {
        let o = hch(&["verify", "--pair", &data(file)]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let o = hch(&["verify", "--subpair", &data("normalizer.json"), "--module", &data("principal_series_4.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn homology_of_f2_over_the_diagonal_torus() {
    let o = hch(&["homology", "--subpair", &data("diag.json"), "--module", &data("F2.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, json!({"H": [1, 1]}));
}

#[test]
fn sl2_demo_table() {
    let args = ["sl2-demo", "--lambda", "0,1,2,3,4,5,6,7,8", "--epsilon", "0", "--subpair", "diagonal_torus"];
    let o = hch(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], BranchingRow::TSV_HEADER);
    assert_eq!(lines.len(), 10);
    let h1: Vec<&str> = lines[1..].iter().map(|l| l.split('\t').nth(4).unwrap()).collect();
    // x1·x2 spans a θ-invariant line at every even λ, so H_1 ≠ 0 there.
    assert_eq!(h1, ["1", "0", "1", "0", "1", "0", "1", "0", "1"]);
    assert_eq!(hch(&args).stdout, o.stdout, "output is deterministic");
}

#[test]
fn sl2_demo_json_round_trips() {
    let o = hch(&["sl2-demo", "--lambda", "1/3,4", "--subpair", "torus_normalizer", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let rows: Vec<BranchingRow> = parse(&text, "stdout").unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(to_json(&rows), text);
}

#[test]
fn schema_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let mut pair: Value = serde_json::from_str(&std::fs::read_to_string(data("sl2_pair.json")).unwrap()).unwrap();
    pair["grading"][1] = json!([0, 0]);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, pair.to_string()).unwrap();
    let o = hch(&["verify", "--pair", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("grading[1]"), "{}", stderr(&o));

    pair["grading"][1] = json!("zero");
    std::fs::write(&path, pair.to_string()).unwrap();
    let o = hch(&["verify", "--pair", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("grading[1]"), "{}", stderr(&o));
}

#[test]
fn wrong_grading_is_a_validation_failure() {
    let mut pair: Value = serde_json::from_str(&std::fs::read_to_string(data("sl2_split_pair.json")).unwrap()).unwrap();
    pair["grading"][0] = json!([1]);
    let o = hch(&["verify", "--pair", &pair.to_string()]);
    assert_eq!(o.status.code(), Some(2));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["ok"], json!(false));
    assert_eq!(report["checks"][0]["condition"], json!("(dAd)(ξ) ≠ ad(ι(ξ))"));
}

#[test]
fn uncertified_run_exits_3_with_window_data() {
    let o = Command::new(env!("CARGO_BIN_EXE_hch"))
        .args(["ep", "--subpair", &data("normalizer.json"), "--module", &data("principal_series_4.json")])
        .env("HCH_MAX_WINDOW", "24")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["EP"], Value::Null);
    assert_eq!(v["report"]["degrees"]["1"]["stabilization"]["windows"], json!([16, 24]));

    let o = hch(&["ep", "--subpair", &data("normalizer.json"), "--module", &data("principal_series_4.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["EP"], json!(1));
}

#[test]
fn explicit_windows() {
    let o = hch(&["homology", "--subpair", &data("diag.json"), "--module", &data("principal_series_4.json"), "--windows", "8,12,16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["H"], json!([3, 1]));
    assert_eq!(v["certified"], json!(true));
    let o = hch(&["homology", "--subpair", &data("diag.json"), "--module", &data("principal_series_4.json"), "--windows", "8,4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hcheck_saves_and_reloads_the_resolution() {
    let dir = tempfile::tempdir().unwrap();
    let saved = dir.path().join("res.json");
    let pair = data("sl2_split_pair.json");
    let o = hch(&["hcheck", "--pair", &pair, "--resolution", "2", "--save-hcomplex", saved.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&saved).unwrap();
    let w: HComplexWire = parse(&text, "res").unwrap();
    assert_eq!(to_json(&w), text);
    let o = hch(&["hcheck", "--pair", &pair, "--hcomplex", saved.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    // Doubling one contraction breaks the homotopy formula.
    let mut v: Value = serde_json::from_str(&text).unwrap();
    let entries = v["i"][0][1]["entries"].as_array_mut().unwrap();
    entries[0][2] = json!({"re": "7", "im": "0"});
    std::fs::write(&saved, v.to_string()).unwrap();
    let o = hch(&["hcheck", "--pair", &pair, "--hcomplex", saved.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["ok"], json!(false));
}

#[test]
fn inline_module_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.tsv");
    let trivial = r#"{"weights": [[0]], "action": [{"rows": 1, "cols": 1, "entries": []}]}"#;
    let o = hch(&["homology", "--subpair", &data("diag.json"), "--module", trivial, "--format", "tsv", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "n\tH_n\n0\t1\n1\t1\n");
}

#[test]
fn ext_ep_and_coinvariants() {
    let o = hch(&["ext", "--subpair", &data("diag.json"), "--module", &data("F2.json")]);
    assert_eq!(serde_json::from_slice::<Value>(&o.stdout).unwrap(), json!({"Ext": [1, 1]}));
    let o = hch(&["ep", "--subpair", &data("diag.json"), "--module", &data("F2.json")]);
    assert_eq!(serde_json::from_slice::<Value>(&o.stdout).unwrap(), json!({"EP": 0}));
    let o = hch(&["coinv", "--subpair", &data("so2.json"), "--module", &data("F2.json")]);
    assert_eq!(serde_json::from_slice::<Value>(&o.stdout).unwrap()["dim"], json!(1));
}

#[test]
fn module_of_the_wrong_size_is_rejected() {
    let m = r#"{"weights": [[0]], "action": [{"rows": 1, "cols": 1, "entries": []}, {"rows": 1, "cols": 1, "entries": []}]}"#;
    let o = hch(&["homology", "--subpair", &data("diag.json"), "--module", m]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("action"), "{}", stderr(&o));
}

#[test]
fn shipped_files_round_trip() {
    for file in ["sl2_pair.json", "sl2_split_pair.json"] {
        let text = std::fs::read_to_string(data(file)).unwrap();
        let w: PairWire = parse(&text, file).unwrap();
        assert_eq!(to_json(&w), text);
    }
}
