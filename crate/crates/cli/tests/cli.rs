use std::io::Write;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn vstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_g2_is_wobbly_with_the_short_coroot_witness() {
    let out = vstab(&["classify", "G2", "c1:1,0"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert_eq!(v["very_stable"], json!(false));
    assert_eq!(v["witnesses"][0]["alpha_coroot_coords"], json!([1, -1]));
    assert_eq!(v["witnesses"][0]["point"], json!("c1"));
}

#[test]
fn classify_very_stable_cases() {
    for args in [
        &["classify", "A3", "c1:1,0,0;c2:0,0,1"][..],
        &["classify", "B2", ""],
    ] {
        let out = vstab(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json_of(&out)["very_stable"], json!(true));
    }
}

#[test]
fn input_errors_exit_with_one() {
    for args in [
        &["classify", "G2", "c1:1"][..],
        &["classify", "B2", "c1:1,-1"],
        &["mult", "X3", "1,0,0"],
        &["mult", "A1", "4"],
        &["table1", "G2"],
        &["mult", "A2"],
        &["frobnicate"],
    ] {
        let out = vstab(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn mult_examples() {
    let v = json_of(&vstab(&["mult", "B3", "1,0,0"]));
    assert_eq!(v["polynomial_coeffs"], json!([1, 1, 1, 1, 1, 1]));
    assert_eq!(v["matches_table1"], json!(true));
    assert_eq!(v["matches_dynkin"], json!(true));
    let v = json_of(&vstab(&["mult", "G2", "1,0", "--genus", "2,3"]));
    assert_eq!(v["polynomial_coeffs"], json!("not_polynomial"));
    assert_eq!(v["genus_list"], json!([2, 3]));
    let v = json_of(&vstab(&["mult", "A1", "0"]));
    assert_eq!(v["polynomial_coeffs"], json!([1]));
    for key in [
        "type",
        "coweight",
        "genus_list",
        "factored",
        "polynomial_coeffs",
        "matches_table1",
        "matches_dynkin",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn table1_e7_single_matching_row() {
    let v = json_of(&vstab(&["table1", "E7"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["index"], json!(7));
    assert_eq!(rows[0]["matches_table1"], json!(true));
}

#[test]
fn witness_and_feasibility() {
    let v = json_of(&vstab(&["witness", "C4", "1,0,0,0"]));
    assert_eq!(v["witness"]["alpha_coroot_coords"], json!([1, 0, 0, 0]));
    let v = json_of(&vstab(&["witness", "A3", "1,0,0"]));
    assert_eq!(v["minuscule"], json!(true));
    assert_eq!(v["witness"], Value::Null);
    let v = json_of(&vstab(&["feasible", "F4", "0,0,0,0"]));
    assert_eq!(v["feasible"], json!(true));
    assert_eq!(v["decomposition"], json!([]));
    let v = json_of(&vstab(&["feasible", "D5", "0,1,0,0,0"]));
    assert_eq!(v["feasible"], json!(false));
}

#[test]
fn coroot_basis_flag() {
    let v = json_of(&vstab(&["dynkin", "B2", "1,1", "--basis", "coroot"]));
    // α1^∨ + α2^∨ in B2 is column sum of the Cartan matrix
    assert_eq!(v["coweight"], json!("0,1"));
}

#[test]
fn pretty_output_is_text() {
    let out = vstab(&["minuscule", "E6", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "minuscule_fundamentals: [1, 6]\ntype: E6\n");
}

#[test]
fn batch_runs_in_order_and_summarizes_failures() {
    let mut f = std::env::temp_dir();
    f.push(format!("vstab-batch-{}.jsonl", std::process::id()));
    let mut file = std::fs::File::create(&f).unwrap();
    let lines = [
        r#"{"type":"G2","command":"classify","divisor":"c1:1,0"}"#,
        r#"{"type":"B3","command":"mult","coweight":"1,0,0","genus":[2,3]}"#,
        r#"{"type":"B3","command":"mult"}"#,
        r#"{"type":"D4","command":"table1"}"#,
    ];
    writeln!(file, "{}", lines.join("\n")).unwrap();
    drop(file);
    let path = f.to_str().unwrap();

    let out = vstab(&["batch", path]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout.clone()).unwrap();
    let results: Vec<Value> = stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(results.len(), 4);
    for (k, r) in results.iter().enumerate() {
        assert_eq!(r["line"], json!(k + 1));
    }
    assert_eq!(results[0]["exit_code"], json!(3));
    assert_eq!(
        results[1]["result"]["polynomial_coeffs"],
        json!([1, 1, 1, 1, 1, 1])
    );
    assert!(results[2]["error"].is_string());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("4 scenarios, 1 failed"), "{stderr}");

    // deterministic output
    let again = vstab(&["batch", path]);
    assert_eq!(again.stdout, out.stdout);
    std::fs::remove_file(&f).unwrap();
}

#[test]
fn batch_with_only_valid_scenarios_exits_zero() {
    let mut f = std::env::temp_dir();
    f.push(format!("vstab-batch-ok-{}.jsonl", std::process::id()));
    std::fs::write(
        &f,
        "{\"type\":\"A3\",\"command\":\"classify\",\"divisor\":\"p:2,0,0\"}\n\n{\"type\":\"E6\",\"command\":\"minuscule\"}\n",
    )
    .unwrap();
    let out = vstab(&["batch", f.to_str().unwrap()]);
    // a wobbly verdict is still a successful run
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_file(&f).unwrap();
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["table1", "D6"][..],
        &["classify", "F4", "a:1,0,0,0;b:0,0,0,1;c:0,1,0,0"],
        &["mult", "E6", "1,0,0,0,0,1", "--genus", "3,4"],
    ] {
        let a = vstab(args);
        let b = vstab(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}
