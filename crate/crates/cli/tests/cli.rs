use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicohom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).expect("valid json")
}

#[test]
fn normalize_tensor_relation() {
    let o = run(&["normalize", "--ring", "bt2", "--expr", "z00*cT"]);
    assert_eq!(o.status.code(), Some(0));
    let nf = stdout(&o).trim().to_string();
    let printed = "z10*cxw1 + z01*cxw2 - u[1]*z01*z10*z11*cxw1*cxw2";
    let d = run(&["normalize", "--expr", &format!("({nf}) - ({printed})")]);
    assert_eq!(stdout(&d).trim(), "0");
    let again = run(&["normalize", "--expr", printed]);
    assert_eq!(stdout(&again).trim(), nf);
}

#[test]
fn normalize_json_has_schema() {
    let v = json(&["normalize", "--expr", "z00*cT"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["ring"], "bt2");
    let w = json(&["normalize", "--expr", "z10*cxw1"]);
    assert_eq!(v["grading"], w["grading"]);
    assert!(v["grading"].is_string());
    let mixed = json(&["normalize", "--expr", "z00 + cT"]);
    assert!(mixed["grading"].is_null());
}

#[test]
fn normalize_other_rings() {
    let o = run(&["normalize", "--ring", "h", "--expr", "(1 - kappa)^2"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["normalize", "--ring", "bt1", "--expr", "z0*z1*cxw - z0*z1*cxw"]);
    assert_eq!(stdout(&o).trim(), "0");
    let v = json(&["normalize", "--ring", "bu2", "--expr", "cL"]);
    assert_eq!(v["sstar"], "cT");
}

#[test]
fn empty_expression_is_usage_error() {
    let o = run(&["normalize", "--expr", ""]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 0"));
}

#[test]
fn parse_error_reports_position_and_expected() {
    let o = run(&["normalize", "--expr", "z00 + q"]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("position 6"), "{e}");
    assert!(e.contains("expected z00"), "{e}");
}

#[test]
fn unknown_flag_prints_usage() {
    let o = run(&["normalize", "--bogus", "--expr", "z00"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage"));
}

#[test]
fn csv_only_where_supported() {
    let o = run(&["normalize", "--expr", "z00", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn multiply_agrees_with_normalize() {
    let o = run(&["multiply", "--expr", "z00 + cT", "--expr", "z11 - cxT"]);
    let p = run(&["normalize", "--expr", "(z00 + cT)*(z11 - cxT)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&p));
}

#[test]
fn basis_csv_grid() {
    let o = run(&["basis", "--coset", "W01+W10", "--window", "0:6:0:10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let want = "a,b,count\n0,0,1\n0,2,1\n2,0,1\n2,2,3\n2,4,2\n4,2,2\n4,4,5\n4,6,3\n6,4,3\n6,6,7\n6,8,4\n";
    assert_eq!(stdout(&o), want);
}

#[test]
fn basis_json_cells() {
    let v = json(&["basis", "--coset", "0", "--window", "2:2:4:4"]);
    assert_eq!(v["coset"], "0");
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["count"], 4);
    assert_eq!(cells[0]["monomials"].as_array().unwrap().len(), 4);
    let v = json(&["basis", "--coset", "W01+W10", "--window", "0:0:0:0"]);
    assert_eq!(v["cells"][0]["monomials"][0], "z01*z10");
}

#[test]
fn basis_bad_window() {
    let o = run(&["basis", "--window", "0:6:0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn map_tuples_are_arrays() {
    let v = json(&["map", "--name", "phi", "--expr", "cw1"]);
    let t = v["value"].as_array().expect("array");
    assert_eq!(t.len(), 4);
    let v = json(&["map", "--name", "eta", "--expr", "z00"]);
    assert_eq!(v["value"].as_array().unwrap().len(), 4);
}

#[test]
fn map_sources() {
    let v = json(&["map", "--name", "sstar", "--expr", "cL"]);
    assert_eq!(v["value"], "cT");
    let v = json(&["map", "--name", "pi1", "--expr", "z0"]);
    assert_eq!(v["ring"], "bt2");
    let v = json(&["map", "--name", "t", "--expr", "z00"]);
    assert_eq!(v["ring"], "bt1");
    let o = run(&["map", "--name", "sstar", "--expr", "z00"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn euler_and_waner() {
    let e1 = json(&["euler", "--m", "1", "--n", "0"]);
    assert_eq!(e1["bundle"], "O(1,0)");
    let e2 = json(&["euler", "--m", "0", "--n", "-1", "--twisted"]);
    assert_eq!(e2["bundle"], "chiO(0,-1)");
    let v = json(&["waner", "--bundles", "cw1,cw2"]);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["coefficients"][2], "cw1*cw2");
    let w = json(&["waner", "--bundles", "O(1,0),chiO(0,-1)"]);
    let top = format!("({})*({})", e1["euler"].as_str().unwrap(), e2["euler"].as_str().unwrap());
    let p = json(&["normalize", "--expr", &top]);
    assert_eq!(w["coefficients"][2], p["value"]);
    let o = run(&["waner", "--bundles", "cw1,O(1)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn units_lists_thirty_two() {
    let v = json(&["units"]);
    assert_eq!(v["units"].as_array().unwrap().len(), 32);
    assert_eq!(v["table_matches"], true);
}

#[test]
fn push_of_one() {
    let v = json(&["push", "--coeffs", "1,0,0,0"]);
    assert_eq!(v["input"], "1");
    assert_eq!(v["pushforward"], "u[1]*Z0*Z2");
    let o = run(&["push", "--coeffs", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn confluence_report() {
    let o = run(&["verify", "--confluence"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("bt1: 2 overlaps, 0 fail"));
    assert!(s.contains("bt2: 26 overlaps, 0 fail"));
}

#[test]
fn verify_is_reproducible() {
    let a = run(&["verify"]);
    let b = run(&["verify"]);
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert_eq!(s.lines().filter(|l| l.contains("PASS") || l.contains("FAIL")).count(), 14);
    let code = if s.contains("FAIL") { 1 } else { 0 };
    assert_eq!(a.status.code(), Some(code));
}

#[test]
fn verify_single_criterion_with_threads() {
    let o = Command::new(env!("CARGO_BIN_EXE_equicohom"))
        .args(["verify", "--criterion", "6", "--format", "csv"])
        .env("EQUICOHOM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "id,title,result\n6,units,PASS\n");
    let bad = Command::new(env!("CARGO_BIN_EXE_equicohom"))
        .args(["units"])
        .env("EQUICOHOM_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
