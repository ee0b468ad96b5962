use std::process::{Command, Output};

fn escalier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_escalier")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = escalier(&all);
    serde_json::from_slice(&o.stdout).expect("one JSON document")
}

#[test]
fn counts() {
    let o = escalier(&["count", "--vars", "3", "--hilbert", "10", "--class", "stable", "--breakdown"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("(10,3,2) | 11"));
    assert!(text.trim_end().ends_with("total    | 29"));

    let doc = json(&["count", "--vars", "3", "--hilbert", "10", "--class", "stable", "--breakdown"]);
    assert_eq!(doc["total"], "29");
    let subtotals: Vec<&str> = doc["rows"].as_array().unwrap().iter().map(|r| r["subtotal"].as_str().unwrap()).collect();
    assert_eq!(subtotals, ["1", "4", "4", "1", "11", "6", "1", "1"]);

    let o = escalier(&["count", "--vars", "2", "--hilbert", "100", "--class", "strongly-stable"]);
    assert_eq!(stdout(&o).trim(), "444793");
}

#[test]
fn parallel_and_untruncated_output_is_identical() {
    let base = escalier(&["--format", "json", "count", "--vars", "3", "--hilbert", "18", "--class", "stable", "--breakdown"]);
    for extra in [&["--jobs", "4"][..], &["--no-truncate"], &["--jobs", "0", "--no-truncate"]] {
        let mut args = vec!["--format", "json", "count", "--vars", "3", "--hilbert", "18", "--class", "stable", "--breakdown"];
        args.extend_from_slice(extra);
        assert_eq!(escalier(&args).stdout, base.stdout, "{extra:?}");
    }
}

#[test]
fn barcode_check_rejects_non_admissible() {
    let path = std::env::temp_dir().join(format!("escalier-check-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"n":3,"width":5,"rows":[[1,1,1,1,1],[2,1,1,1],[2,3]]}"#).unwrap();
    let o = escalier(&["barcode", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not admissible");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn barcode_roundtrip_through_json() {
    let doc = json(&["barcode", "encode", "1", "x1", "x1^2", "x2", "x3", "x1*x3"]);
    assert_eq!(doc["rows"], serde_json::json!([[1, 1, 1, 1, 1, 1], [3, 1, 2], [4, 2]]));
    let path = std::env::temp_dir().join(format!("escalier-code-{}.json", std::process::id()));
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = escalier(&["barcode", "decode", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "1, x1, x1^2, x2, x3, x1*x3");
    assert_eq!(escalier(&["barcode", "check", path.to_str().unwrap()]).status.code(), Some(0));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn listing_and_checks() {
    let doc = json(&["list", "--vars", "2", "--hilbert", "10", "--class", "strongly-stable"]);
    assert_eq!(doc.as_array().unwrap().len(), 10);
    assert_eq!(doc[0]["generators"], serde_json::json!([[10, 0], [0, 1]]));

    let gens = ["x1^3", "x1*x2", "x2^2", "x1^2*x3", "x2*x3", "x3^2"];
    let mut args = vec!["check-stable"];
    args.extend_from_slice(&gens);
    assert_eq!(escalier(&args).status.code(), Some(0));
    args[0] = "check-strongly-stable";
    assert_eq!(escalier(&args).status.code(), Some(1));

    let o = escalier(&["starset", "1", "x1", "x1^2", "x2", "x3", "x1*x3"]);
    assert_eq!(stdout(&o).trim(), "x1^3, x1*x2, x2^2, x1^2*x3, x2*x3, x3^2");
}

#[test]
fn generating_functions() {
    let o = escalier(&["gf", "strict", "--shape", "2,1", "--a", "4,3", "--b", "1,1", "--d", "1"]);
    assert_eq!(stdout(&o).trim(), "x^10 + 2x^9 + 3x^8 + 3x^7 + 3x^6 + x^5 + x^4");
    let doc = json(&["gf", "shifted", "--shape", "3,3,3", "--a", "6,3,1", "--b", "1,1,1", "--d", "0"]);
    assert_eq!(doc["coeffs"][17], "3");
    let bad = escalier(&["gf", "strict", "--shape", "2,1", "--a", "2,5", "--b", "1,1", "--d", "1"]);
    assert_eq!(bad.status.code(), Some(4));
}

#[test]
fn verify_and_probe() {
    let o = escalier(&["verify", "--vars", "3", "--max-p", "8", "--class", "stable"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("PASS").count(), 8);
    let doc = json(&["conjecture", "--hilbert", "5", "--class", "strongly-stable"]);
    assert!(doc["rows"].as_array().unwrap().len() > 1);
}

#[test]
fn svg_render_to_file() {
    let path = std::env::temp_dir().join(format!("escalier-render-{}.svg", std::process::id()));
    let o = escalier(&["--out", path.to_str().unwrap(), "render", "1", "x1", "x2", "--svg", "--labels"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(escalier(&["count", "--vars", "3"]).status.code(), Some(2));
    assert_eq!(escalier(&["starset", "x1", "x2"]).status.code(), Some(3));
    assert_eq!(escalier(&["barcode", "encode", "x1^"]).status.code(), Some(3));
    assert_eq!(escalier(&["count", "--vars", "4", "--hilbert", "5", "--class", "stable"]).status.code(), Some(4));
    assert_eq!(escalier(&["barcode", "check", "/nonexistent/code.json"]).status.code(), Some(5));
    let o = escalier(&["conjecture", "--hilbert", "9", "--class", "stable"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}
