use std::path::Path;
use std::process::{Command, Output};

use fpr_core::classifier::ClassificationReport;
use fpr_core::fpr_formulas::FormulaResult;
use fpr_core::verify_harness::Report;
use serde_json::Value;

fn fpr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpr")).args(args).output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(name);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn assert_valid(schema_name: &str, v: &Value) {
    let s = schema(schema_name);
    if let Err(errs) = s.validate(v) {
        let msgs: Vec<String> = errs.map(|e| e.to_string()).collect();
        panic!("{v} does not match {schema_name}: {msgs:?}");
    };
}

#[test]
fn formula_values_and_schema() {
    let o = fpr(&["formula", "tab:class/Sp/Oeps/b1", "--n", "6", "--q", "2", "--eps", "-"]);
    assert!(o.status.success());
    let v = &lines(&o)[0];
    assert_eq!(v["value"], "4/7");
    assert_valid("formula_result.schema.json", v);
    let back: FormulaResult = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(back.value.to_string(), "4/7");

    let o = fpr(&["formula", "subset-rcycle", "--n", "7", "--l", "3", "--r", "5"]);
    assert_eq!(lines(&o)[0]["value"], "0");
    let o = fpr(&["formula", "partition-transposition", "--n", "6", "--output", "human"]);
    assert!(stdout(&o).contains("value: 2/5"));
    let o = fpr(&["formula", "product", "--values", "3/5,1/3"]);
    assert_eq!(lines(&o)[0]["value"], "1/5");
}

#[test]
fn exit_codes() {
    assert_eq!(fpr(&["formula", "no-such-formula"]).status.code(), Some(2));
    let o = fpr(&["formula", "tab:class/L/P1/phi", "--n", "3", "--q", "8"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(n,q) = (2,8)"));
    assert_eq!(fpr(&["classify", "--family", "Sp", "--n", "5", "--q", "2", "--action", "P1", "--r", "2"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_fpr"))
        .args(["brute", "--group", "catalog:sp6-P1", "--scan"])
        .env("FPR_CLOSURE_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("element"));
    assert_eq!(fpr(&["brute", "--group", "nowhere:x", "--scan"]).status.code(), Some(2));
}

#[test]
fn classify_reports() {
    let o = fpr(&["classify", "--family", "Sp", "--n", "6", "--q", "2", "--action", "Oeps:-", "--r", "2"]);
    assert!(o.status.success());
    let v = &lines(&o)[0];
    assert_valid("classification_report.schema.json", v);
    let rep: ClassificationReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(rep.exceptions.len(), 1);
    assert_eq!(rep.exceptions[0].value.to_string(), "4/7");

    let o = fpr(&["classify", "--family", "SymAlt", "--n", "10", "--action", "subsets:2", "--r", "3"]);
    let v = &lines(&o)[0];
    assert_eq!(v["verdict"], "exceptions");
    assert_eq!(v["exceptions"][0]["id"], "thm1/subsets");

    let o = fpr(&["classify", "--family", "U", "--n", "5", "--q", "3", "--action", "P1", "--r", "5"]);
    assert!(o.status.success());
    let v = &lines(&o)[0];
    assert_eq!(v["verdict"], "no_exception");
    assert_valid("classification_report.schema.json", v);
}

#[test]
fn mindeg_and_minindex() {
    let o = fpr(&["mindeg", "--family", "Sporadic", "--name", "M22:2", "--action", "catalog:L3(4).2_2"]);
    let v = &lines(&o)[0];
    assert_eq!(v["value"], "14");
    assert_valid("index_value.schema.json", v);
    let o = fpr(&["minindex", "--family", "Sp", "--n", "6", "--q", "2", "--action", "Oeps:-"]);
    assert_eq!(lines(&o)[0]["value"], "6");
    let o = fpr(&["minindex", "--family", "S", "--n", "8", "--action", "partitions"]);
    let v = &lines(&o)[0];
    assert_eq!(v["kind"], "range_only");
    assert_valid("index_value.schema.json", v);
}

#[test]
fn brute_modes() {
    let o = fpr(&["brute", "--group", "catalog:sp6-P1", "--scan"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = &lines(&o)[0];
    assert_valid("brute_result.schema.json", v);
    let row = fpr(&["formula", "tab:class/Sp/P1/J2", "--n", "6", "--q", "2"]);
    assert_eq!(v["max_fpr_by_prime"]["2"]["max_fpr"], lines(&row)[0]["value"]);

    let o = fpr(&["brute", "--group", "catalog:a5-natural", "--min-index"]);
    assert_eq!(lines(&o)[0]["min_index"], 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(&path, r#"{"degree": 5, "generators": [[1,0,2,3,4],[1,2,3,4,0]], "name": "S5"}"#).unwrap();
    let uri = format!("file:{}", path.display());
    let o = fpr(&["brute", "--group", &uri, "--element", "cycles:(0 1)"]);
    let v = &lines(&o)[0];
    assert_eq!(v["fpr"], "3/5");
    assert_eq!(v["fixed"], 3);
    assert_eq!(v["ind"], 1);
    assert_eq!(v["in_group"], true);
    assert_valid("brute_result.schema.json", v);

    let o = fpr(&["brute", "--group", &uri, "--scan", "--output", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("degree,group,group_order"));
}

#[test]
fn verify_streams_reports() {
    let o = fpr(&["verify", "tables"]);
    assert!(o.status.success());
    let rows = lines(&o);
    let (summary, reports) = rows.split_last().unwrap();
    assert_valid("summary.schema.json", summary);
    assert!(reports.len() >= 5);
    for r in reports {
        assert_valid("report.schema.json", r);
        let rep: Report = serde_json::from_value(r.clone()).unwrap();
        assert_eq!(rep.computed, rep.expected);
    }
    assert!(reports.iter().any(|r| r["case"] == "m22.2/2B" && r["computed"] == "4/11"));

    let o = fpr(&["verify", "--case", "diag/A5/k2/R1-identity-alpha"]);
    assert!(o.status.success());
    assert_eq!(lines(&o)[0]["computed"], "4/15");
    assert_eq!(fpr(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let strip = |o: &Output| -> Vec<Value> {
        lines(o)
            .into_iter()
            .map(|mut v| {
                let m = v.as_object_mut().unwrap();
                m.remove("ms");
                if let Some(s) = m.get_mut("summary") {
                    s.as_object_mut().unwrap().remove("ms");
                }
                v
            })
            .collect()
    };
    let a = fpr(&["verify", "affine", "--parallelism", "1"]);
    let b = fpr(&["verify", "affine", "--parallelism", "4"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn catalog_list() {
    let o = fpr(&["catalog", "list"]);
    let rows = lines(&o);
    for id in ["tab:a6/S6/S5prim/23", "sp6/Ominus/b1", "m22.2/2B", "affine/3^2:GL23/transvection", "diag/A5/k2/R1-identity-alpha", "tab:a6/S6/S2wrS3/2"] {
        assert!(rows.iter().any(|r| r["id"] == id), "{id}");
    }
    assert!(rows.iter().any(|r| r["id"] == "catalog:sp6-P1"));
}
