//! Every CLI report validates against docs/report-schema.json, and CSV
//! output has one row per JSON record.

use charsum::cli::run;
use serde_json::Value;

fn schema() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report-schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn run_cli(args: &[&str]) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("charsum").chain(args.iter().copied()), &mut out, &mut err);
    assert_eq!(code, 0, "{args:?}: {}", String::from_utf8_lossy(&err));
    String::from_utf8(out).unwrap()
}

const CASES: &[(&str, &[&str])] = &[
    ("verify-bounds", &["verify-bounds", "--field", "3,1,2"]),
    ("verify-bounds", &["verify-bounds", "--field", "2,1,4", "--mode", "sampled", "--samples", "30"]),
    ("scan-primitive", &["scan-primitive", "--field", "3,1,2", "--dims", "1,2"]),
    ("scan-primitive --translate", &["scan-primitive", "--field", "5,1,2", "--translate"]),
    ("knormal", &["knormal", "--field", "2,1,4"]),
    ("knormal --k", &["knormal", "--field", "3,1,4", "--k", "1"]),
    ("knormal --k", &["knormal", "--field", "3,1,4", "--k", "2"]),
    ("knormal --k", &["knormal", "--field", "2,1,7", "--k", "5"]),
    ("digits", &["digits", "--field", "2,1,4", "--sharpness"]),
    ("digits", &["digits", "--field", "3,1,2", "--prescribe", "0=1"]),
    ("grassmann", &["grassmann", "--field", "2,1,4"]),
    ("grassmann", &["grassmann", "--field", "2,1,4", "--budget", "20"]),
    ("artin-schreier", &["artin-schreier", "--p", "5"]),
    ("artin-schreier --q", &["artin-schreier", "--p", "2", "--q", "4"]),
];

#[test]
fn reports_match_schema() {
    let root = schema();
    assert_eq!(root["version"], charsum::report::SCHEMA_VERSION);
    for (kind, args) in CASES {
        let def = root["x-reports"][kind].as_str().unwrap();
        let mut s = root.clone();
        s["items"] = serde_json::json!({ "$ref": format!("#/$defs/{def}") });
        let validator = jsonschema::validator_for(&s).unwrap();
        let report: Value = serde_json::from_str(&run_cli(args)).unwrap();
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");

        let mut csv_args = args.to_vec();
        csv_args.extend(["--format", "csv"]);
        let csv = run_cli(&csv_args);
        let rows = csv::Reader::from_reader(csv.as_bytes()).records().count();
        assert_eq!(rows, report.as_array().unwrap().len(), "{args:?}");
    }
}

#[test]
fn schema_rejects_malformed_records() {
    let mut s = schema();
    s["items"] = serde_json::json!({ "$ref": "#/$defs/bound_report" });
    let validator = jsonschema::validator_for(&s).unwrap();
    let mut report: Value = serde_json::from_str(&run_cli(&["verify-bounds", "--field", "3,1,2"])).unwrap();
    assert!(validator.is_valid(&report));
    report[0]["extra"] = Value::Bool(true);
    assert!(!validator.is_valid(&report));
    report[0].as_object_mut().unwrap().remove("extra");
    report[0]["theorem"] = Value::String("unknown".into());
    assert!(!validator.is_valid(&report));
}
