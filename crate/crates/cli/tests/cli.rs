//! End-to-end runs of the `reflex` binary.

use std::process::Command;

use serde_json::Value;

fn reflex(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_reflex")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn schema(name: &str) -> Value {
    let path = format!("{}/schema/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file")).expect("schema parses")
}

/// Validates against the keywords the shipped schemas use: type, const, enum,
/// required, properties, additionalProperties, items, oneOf, minimum and
/// local `$ref`s into `$defs`.
fn validate(root: &Value, schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    let fail = |why: String| Err(format!("{path}: {why}"));
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let key = r.strip_prefix("#/$defs/").ok_or_else(|| format!("{path}: unsupported $ref {r}"))?;
        return validate(root, &root["$defs"][key], value, path);
    }
    if let Some(t) = schema.get("type").and_then(Value::as_str) {
        let ok = match t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            other => return fail(format!("unsupported type {other}")),
        };
        if !ok {
            return fail(format!("expected {t}, got {value}"));
        }
    }
    if let Some(c) = schema.get("const") {
        if c != value {
            return fail(format!("expected {c}, got {value}"));
        }
    }
    if let Some(e) = schema.get("enum").and_then(Value::as_array) {
        if !e.contains(value) {
            return fail(format!("{value} not among {e:?}"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(Value::as_f64) {
        if value.as_f64().is_some_and(|x| x < min) {
            return fail(format!("{value} below {min}"));
        }
    }
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        let matching = options.iter().filter(|s| validate(root, s, value, path).is_ok()).count();
        if matching != 1 {
            return fail(format!("matches {matching} alternatives of oneOf"));
        }
    }
    if let Some(obj) = value.as_object() {
        for key in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
            let key = key.as_str().expect("required keys are strings");
            if !obj.contains_key(key) {
                return fail(format!("missing {key}"));
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, v) in obj {
            match props.and_then(|p| p.get(key)) {
                Some(s) => validate(root, s, v, &format!("{path}.{key}"))?,
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => return fail(format!("unexpected key {key}")),
                None => {}
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), value.as_array()) {
        for (i, v) in arr.iter().enumerate() {
            validate(root, items, v, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn assert_valid(schema_name: &str, json: &str) {
    let s = schema(schema_name);
    let v: Value = serde_json::from_str(json).expect("output is JSON");
    if let Err(e) = validate(&s, &s, &v, "$") {
        panic!("{schema_name}: {e}\n{json}");
    }
}

#[test]
fn two_orbit_example_succeeds() {
    let (code, out, _) = reflex(&["verify", "two-orbit", "--group", "G(2,1,2)", "--orbit", "s"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("(1+2x+y)(1+y)"));
    assert!(out.contains("(1-2x-y)(1-y)"));
}

#[test]
fn affine_c2_succeeds() {
    let (code, out, _) = reflex(&["verify", "affine", "--type", "C", "--rank", "2", "--cutoff", "12"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn plain_affine_form_reports_mismatch() {
    let (code, out, _) = reflex(&["verify", "affine", "--type", "C", "--rank", "2", "--cutoff", "6", "--form", "plain"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("[mismatch]"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "two-orbit", "--group", "G(99"][..],
        &["order", "--twisted", "2B", "--q", "2"],
        &["order", "--twisted", "3D4", "--q", "6"],
        &["table", "no-such-table"],
        &["verify", "two-orbit", "--group", "G(2,1,2)", "--orbit", "u"],
        &["verify", "affine", "--type", "Q", "--rank", "2"],
    ] {
        let (code, _, err) = reflex(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn reflexponent_row_g26() {
    let (code, out, _) = reflex(&["table", "reflexponents", "--group", "G26"]);
    assert_eq!(code, 0);
    assert!(out.contains("s: 9/9; t: 9,15 / 9,3"), "{out}");
}

#[test]
fn extension_entries_are_labelled() {
    let (_, out, _) = reflex(&["table", "reflexponents", "--group", "G(4,2,3)"]);
    assert!(out.contains("t: 2,4,6 / 8,4,0 (extension)"), "{out}");
}

#[test]
fn degrees_of_b2() {
    let (code, out, _) = reflex(&["table", "degrees", "--group", "G(2,1,2)"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "G(2,1,2) | 2,4");
}

#[test]
fn short_exponents_csv() {
    let (code, out, _) = reflex(&["table", "short-exponents", "--format", "csv", "--max-rank", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        ["type,exponents,short_exponents", "B2,\"1,3\",2", "B3,\"1,3,5\",\"2,4\"", "C2,\"1,3\",2", "C3,\"1,3,5\",3", "F4,\"1,5,7,11\",\"4,8\"", "G2,\"1,5\",3"]
    );
}

#[test]
fn twisted_orders() {
    let (code, out, _) = reflex(&["order", "--twisted", "3D4", "--q", "2"]);
    assert_eq!((code, out.trim()), (0, "211341312"));
    let (code, out, _) = reflex(&["order", "--twisted", "2A", "--rank", "3", "--q", "2", "--check"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("25920\n"));
    assert!(out.contains("oracle ok"));
}

#[test]
fn json_reports_match_schema() {
    for args in [
        &["verify", "two-orbit", "--group", "G(2,1,2)", "--json"][..],
        &["verify", "solomon", "--group", "G13", "--json", "--timing"],
        &["verify", "weighted", "--type", "B", "--rank", "3", "--json"],
        &["verify", "affine", "--type", "G", "--rank", "2", "--cutoff", "8", "--form", "plain", "--json"],
        &["verify", "dihedral", "--b", "3", "--json"],
        &["verify", "all", "--criterion", "9", "--json"],
    ] {
        let (_, out, _) = reflex(args);
        assert_valid("report.schema.json", &out);
    }
    for args in [
        &["table", "reflexponents", "--group", "G(6,2,3)", "--format", "json"][..],
        &["table", "short-exponents", "--format", "json"],
        &["table", "degrees", "--group", "G28", "--format", "json"],
    ] {
        let (code, out, _) = reflex(args);
        assert_eq!(code, 0);
        assert_valid("table.schema.json", &out);
    }
}

#[test]
fn validator_rejects_bad_reports() {
    let s = schema("report.schema.json");
    let bad = [
        r#"{"schema_version":2,"command":[],"checks":[],"status":"ok"}"#,
        r#"{"schema_version":1,"command":[],"checks":[{"name":"a","status":"fine","lhs":"","rhs":""}],"status":"ok"}"#,
        r#"{"schema_version":1,"command":[],"checks":[],"status":"ok","extra":1}"#,
        r#"{"schema_version":1,"command":[],"status":"ok"}"#,
    ];
    for b in bad {
        let v: Value = serde_json::from_str(b).unwrap();
        assert!(validate(&s, &s, &v, "$").is_err(), "{b}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "solomon", "--group", "G(3,1,2)", "--json"];
    assert_eq!(reflex(&args), reflex(&args));
}
