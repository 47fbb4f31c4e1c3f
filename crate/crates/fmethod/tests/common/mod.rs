//! Validation against the shipped schemas.
//!
//! Covers the draft-07 keywords the schemas use: `type`, `properties`,
//! `required`, `additionalProperties: false`, `items`, `enum`, `pattern`,
//! `minimum` and `oneOf`.

#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::Value;

pub fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "boolean" => v.is_boolean(),
        "integer" => v.is_i64() || v.is_u64(),
        "number" => v.is_number(),
        "null" => v.is_null(),
        other => panic!("unsupported type {other}"),
    }
}

/// Every violation as `path: reason`.
pub fn errors(s: &Value, v: &Value, path: &str) -> Vec<String> {
    let mut out = Vec::new();
    let obj = s.as_object().expect("schema is an object");
    for key in obj.keys() {
        let known = [
            "$schema", "$id", "title", "type", "properties", "required", "additionalProperties", "items", "enum",
            "pattern", "minimum", "oneOf",
        ];
        assert!(known.contains(&key.as_str()), "unsupported keyword {key}");
    }
    if let Some(t) = obj.get("type").and_then(Value::as_str) {
        if !type_matches(t, v) {
            out.push(format!("{path}: expected {t}"));
            return out;
        }
    }
    if let Some(e) = obj.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            out.push(format!("{path}: {v} not in enum"));
        }
    }
    if let (Some(p), Some(x)) = (obj.get("pattern").and_then(Value::as_str), v.as_str()) {
        if !regex::Regex::new(p).unwrap().is_match(x) {
            out.push(format!("{path}: {x:?} does not match {p}"));
        }
    }
    if let (Some(m), Some(x)) = (obj.get("minimum").and_then(Value::as_i64), v.as_i64()) {
        if x < m {
            out.push(format!("{path}: {x} below {m}"));
        }
    }
    if let Some(alts) = obj.get("oneOf").and_then(Value::as_array) {
        let ok = alts.iter().filter(|a| errors(a, v, path).is_empty()).count();
        if ok != 1 {
            out.push(format!("{path}: {ok} alternatives of oneOf match"));
        }
    }
    if let Some(map) = v.as_object() {
        let props = obj.get("properties").and_then(Value::as_object);
        for r in obj.get("required").and_then(Value::as_array).into_iter().flatten() {
            let r = r.as_str().unwrap();
            if !map.contains_key(r) {
                out.push(format!("{path}: missing {r}"));
            }
        }
        for (k, x) in map {
            match props.and_then(|p| p.get(k)) {
                Some(ps) => out.extend(errors(ps, x, &format!("{path}/{k}"))),
                None if obj.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    out.push(format!("{path}: unexpected {k}"))
                }
                None => {}
            }
        }
    }
    if let (Some(items), Some(xs)) = (obj.get("items"), v.as_array()) {
        for (i, x) in xs.iter().enumerate() {
            out.extend(errors(items, x, &format!("{path}/{i}")));
        }
    }
    out
}

/// Parses `doc` and panics with every violation of schema `name`.
pub fn validate(name: &str, doc: &str) -> Value {
    let v: Value = serde_json::from_str(doc).unwrap();
    let e = errors(&schema(name), &v, "");
    assert!(e.is_empty(), "{name}: {e:?}");
    v
}
