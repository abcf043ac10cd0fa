//! JSON documents and Graphviz export.
//!
//! Every document is a JSON object with `"format_version": "1"` and a
//! `"kind"` discriminator. Keys are emitted in sorted order and integers are
//! written exactly, so output is byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::constructions::CounterexampleCertificate;
use crate::duplication::DuplicationCertificate;
use crate::error::{Error, Result};
use crate::order_complex::{FVector, HVector};
use crate::poset::Poset;
use crate::stanley::StanleyReport;

pub const FORMAT_VERSION: &str = "1";

pub mod kind {
    pub const POSET: &str = "poset";
    pub const H_VECTOR: &str = "h_vector";
    pub const HVEC_REPORT: &str = "hvec_report";
    pub const STANLEY_REPORT: &str = "stanley_report";
    pub const COUNTEREXAMPLE: &str = "counterexample_certificate";
    pub const DUPLICATION: &str = "duplication_certificate";
}

/// Serialization into the versioned JSON schema.
pub trait ToJson {
    fn to_json_value(&self) -> Value;

    fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("values always serialize")
    }
}

pub fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

pub fn big_array(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

fn document(kind: &str, fields: Value) -> Value {
    let mut obj = match fields {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    obj.insert("format_version".into(), json!(FORMAT_VERSION));
    obj.insert("kind".into(), json!(kind));
    Value::Object(obj)
}

impl ToJson for Poset {
    fn to_json_value(&self) -> Value {
        poset_document(self, None)
    }
}

/// Poset document with an optional `metadata` object.
pub fn poset_document(p: &Poset, metadata: Option<Value>) -> Value {
    let covers: Vec<Value> = p
        .covers()
        .iter()
        .map(|&(a, b)| json!([p.label(a), p.label(b)]))
        .collect();
    let mut doc = document(
        kind::POSET,
        json!({ "elements": p.labels(), "covers": covers }),
    );
    if let Some(meta) = metadata {
        doc["metadata"] = meta;
    }
    doc
}

impl ToJson for HVector {
    fn to_json_value(&self) -> Value {
        document(
            kind::H_VECTOR,
            json!({ "h": big_array(self.entries()), "s": self.s() }),
        )
    }
}

/// `hvec_report` document: f-vector, full and truncated h-vector, and `s`.
pub fn hvec_report(f: &FVector, h: &HVector) -> Result<Value> {
    let truncated = h.truncate()?;
    Ok(document(
        kind::HVEC_REPORT,
        json!({
            "f": big_array(f.counts()),
            "h": big_array(h.entries()),
            "truncated": big_array(&truncated),
            "s": truncated.len() - 1,
        }),
    ))
}

impl ToJson for FVector {
    fn to_json_value(&self) -> Value {
        document("f_vector", json!({ "f": big_array(self.counts()) }))
    }
}

impl ToJson for StanleyReport {
    fn to_json_value(&self) -> Value {
        let violations: Vec<Value> = self
            .violations
            .iter()
            .map(|v| json!({ "j": v.j, "lhs": big(&v.lhs), "rhs": big(&v.rhs) }))
            .collect();
        document(
            kind::STANLEY_REPORT,
            json!({
                "passed": self.passed,
                "s": self.s,
                "violations": violations,
                "nonpositive": self.nonpositive,
            }),
        )
    }
}

impl ToJson for DuplicationCertificate {
    fn to_json_value(&self) -> Value {
        document(
            kind::DUPLICATION,
            json!({
                "site": self.site,
                "new_label": self.new_label,
                "was_join_irreducible": self.was_join_irreducible,
                "was_meet_irreducible": self.was_meet_irreducible,
                "maximal_chains_through_site": big(&self.maximal_chains_through_site.into()),
            }),
        )
    }
}

impl ToJson for CounterexampleCertificate {
    fn to_json_value(&self) -> Value {
        document(
            kind::COUNTEREXAMPLE,
            json!({
                "s": self.s,
                "t": self.t,
                "n": self.n,
                "site": self.site,
                "site_maximal_chains": big(&self.site_maximal_chains.into()),
                "base_h": big_array(&self.base_h),
                "final_h": big_array(&self.final_h),
                "violated_j": self.violated_j,
                "lhs": big(&self.lhs),
                "rhs": big(&self.rhs),
                "modularity_witnessed": self.modularity_witnessed,
                "element_count": self.element_count,
            }),
        )
    }
}

fn schema(field: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        field: field.to_string(),
        message: message.into(),
    }
}

pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn check_header(doc: &Value, expected_kind: &[&str]) -> Result<String> {
    let obj = doc
        .as_object()
        .ok_or_else(|| schema("<root>", "expected a JSON object"))?;
    match obj.get("format_version") {
        None => {}
        Some(Value::String(v)) if v == FORMAT_VERSION => {}
        Some(other) => {
            return Err(schema(
                "format_version",
                format!("unsupported version {other}"),
            ))
        }
    }
    let kind = match obj.get("kind") {
        None => kind::POSET.to_string(),
        Some(Value::String(k)) => k.clone(),
        Some(_) => return Err(schema("kind", "expected a string")),
    };
    if !expected_kind.contains(&kind.as_str()) {
        return Err(schema(
            "kind",
            format!("expected one of {expected_kind:?}, found `{kind}`"),
        ));
    }
    Ok(kind)
}

/// Reads a poset document. A missing `kind` is read as a poset.
pub fn from_json(text: &str) -> Result<Poset> {
    poset_from_value(&parse_value(text)?)
}

pub fn poset_from_value(doc: &Value) -> Result<Poset> {
    check_header(doc, &[kind::POSET])?;
    let elements = doc
        .get("elements")
        .ok_or_else(|| schema("elements", "missing"))?
        .as_array()
        .ok_or_else(|| schema("elements", "expected an array of strings"))?
        .iter()
        .map(|e| {
            e.as_str()
                .map(str::to_string)
                .ok_or_else(|| schema("elements", "expected an array of strings"))
        })
        .collect::<Result<Vec<String>>>()?;
    let covers = doc
        .get("covers")
        .ok_or_else(|| schema("covers", "missing"))?
        .as_array()
        .ok_or_else(|| schema("covers", "expected an array of pairs"))?
        .iter()
        .map(|pair| match pair.as_array().map(Vec::as_slice) {
            Some([Value::String(a), Value::String(b)]) => Ok((a.clone(), b.clone())),
            _ => Err(schema("covers", "each cover must be a pair of strings")),
        })
        .collect::<Result<Vec<(String, String)>>>()?;
    Poset::from_covers(elements, covers)
}

/// The `metadata` object of a poset document, if any.
pub fn metadata_of(doc: &Value) -> Option<&Value> {
    doc.get("metadata")
}

fn big_from_value(v: &Value, field: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            BigInt::from_str(&n.to_string()).map_err(|_| schema(field, "expected integers"))
        }
        _ => Err(schema(field, "expected integers")),
    }
}

fn big_vec(doc: &Value, field: &str) -> Result<Vec<BigInt>> {
    doc.get(field)
        .ok_or_else(|| schema(field, "missing"))?
        .as_array()
        .ok_or_else(|| schema(field, "expected an array of integers"))?
        .iter()
        .map(|v| big_from_value(v, field))
        .collect()
}

/// Reads an h-vector from an `h_vector` document (field `h`) or an
/// `hvec_report` document (field `truncated`).
pub fn h_vector_from_value(doc: &Value) -> Result<Vec<BigInt>> {
    match check_header(doc, &[kind::H_VECTOR, kind::HVEC_REPORT])?.as_str() {
        kind::H_VECTOR => big_vec(doc, "h"),
        _ => big_vec(doc, "truncated"),
    }
}

/// Graphviz digraph of the Hasse diagram: one edge per cover, drawn bottom
/// to top, with elements of equal height on the same rank.
pub fn to_dot(p: &Poset) -> String {
    let mut height = vec![0usize; p.len()];
    for &v in p.linear_extension() {
        height[v] = p
            .lower_covers(v)
            .iter()
            .map(|&u| height[u] + 1)
            .max()
            .unwrap_or(0);
    }
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &h) in height.iter().enumerate() {
        ranks.entry(h).or_default().push(v);
    }

    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for (i, label) in p.labels().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(label));
    }
    for (h, members) in &ranks {
        let names: Vec<String> = members.iter().map(|v| format!("n{v};")).collect();
        let _ = writeln!(
            out,
            "  {{ rank=same; /* height {h} */ {} }}",
            names.join(" ")
        );
    }
    for &(a, b) in p.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
