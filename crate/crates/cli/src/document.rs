//! Versioned JSON envelope for everything the CLI prints.
//!
//! Every document is an object `{"schema_version": 1, "kind": K, "data": D}`
//! whose keys, at every depth, are sorted. The shape of `D` per kind:
//!
//! | kind                | data                                                           |
//! |---------------------|----------------------------------------------------------------|
//! | `digraph`           | `{n, arcs}`                                                    |
//! | `class_report`      | recognition flags, `alpha`, optional witnesses                 |
//! | `forbidden`         | `{mode, class, in_class, witness}`                             |
//! | `partition`         | `{digraph, stable_set, mode, builder, partition, trace}`       |
//! | `property_report`   | `{digraph, property, holds, failing_stable_set, failing_subdigraph, certificates}` |
//! | `survey_report`     | `{n_max, mode, class, up_to_iso, seed, orders, counterexamples, generated}` |
//! | `validation_report` | `{class, n, mode, exhaustive, seed, members, skipped, stable_sets, clique_cover_checks, hamilton_cycles, failures}` |

use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Digraph,
    ClassReport,
    Forbidden,
    Partition,
    PropertyReport,
    SurveyReport,
    ValidationReport,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Digraph,
        Kind::ClassReport,
        Kind::Forbidden,
        Kind::Partition,
        Kind::PropertyReport,
        Kind::SurveyReport,
        Kind::ValidationReport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Digraph => "digraph",
            Kind::ClassReport => "class_report",
            Kind::Forbidden => "forbidden",
            Kind::Partition => "partition",
            Kind::PropertyReport => "property_report",
            Kind::SurveyReport => "survey_report",
            Kind::ValidationReport => "validation_report",
        }
    }

    fn from_name(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// Wraps `data` and renders it as pretty JSON with sorted keys and a trailing newline.
pub fn render<T: Serialize>(kind: Kind, data: &T) -> String {
    let mut doc = Map::new();
    doc.insert("schema_version".into(), SCHEMA_VERSION.into());
    doc.insert("kind".into(), kind.name().into());
    doc.insert(
        "data".into(),
        serde_json::to_value(data).expect("report types serialize"),
    );
    // serde_json's default map is ordered, so keys come out sorted.
    serde_json::to_string_pretty(&Value::Object(doc)).expect("values serialize") + "\n"
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

#[derive(Clone, Copy)]
enum Ty {
    Bool,
    Uint,
    Str,
    Array,
    Object,
    /// `null` or an object.
    OptObject,
    /// `null` or an array.
    OptArray,
    OptUint,
}

impl Ty {
    fn accepts(self, v: &Value) -> bool {
        match self {
            Ty::Bool => v.is_boolean(),
            Ty::Uint => v.is_u64(),
            Ty::Str => v.is_string(),
            Ty::Array => v.is_array(),
            Ty::Object => v.is_object(),
            Ty::OptObject => v.is_null() || v.is_object(),
            Ty::OptArray => v.is_null() || v.is_array(),
            Ty::OptUint => v.is_null() || v.is_u64(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Ty::Bool => "a boolean",
            Ty::Uint => "a non-negative integer",
            Ty::Str => "a string",
            Ty::Array => "an array",
            Ty::Object => "an object",
            Ty::OptObject => "null or an object",
            Ty::OptArray => "null or an array",
            Ty::OptUint => "null or a non-negative integer",
        }
    }
}

fn fail(path: &str, message: impl Into<String>) -> SchemaError {
    SchemaError {
        path: path.to_string(),
        message: message.into(),
    }
}

fn fields(v: &Value, path: &str, expected: &[(&str, Ty)]) -> Result<(), SchemaError> {
    let obj = v
        .as_object()
        .ok_or_else(|| fail(path, "expected an object"))?;
    for (key, ty) in expected {
        let field = obj
            .get(*key)
            .ok_or_else(|| fail(path, format!("missing field {key:?}")))?;
        if !ty.accepts(field) {
            return Err(fail(
                &format!("{path}.{key}"),
                format!("expected {}", ty.name()),
            ));
        }
    }
    for key in obj.keys() {
        if !expected.iter().any(|(k, _)| k == key) {
            return Err(fail(path, format!("unexpected field {key:?}")));
        }
    }
    Ok(())
}

fn each<'a>(v: &'a Value, path: &str) -> impl Iterator<Item = (String, &'a Value)> {
    let path = path.to_string();
    v.as_array()
        .into_iter()
        .flatten()
        .enumerate()
        .map(move |(i, x)| (format!("{path}[{i}]"), x))
}

fn vertex_list(v: &Value, path: &str) -> Result<(), SchemaError> {
    let arr = v
        .as_array()
        .ok_or_else(|| fail(path, "expected an array of vertices"))?;
    match arr.iter().position(|x| !x.is_u64()) {
        Some(i) => Err(fail(&format!("{path}[{i}]"), "expected a vertex number")),
        None => Ok(()),
    }
}

fn digraph(v: &Value, path: &str) -> Result<(), SchemaError> {
    fields(v, path, &[("n", Ty::Uint), ("arcs", Ty::Array)])?;
    let n = v["n"].as_u64().unwrap_or(0);
    for (p, arc) in each(&v["arcs"], &format!("{path}.arcs")) {
        vertex_list(arc, &p)?;
        let pair = arc.as_array().expect("checked");
        if pair.len() != 2 || pair.iter().any(|x| x.as_u64().unwrap_or(u64::MAX) >= n) {
            return Err(fail(&p, "expected a pair of vertices below n"));
        }
    }
    Ok(())
}

fn witness(v: &Value, path: &str) -> Result<(), SchemaError> {
    if v.is_null() {
        return Ok(());
    }
    fields(
        v,
        path,
        &[
            ("kind", Ty::Str),
            ("vertices", Ty::Array),
            ("extra", Ty::Array),
        ],
    )?;
    vertex_list(&v["vertices"], &format!("{path}.vertices"))?;
    vertex_list(&v["extra"], &format!("{path}.extra"))
}

fn mode(v: &Value, path: &str) -> Result<(), SchemaError> {
    match v.as_str() {
        Some("alpha" | "be") => Ok(()),
        _ => Err(fail(path, "expected \"alpha\" or \"be\"")),
    }
}

fn partition(v: &Value, path: &str) -> Result<(), SchemaError> {
    fields(
        v,
        path,
        &[
            ("paths", Ty::Array),
            ("mode", Ty::Str),
            ("stable_set", Ty::OptArray),
        ],
    )?;
    for (p, x) in each(&v["paths"], &format!("{path}.paths")) {
        vertex_list(x, &p)?;
    }
    if !v["stable_set"].is_null() {
        vertex_list(&v["stable_set"], &format!("{path}.stable_set"))?;
    }
    match v["mode"].as_str() {
        Some("plain" | "alpha" | "be") => Ok(()),
        _ => Err(fail(
            &format!("{path}.mode"),
            "expected \"plain\", \"alpha\" or \"be\"",
        )),
    }
}

fn property_report(v: &Value, path: &str) -> Result<(), SchemaError> {
    fields(
        v,
        path,
        &[
            ("digraph", Ty::Object),
            ("property", Ty::Str),
            ("holds", Ty::Bool),
            ("failing_stable_set", Ty::OptArray),
            ("failing_subdigraph", Ty::OptArray),
            ("certificates", Ty::Object),
        ],
    )?;
    digraph(&v["digraph"], &format!("{path}.digraph"))?;
    mode(&v["property"], &format!("{path}.property"))?;
    for key in ["failing_stable_set", "failing_subdigraph"] {
        if !v[key].is_null() {
            vertex_list(&v[key], &format!("{path}.{key}"))?;
        }
    }
    for (key, cert) in v["certificates"].as_object().expect("checked") {
        partition(cert, &format!("{path}.certificates.{key}"))?;
    }
    Ok(())
}

fn class_report(v: &Value, path: &str) -> Result<(), SchemaError> {
    fields(
        v,
        path,
        &[
            ("order", Ty::Uint),
            ("arcs", Ty::Uint),
            ("tournament", Ty::Bool),
            ("semicomplete", Ty::Bool),
            ("complete", Ty::Bool),
            ("symmetric", Ty::Bool),
            ("in_semicomplete", Ty::Bool),
            ("strong", Ty::Bool),
            ("lonely_arcs", Ty::Uint),
            ("alpha", Ty::Uint),
            ("series_parallel", Ty::Bool),
            ("perfect", Ty::Bool),
            ("anti_directed_free", Ty::Bool),
            ("blocking_free", Ty::Bool),
            ("transitive_triangle", Ty::OptObject),
            ("anti_directed_odd_cycle", Ty::OptObject),
            ("blocking_odd_cycle", Ty::OptObject),
            ("odd_hole", Ty::OptObject),
        ],
    )?;
    for key in [
        "transitive_triangle",
        "anti_directed_odd_cycle",
        "blocking_odd_cycle",
        "odd_hole",
    ] {
        witness(&v[key], &format!("{path}.{key}"))?;
    }
    Ok(())
}

fn forbidden(v: &Value, path: &str) -> Result<(), SchemaError> {
    fields(
        v,
        path,
        &[
            ("mode", Ty::Str),
            ("class", Ty::Str),
            ("in_class", Ty::Bool),
            ("witness", Ty::OptObject),
        ],
    )?;
    mode(&v["mode"], &format!("{path}.mode"))?;
    witness(&v["witness"], &format!("{path}.witness"))
}

fn partition_doc(v: &Value, path: &str) -> Result<(), SchemaError> {
    fields(
        v,
        path,
        &[
            ("digraph", Ty::Object),
            ("stable_set", Ty::Array),
            ("mode", Ty::Str),
            ("builder", Ty::Str),
            ("partition", Ty::OptObject),
            ("trace", Ty::OptObject),
        ],
    )?;
    digraph(&v["digraph"], &format!("{path}.digraph"))?;
    vertex_list(&v["stable_set"], &format!("{path}.stable_set"))?;
    mode(&v["mode"], &format!("{path}.mode"))?;
    if !v["partition"].is_null() {
        partition(&v["partition"], &format!("{path}.partition"))?;
    }
    if !v["trace"].is_null() {
        fields(
            &v["trace"],
            &format!("{path}.trace"),
            &[("steps", Ty::Array)],
        )?;
    }
    Ok(())
}

fn survey_report(v: &Value, path: &str) -> Result<(), SchemaError> {
    fields(
        v,
        path,
        &[
            ("n_max", Ty::Uint),
            ("mode", Ty::Str),
            ("class", Ty::Str),
            ("up_to_iso", Ty::Bool),
            ("seed", Ty::Uint),
            ("orders", Ty::Array),
            ("counterexamples", Ty::Array),
            ("generated", Ty::Uint),
        ],
    )?;
    mode(&v["mode"], &format!("{path}.mode"))?;
    for (p, order) in each(&v["orders"], &format!("{path}.orders")) {
        fields(
            order,
            &p,
            &[
                ("n", Ty::Uint),
                ("exhaustive", Ty::Bool),
                ("digraphs", Ty::Uint),
                ("in_class_diperfect", Ty::Uint),
                ("in_class_not_diperfect", Ty::Uint),
                ("out_of_class_diperfect", Ty::Uint),
                ("out_of_class_not_diperfect", Ty::Uint),
            ],
        )?;
    }
    for (p, c) in each(&v["counterexamples"], &format!("{path}.counterexamples")) {
        fields(
            c,
            &p,
            &[
                ("direction", Ty::Str),
                ("obstruction", Ty::OptObject),
                ("report", Ty::Object),
            ],
        )?;
        witness(&c["obstruction"], &format!("{p}.obstruction"))?;
        property_report(&c["report"], &format!("{p}.report"))?;
    }
    Ok(())
}

fn validation_report(v: &Value, path: &str) -> Result<(), SchemaError> {
    fields(
        v,
        path,
        &[
            ("class", Ty::Str),
            ("n", Ty::Uint),
            ("mode", Ty::Str),
            ("exhaustive", Ty::Bool),
            ("seed", Ty::OptUint),
            ("members", Ty::Uint),
            ("skipped", Ty::Uint),
            ("stable_sets", Ty::Uint),
            ("clique_cover_checks", Ty::Uint),
            ("hamilton_cycles", Ty::Uint),
            ("failures", Ty::Array),
        ],
    )?;
    mode(&v["mode"], &format!("{path}.mode"))?;
    for (p, f) in each(&v["failures"], &format!("{path}.failures")) {
        fields(
            f,
            &p,
            &[
                ("digraph", Ty::Object),
                ("stable_set", Ty::Array),
                ("error", Ty::Str),
            ],
        )?;
        digraph(&f["digraph"], &format!("{p}.digraph"))?;
    }
    Ok(())
}

/// Checks a parsed document against the schema of its kind.
pub fn validate(doc: &Value) -> Result<Kind, SchemaError> {
    fields(
        doc,
        "$",
        &[
            ("schema_version", Ty::Uint),
            ("kind", Ty::Str),
            ("data", Ty::Object),
        ],
    )?;
    if doc["schema_version"].as_u64() != Some(SCHEMA_VERSION) {
        return Err(fail(
            "$.schema_version",
            format!("expected {SCHEMA_VERSION}"),
        ));
    }
    let name = doc["kind"].as_str().expect("checked");
    let kind =
        Kind::from_name(name).ok_or_else(|| fail("$.kind", format!("unknown kind {name:?}")))?;
    let data = &doc["data"];
    match kind {
        Kind::Digraph => digraph(data, "$.data"),
        Kind::ClassReport => class_report(data, "$.data"),
        Kind::Forbidden => forbidden(data, "$.data"),
        Kind::Partition => partition_doc(data, "$.data"),
        Kind::PropertyReport => property_report(data, "$.data"),
        Kind::SurveyReport => survey_report(data, "$.data"),
        Kind::ValidationReport => validation_report(data, "$.data"),
    }?;
    Ok(kind)
}

/// Parses and validates a rendered document.
pub fn parse(text: &str) -> Result<(Kind, Value), SchemaError> {
    let value: Value = serde_json::from_str(text).map_err(|e| fail("$", e.to_string()))?;
    Ok((validate(&value)?, value))
}
