//! JSON instance files.
//!
//! ```json
//! {
//!   "matroid": { "kind": "graphic", "vertex_count": 3 },
//!   "elements": [
//!     { "id": "e1", "area": ["(1,2]"], "weight": "11/10", "cost": "1", "endpoints": [2, 1] }
//!   ],
//!   "predictions": { "weights": { "e1": "3/2" }, "basis": ["e1"] }
//! }
//! ```
//!
//! `kind` is one of `graphic` (`vertex_count`, per-element `endpoints`),
//! `uniform` (`rank`), `partition` (`capacities`, per-element `block`) or
//! `explicit` (`bases`, a list of id lists). Rationals are written as strings
//! in canonical form; integers and decimal strings are accepted on input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matroid::{Backend, ElementId, ElementSet, Matroid};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::uncertainty::{ElementData, UncertainInstance, UncertaintyArea};

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum MatroidRecord {
    Graphic { vertex_count: usize },
    Uniform { rank: usize },
    Partition { capacities: Vec<usize> },
    Explicit { bases: Vec<Vec<String>> },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementRecord {
    id: String,
    area: Vec<String>,
    weight: Value,
    cost: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    endpoints: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    block: Option<usize>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PredictionRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<BTreeMap<String, Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRecord {
    matroid: MatroidRecord,
    elements: Vec<ElementRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    predictions: Option<PredictionRecord>,
}

/// Predictions shipped alongside an instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Predictions {
    pub weights: Option<BTreeMap<ElementId, Rational>>,
    pub basis: Option<ElementSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub instance: UncertainInstance,
    pub predictions: Option<Predictions>,
}

fn rational_field(v: &Value, field: &str) -> Result<Rational> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::Number(n) => {
            return Err(Error::field(
                field,
                format!("{n} is a JSON float; write it as a string such as \"{n}\""),
            ))
        }
        other => {
            return Err(Error::field(
                field,
                format!("expected a rational, got {other}"),
            ))
        }
    };
    parse_rational(&text).map_err(|e| Error::field(field, e.to_string()))
}

fn rational_value(v: &Rational) -> Value {
    Value::String(format_rational(v))
}

pub fn parse_instance(text: &str) -> Result<UncertainInstance> {
    Ok(parse_instance_file(text)?.instance)
}

pub fn parse_instance_file(text: &str) -> Result<InstanceFile> {
    let file: FileRecord =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("instance file: {e}")))?;
    let elements = &file.elements;
    let names: Vec<&str> = elements.iter().map(|r| r.id.as_str()).collect();
    let need = |i: usize, what: &str| {
        Error::field(
            format!("elements[{i}].{what}"),
            "required by the matroid kind",
        )
    };
    let matroid = match &file.matroid {
        MatroidRecord::Graphic { vertex_count } => {
            let edges = elements
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    r.endpoints
                        .map(|[u, v]| (r.id.clone(), u, v))
                        .ok_or_else(|| need(i, "endpoints"))
                })
                .collect::<Result<Vec<_>>>()?;
            Matroid::graphic(*vertex_count, edges)
        }
        MatroidRecord::Uniform { rank } => Matroid::uniform(names.iter().copied(), *rank),
        MatroidRecord::Partition { capacities } => {
            let items = elements
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    r.block
                        .map(|b| (r.id.clone(), b))
                        .ok_or_else(|| need(i, "block"))
                })
                .collect::<Result<Vec<_>>>()?;
            Matroid::partition(items, capacities.clone())
        }
        MatroidRecord::Explicit { bases } => Matroid::explicit(names.iter().copied(), bases),
    }
    .map_err(|e| Error::field("matroid", e.to_string()))?;

    let mut data = Vec::with_capacity(elements.len());
    for (i, r) in elements.iter().enumerate() {
        let at = |f: &str| format!("elements[{i}].{f}");
        let area = UncertaintyArea::parse_pieces(&r.area).map_err(|e| match e {
            Error::Unbounded(_) => Error::field(at("area"), e.to_string()),
            other => Error::field(at("area"), other.to_string()),
        })?;
        let weight = rational_field(&r.weight, &at("weight"))?;
        let cost = rational_field(&r.cost, &at("cost"))?;
        data.push((r.id.clone(), ElementData::new(area, weight, cost)));
    }
    let instance = UncertainInstance::new(matroid, data)?;

    let predictions = match &file.predictions {
        None => None,
        Some(p) => {
            let m = instance.matroid();
            let weights = match &p.weights {
                None => None,
                Some(map) => Some(
                    map.iter()
                        .map(|(k, v)| {
                            let field = format!("predictions.weights.{k}");
                            let e = m.id(k).map_err(|e| Error::field(&field, e.to_string()))?;
                            Ok((e, rational_field(v, &field)?))
                        })
                        .collect::<Result<BTreeMap<_, _>>>()?,
                ),
            };
            let basis = match &p.basis {
                None => None,
                Some(ids) => Some(
                    m.set_of(ids)
                        .map_err(|e| Error::field("predictions.basis", e.to_string()))?,
                ),
            };
            Some(Predictions { weights, basis })
        }
    };
    Ok(InstanceFile {
        instance,
        predictions,
    })
}

pub fn emit_instance(inst: &UncertainInstance) -> String {
    emit_instance_file(&InstanceFile {
        instance: inst.clone(),
        predictions: None,
    })
}

pub fn emit_instance_file(file: &InstanceFile) -> String {
    let inst = &file.instance;
    let m = inst.matroid();
    let matroid = match m.backend() {
        Backend::Graphic { vertex_count, .. } => MatroidRecord::Graphic {
            vertex_count: *vertex_count,
        },
        Backend::Uniform { rank } => MatroidRecord::Uniform { rank: *rank },
        Backend::Partition { capacity, .. } => MatroidRecord::Partition {
            capacities: capacity.clone(),
        },
        Backend::Explicit { bases } => MatroidRecord::Explicit {
            bases: bases.iter().map(|b| m.names_of(b)).collect(),
        },
    };
    let elements = inst
        .ground()
        .iter()
        .map(|&e| {
            let d = inst.data(e);
            let (endpoints, block) = match m.backend() {
                Backend::Graphic { endpoints, .. } => {
                    let (u, v) = endpoints[e.index()];
                    (Some([u, v]), None)
                }
                Backend::Partition { block, .. } => (None, Some(block[e.index()])),
                _ => (None, None),
            };
            ElementRecord {
                id: inst.name(e).to_string(),
                area: d.area.to_strings(),
                weight: rational_value(&d.weight),
                cost: rational_value(&d.cost),
                endpoints,
                block,
            }
        })
        .collect();
    let predictions = file.predictions.as_ref().map(|p| PredictionRecord {
        weights: p.weights.as_ref().map(|w| {
            w.iter()
                .map(|(&e, v)| (inst.name(e).to_string(), rational_value(v)))
                .collect()
        }),
        basis: p.basis.as_ref().map(|b| m.names_of(b)),
    });
    let record = FileRecord {
        matroid,
        elements,
        predictions,
    };
    let mut text = serde_json::to_string_pretty(&record).expect("records serialize");
    text.push('\n');
    text
}

/// Parses a JSON object mapping element ids to predicted weights.
pub fn parse_weight_predictions(
    inst: &UncertainInstance,
    text: &str,
) -> Result<BTreeMap<ElementId, Rational>> {
    let map: BTreeMap<String, Value> =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("prediction file: {e}")))?;
    map.iter()
        .map(|(k, v)| {
            let e = inst.matroid().id(k)?;
            Ok((e, rational_field(v, k)?))
        })
        .collect()
}
