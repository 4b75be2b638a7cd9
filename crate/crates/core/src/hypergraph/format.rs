//! JSON exchange format.
//!
//! ```json
//! {
//!   "field": "complex",
//!   "vertices": [{"id": "psi", "vector": "(i,3,3,5)"}, {"id": "2"}],
//!   "contexts": [["vd", "psi", "2", "3"]]
//! }
//! ```

use std::collections::{HashMap, HashSet};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Hypergraph, Vertex, CONTEXT_SIZE};
use crate::linalg::Vec4;
use crate::scalar::{Field, FieldKind, LiteralError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{path}: {source}")]
    Literal { path: String, source: LiteralError },
    #[error("{path}: vector of vertex {id:?} is zero")]
    ZeroVector { path: String, id: String },
    #[error("{path}: vector of vertex {id:?} is not real but the field is real")]
    NotReal { path: String, id: String },
    #[error("{path}: duplicate vertex id {id:?}")]
    DuplicateId { path: String, id: String },
    #[error("{path}: context has {size} vertices, expected 4")]
    ContextSize { path: String, size: usize },
    #[error("{path}: vertex {id:?} appears twice in the context")]
    DuplicateInContext { path: String, id: String },
    #[error("{path}: unknown vertex {id:?}")]
    UnknownVertex { path: String, id: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    field: FieldKind,
    vertices: Vec<RawVertex>,
    #[serde(default)]
    contexts: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vector: Option<String>,
}

pub fn parse_hypergraph<F>(text: &str) -> Result<Hypergraph<F>, FormatError>
where
    F: Field + FromStr<Err = LiteralError>,
{
    let raw: RawDocument = serde_json::from_str(text)
        .map_err(|e| FormatError::Json { line: e.line(), column: e.column(), message: e.to_string() })?;
    let mut vertices = Vec::with_capacity(raw.vertices.len());
    let mut index = HashMap::new();
    for (i, v) in raw.vertices.into_iter().enumerate() {
        let path = format!("vertices[{i}]");
        if index.insert(v.id.clone(), i).is_some() {
            return Err(FormatError::DuplicateId { path: format!("{path}.id"), id: v.id });
        }
        let vector = match v.vector {
            None => None,
            Some(lit) => {
                let path = format!("{path}.vector");
                let x: Vec4<F> = lit.parse().map_err(|source| FormatError::Literal { path: path.clone(), source })?;
                if x.is_zero() {
                    return Err(FormatError::ZeroVector { path, id: v.id });
                }
                if raw.field == FieldKind::Real && !x.is_real() {
                    return Err(FormatError::NotReal { path, id: v.id });
                }
                Some(x)
            }
        };
        vertices.push(Vertex { id: v.id, vector });
    }
    let mut contexts = Vec::with_capacity(raw.contexts.len());
    for (c, ids) in raw.contexts.iter().enumerate() {
        let path = format!("contexts[{c}]");
        if ids.len() != CONTEXT_SIZE {
            return Err(FormatError::ContextSize { path, size: ids.len() });
        }
        let mut seen = HashSet::new();
        let mut members = [0; CONTEXT_SIZE];
        for (k, id) in ids.iter().enumerate() {
            let path = format!("{path}[{k}]");
            if !seen.insert(id) {
                return Err(FormatError::DuplicateInContext { path, id: id.clone() });
            }
            members[k] = *index.get(id).ok_or_else(|| FormatError::UnknownVertex { path, id: id.clone() })?;
        }
        contexts.push(members);
    }
    Ok(Hypergraph { field: raw.field, vertices, contexts })
}

/// Canonical JSON form; parsing it back yields an equal hypergraph.
pub fn to_json<F: Field>(h: &Hypergraph<F>) -> String {
    let raw = RawDocument {
        field: h.field,
        vertices: h
            .vertices
            .iter()
            .map(|v| RawVertex { id: v.id.clone(), vector: v.vector.as_ref().map(ToString::to_string) })
            .collect(),
        contexts: h.contexts.iter().map(|c| c.iter().map(|&i| h.vertices[i].id.clone()).collect()).collect(),
    };
    serde_json::to_string_pretty(&raw).expect("plain data always serializes")
}
