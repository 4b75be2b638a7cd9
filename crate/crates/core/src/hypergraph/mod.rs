//! Orthogonality hypergraphs with partial vector labelings.
//!
//! Vertices are atoms; each context (hyperedge) holds four vertices whose
//! labels must form an orthogonal basis. Analysis looks at contexts with
//! missing labels and determines the type of the plane the missing vectors
//! must span.

mod format;
pub mod triangle;

use serde::Serialize;
use thiserror::Error;

use crate::completion::{complete_context, orthocomplement, Completion, CompletionPolicy, Refusal};
use crate::decompose::{decomposables_in_plane, DecomposableLocus};
use crate::linalg::{gramian, inner4, nullspace, proportional, Gramian2, Vec4};
use crate::planes::{tilde_plane, transfer_type, Plane, PlaneType};
use crate::scalar::{Field, FieldKind};

pub use format::{parse_hypergraph, to_json, FormatError};

pub const CONTEXT_SIZE: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex<F> {
    pub id: String,
    pub vector: Option<Vec4<F>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Hypergraph<F> {
    field: FieldKind,
    vertices: Vec<Vertex<F>>,
    /// Indices into `vertices`.
    contexts: Vec<[usize; CONTEXT_SIZE]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("vertex {0:?} is not labeled")]
    Unlabeled(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
}

impl<F: Field> Hypergraph<F> {
    /// Build from ids, optional labels and contexts given by id.
    pub fn new(
        field: FieldKind,
        vertices: Vec<(String, Option<Vec4<F>>)>,
        contexts: &[[&str; CONTEXT_SIZE]],
    ) -> Result<Self, HypergraphError> {
        let vertices: Vec<Vertex<F>> = vertices.into_iter().map(|(id, vector)| Vertex { id, vector }).collect();
        let lookup = |id: &str| {
            vertices.iter().position(|v| v.id == id).ok_or_else(|| HypergraphError::UnknownVertex(id.to_string()))
        };
        let contexts = contexts
            .iter()
            .map(|c| Ok([lookup(c[0])?, lookup(c[1])?, lookup(c[2])?, lookup(c[3])?]))
            .collect::<Result<_, HypergraphError>>()?;
        Ok(Hypergraph { field, vertices, contexts })
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn vertices(&self) -> &[Vertex<F>] {
        &self.vertices
    }

    pub fn contexts(&self) -> &[[usize; CONTEXT_SIZE]] {
        &self.contexts
    }

    pub fn context_ids(&self, c: usize) -> [String; CONTEXT_SIZE] {
        self.contexts[c].map(|i| self.vertices[i].id.clone())
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex<F>> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn label(&self, id: &str) -> Option<&Vec4<F>> {
        self.vertex(id).and_then(|v| v.vector.as_ref())
    }

    pub fn set_label(&mut self, id: &str, vector: Vec4<F>) -> Result<(), HypergraphError> {
        let v = self
            .vertices
            .iter_mut()
            .find(|v| v.id == id)
            .ok_or_else(|| HypergraphError::UnknownVertex(id.to_string()))?;
        v.vector = Some(vector);
        Ok(())
    }

    pub fn is_fully_labeled(&self) -> bool {
        self.vertices.iter().all(|v| v.vector.is_some())
    }

    /// Contexts with at least one unlabeled vertex.
    pub fn incomplete_contexts(&self) -> Vec<usize> {
        (0..self.contexts.len())
            .filter(|&c| self.contexts[c].iter().any(|&i| self.vertices[i].vector.is_none()))
            .collect()
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    /// The same hypergraph with every label mapped componentwise.
    pub fn map_labels<G: Field>(&self, f: impl Fn(&F) -> G) -> Hypergraph<G> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { id: v.id.clone(), vector: v.vector.as_ref().map(|x| x.map(&f)) })
            .collect();
        Hypergraph { field: self.field, vertices, contexts: self.contexts.clone() }
    }
}

/// Analysis of the plane spanned by the two missing vectors of a context.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MissingPlane<F: Field> {
    /// Gramian of the form on the two known vectors.
    pub known_gramian: Gramian2<F>,
    pub known_gramian_rank: usize,
    pub known_plane_type: PlaneType,
    /// Type of the orthocomplement, classified directly.
    pub missing_plane_type: PlaneType,
    /// The same type obtained from the tilde image of the known plane.
    pub transferred_type: PlaneType,
    pub perp_basis: (Vec4<F>, Vec4<F>),
    pub locus: DecomposableLocus<F>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AnalysisOutcome<F: Field> {
    MissingPlane(MissingPlane<F>),
    /// Three labels known: the fourth is determined up to scale.
    MissingRay { vector: Vec4<F> },
    Error { message: String },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContextAnalysis<F: Field> {
    pub context: usize,
    pub vertices: [String; CONTEXT_SIZE],
    pub known: Vec<String>,
    pub missing: Vec<String>,
    pub outcome: AnalysisOutcome<F>,
}

impl<F: Field> ContextAnalysis<F> {
    pub fn missing_plane(&self) -> Option<&MissingPlane<F>> {
        match &self.outcome {
            AnalysisOutcome::MissingPlane(m) => Some(m),
            _ => None,
        }
    }
}

/// Analyze every incomplete context.
pub fn analyze_contexts<F: Field>(h: &Hypergraph<F>) -> Vec<ContextAnalysis<F>> {
    h.incomplete_contexts().into_iter().map(|c| analyze_context(h, c)).collect()
}

fn analyze_context<F: Field>(h: &Hypergraph<F>, c: usize) -> ContextAnalysis<F> {
    let members = h.contexts[c];
    let (known, missing): (Vec<usize>, Vec<usize>) = members.iter().partition(|&&i| h.vertices[i].vector.is_some());
    let labels: Vec<&Vec4<F>> = known.iter().map(|&i| h.vertices[i].vector.as_ref().unwrap()).collect();
    let outcome = match labels.len() {
        2 => missing_plane(labels[0], labels[1], h.field)
            .map(AnalysisOutcome::MissingPlane)
            .unwrap_or_else(|message| AnalysisOutcome::Error { message }),
        3 => missing_ray(&labels)
            .map(|vector| AnalysisOutcome::MissingRay { vector })
            .unwrap_or_else(|message| AnalysisOutcome::Error { message }),
        n => AnalysisOutcome::Error { message: format!("{n} labeled vertices; analysis needs two or three") },
    };
    let ids = |v: &[usize]| v.iter().map(|&i| h.vertices[i].id.clone()).collect();
    ContextAnalysis { context: c, vertices: h.context_ids(c), known: ids(&known), missing: ids(&missing), outcome }
}

fn missing_plane<F: Field>(e1: &Vec4<F>, e2: &Vec4<F>, field: FieldKind) -> Result<MissingPlane<F>, String> {
    let ip = inner4(e1, e2);
    if !ip.is_zero_scaled(e1.norm_sqr_f64().max(e2.norm_sqr_f64())) {
        return Err(format!("known vectors are not orthogonal: <e1|e2> = {ip}"));
    }
    let known = Plane::new(e1.clone(), e2.clone(), field).map_err(|e| e.to_string())?;
    let (a, b) = orthocomplement(e1, e2).map_err(|e| e.to_string())?;
    let perp = Plane::new(a.clone(), b.clone(), field).map_err(|e| e.to_string())?;
    let locus = decomposables_in_plane(&a, &b, field).map_err(|e| e.to_string())?;
    let known_gramian = gramian(e1, e2);
    Ok(MissingPlane {
        known_gramian_rank: known_gramian.rank(),
        known_gramian,
        known_plane_type: known.classify(),
        missing_plane_type: perp.classify(),
        transferred_type: transfer_type(tilde_plane(&known).classify(), field),
        perp_basis: (a, b),
        locus,
    })
}

pub(crate) fn missing_ray<F: Field>(labels: &[&Vec4<F>]) -> Result<Vec4<F>, String> {
    let rows: Vec<Vec<F>> = labels.iter().map(|v| v.conj().0.to_vec()).collect();
    let ns = nullspace(&rows, 4);
    match ns.as_slice() {
        [x] => Ok(Vec4([x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()])),
        _ => Err("known vectors are linearly dependent".into()),
    }
}

/// A policy that could not be honored in one context.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContextRefusal {
    pub context: usize,
    pub refusal: Refusal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContextFailure {
    pub context: usize,
    pub message: String,
}

/// Result of [`complete_labeling`].
#[derive(Clone, Debug, PartialEq)]
pub struct LabelingOutcome<F: Field> {
    pub hypergraph: Hypergraph<F>,
    /// Ids of the vertices labeled by the completion.
    pub supplied: Vec<String>,
    pub refusals: Vec<ContextRefusal>,
    pub failures: Vec<ContextFailure>,
    /// Present when the result is fully labeled.
    pub faithfulness: Option<FaithfulnessReport>,
}

/// Label the missing vertices of every incomplete context, in context order.
pub fn complete_labeling<F: Field>(h: &Hypergraph<F>, policy: CompletionPolicy) -> LabelingOutcome<F> {
    let mut out = h.clone();
    let mut supplied = Vec::new();
    let mut refusals = Vec::new();
    let mut failures = Vec::new();
    for c in h.incomplete_contexts() {
        let members = out.contexts[c];
        let (known, missing): (Vec<usize>, Vec<usize>) =
            members.iter().partition(|&&i| out.vertices[i].vector.is_some());
        let labels: Vec<Vec4<F>> = known.iter().map(|&i| out.vertices[i].vector.clone().unwrap()).collect();
        let fail = |message: String| ContextFailure { context: c, message };
        match labels.len() {
            2 => match complete_context(&labels[0], &labels[1], out.field, policy) {
                Ok(Completion::Completed(ctx)) => {
                    for (k, &i) in missing.iter().enumerate() {
                        out.vertices[i].vector = Some(ctx.vectors[2 + k].clone());
                        supplied.push(out.vertices[i].id.clone());
                    }
                }
                Ok(Completion::Refused(refusal)) => refusals.push(ContextRefusal { context: c, refusal }),
                Err(e) => failures.push(fail(e.to_string())),
            },
            3 => {
                let refs: Vec<&Vec4<F>> = labels.iter().collect();
                match missing_ray(&refs) {
                    Ok(v) => {
                        out.vertices[missing[0]].vector = Some(v);
                        supplied.push(out.vertices[missing[0]].id.clone());
                    }
                    Err(e) => failures.push(fail(e)),
                }
            }
            n => failures.push(fail(format!("{n} labeled vertices; completion needs two or three"))),
        }
    }
    let faithfulness = check_faithfulness(&out).ok();
    LabelingOutcome { hypergraph: out, supplied, refusals, failures, faithfulness }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityViolation {
    pub context: usize,
    pub pair: (String, String),
    pub inner_product: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Faithful,
    Unfaithful,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulnessReport {
    pub orthogonality_violations: Vec<OrthogonalityViolation>,
    /// Pairs of distinct vertices with proportional labels.
    pub multiplicities: Vec<(String, String)>,
    pub verdict: Verdict,
}

/// Check that adjacent vertices carry orthogonal labels and distinct
/// vertices carry non-proportional ones.
pub fn check_faithfulness<F: Field>(h: &Hypergraph<F>) -> Result<FaithfulnessReport, HypergraphError> {
    let labels = h
        .vertices
        .iter()
        .map(|v| v.vector.as_ref().ok_or_else(|| HypergraphError::Unlabeled(v.id.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut orthogonality_violations = Vec::new();
    for (c, members) in h.contexts.iter().enumerate() {
        for x in 0..CONTEXT_SIZE {
            for y in x + 1..CONTEXT_SIZE {
                let (i, j) = (members[x], members[y]);
                let ip = inner4(labels[i], labels[j]);
                if !ip.is_zero_scaled(labels[i].norm_sqr_f64().max(labels[j].norm_sqr_f64())) {
                    orthogonality_violations.push(OrthogonalityViolation {
                        context: c,
                        pair: (h.vertices[i].id.clone(), h.vertices[j].id.clone()),
                        inner_product: ip.to_string(),
                    });
                }
            }
        }
    }
    let mut multiplicities = Vec::new();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if proportional(labels[i], labels[j]) {
                multiplicities.push((h.vertices[i].id.clone(), h.vertices[j].id.clone()));
            }
        }
    }
    let verdict = if orthogonality_violations.is_empty() && multiplicities.is_empty() {
        Verdict::Faithful
    } else {
        Verdict::Unfaithful
    };
    Ok(FaithfulnessReport { orthogonality_violations, multiplicities, verdict })
}
