//! The triangle hypergraph: three contexts pairwise sharing one vertex.
//!
//! ```text
//!            b1
//!   blue   b2  b5   red
//!         b3    b6
//!       b4  b8 b9  b7
//!          green
//! ```
//!
//! With `b2, …, b6` decomposable in a faithful labeling, `b1` and `b7` are
//! forced to be decomposable while `b8` and `b9` are forced to be
//! indecomposable.

use serde::Serialize;
use thiserror::Error;

use super::{check_faithfulness, missing_ray, Hypergraph, Verdict};
use crate::completion::indecomposable_orthogonal_basis;
use crate::decompose::{factorize, is_decomposable};
use crate::linalg::{cross, det2, inner4, proportional, tensor2, Vec2, Vec4};
use crate::planes::{Plane, PlaneType};
use crate::scalar::{Field, FieldKind};

pub const TRIANGLE_IDS: [&str; 9] = ["b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9"];

pub const TRIANGLE_CONTEXTS: [[&str; 4]; 3] =
    [["b1", "b2", "b3", "b4"], ["b1", "b5", "b6", "b7"], ["b4", "b8", "b9", "b7"]];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("{0} is not a basis: its determinant vanishes")]
    BasisCondition(&'static str),
}

/// The all-decomposable labeling
///
/// ```text
/// b1 = s⊗t     b2 = s^×⊗v   b3 = s^×⊗v^×  b4 = s⊗t^×  b5 = u⊗t^×
/// b6 = u^×⊗t^× b7 = s^×⊗t   b8 = s^×⊗t^×  b9 = s⊗t
/// ```
///
/// which repeats `s⊗t` and so is not faithful.
pub fn triangle_representation<F: Field>(
    s: &Vec2<F>,
    t: &Vec2<F>,
    u: &Vec2<F>,
    v: &Vec2<F>,
    field: FieldKind,
) -> Result<Hypergraph<F>, TriangleError> {
    let (sx, tx, ux, vx) = (cross(s), cross(t), cross(u), cross(v));
    let conditions = [("{s,u}", s, u), ("{s^x,u}", &sx, u), ("{t,v}", t, v), ("{t^x,v}", &tx, v)];
    if let Some((name, ..)) = conditions.iter().find(|(_, x, y)| det2(x, y).is_zero()) {
        return Err(TriangleError::BasisCondition(name));
    }
    let labels = [
        tensor2(s, t),
        tensor2(&sx, v),
        tensor2(&sx, &vx),
        tensor2(s, &tx),
        tensor2(u, &tx),
        tensor2(&ux, &tx),
        tensor2(&sx, t),
        tensor2(&sx, &tx),
        tensor2(s, t),
    ];
    let vertices = TRIANGLE_IDS.iter().zip(labels).map(|(id, x)| (id.to_string(), Some(x))).collect();
    Ok(Hypergraph::new(field, vertices, &TRIANGLE_CONTEXTS).expect("ids are consistent"))
}

/// The labeling above with `b8, b9` replaced by an orthogonal pair of
/// indecomposable vectors from the same plane.
pub fn faithful_triangle<F: Field>(
    s: &Vec2<F>,
    t: &Vec2<F>,
    u: &Vec2<F>,
    v: &Vec2<F>,
    field: FieldKind,
) -> Result<Hypergraph<F>, TriangleError> {
    let mut h = triangle_representation(s, t, u, v, field)?;
    let b8 = h.label("b8").unwrap().clone();
    let b9 = h.label("b9").unwrap().clone();
    let (x, y) = indecomposable_orthogonal_basis(&b8, &b9).expect("the green plane is not of type (0,0)");
    h.set_label("b8", x).unwrap();
    h.set_label("b9", y).unwrap();
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Step {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Step { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub preconditions: Vec<Step>,
    pub steps: Vec<Step>,
    pub passed: bool,
}

/// Check the chain of consequences forced on a faithful triangle labeling
/// whose vertices `b2, …, b6` are decomposable.
pub fn triangle_obstruction_check<F: Field>(h: &Hypergraph<F>) -> ObstructionReport {
    let preconditions = obstruction_preconditions(h);
    if preconditions.iter().any(|s| !s.passed) {
        return ObstructionReport { preconditions, steps: Vec::new(), passed: false };
    }
    let b = |k: usize| h.label(TRIANGLE_IDS[k - 1]).unwrap();
    let field = h.field();
    let plane_type = |x: &Vec4<F>, y: &Vec4<F>| Plane::new(x.clone(), y.clone(), field).map(|p| p.classify());
    let type_step = |name: &str, x: &Vec4<F>, y: &Vec4<F>, want: PlaneType| match plane_type(x, y) {
        Ok(t) => Step::new(name, t == want, format!("type {t}")),
        Err(e) => Step::new(name, false, e.to_string()),
    };
    let nondegenerate = match field {
        FieldKind::Real => PlaneType::Indefinite,
        FieldKind::Complex => PlaneType::PositiveDefinite,
    };
    let mut steps = vec![
        type_step("span{b1,b7} is of type (0,0)", b(1), b(7), PlaneType::Null),
        type_step("span{b1,b4} is of type (0,0)", b(1), b(4), PlaneType::Null),
        type_step("span{b2,b3} is of type (0,0)", b(2), b(3), PlaneType::Null),
        type_step("span{b5,b6} is of type (0,0)", b(5), b(6), PlaneType::Null),
    ];
    let decomposable_ends = is_decomposable(b(1)) && is_decomposable(b(7));
    steps.push(Step::new("b1 and b7 are decomposable", decomposable_ends, ""));
    steps.push(match factorize(b(1)) {
        Ok(f) => {
            let (s1, t1) = (f.left.clone(), f.right.clone());
            let p = tensor2(&s1, &cross(&t1));
            let q = tensor2(&cross(&s1), &t1);
            let matched = (proportional(b(4), &p) && proportional(b(7), &q))
                || (proportional(b(4), &q) && proportional(b(7), &p));
            Step::new(
                "{b4,b7} are s1⊗t1^× and s1^×⊗t1 up to scale",
                matched,
                format!("b1 = {s1}⊗{t1}; candidates {p}, {q}"),
            )
        }
        Err(e) => Step::new("{b4,b7} are s1⊗t1^× and s1^×⊗t1 up to scale", false, e.to_string()),
    });
    steps.push(type_step("span{b4,b7} is non-degenerate", b(4), b(7), nondegenerate));
    steps.push(type_step("span{b8,b9} is non-degenerate", b(8), b(9), nondegenerate));
    steps.push(Step::new("b8 is indecomposable", !is_decomposable(b(8)), b(8).to_string()));
    steps.push(Step::new("b9 is indecomposable", !is_decomposable(b(9)), b(9).to_string()));
    let passed = steps.iter().all(|s| s.passed);
    ObstructionReport { preconditions, steps, passed }
}

fn obstruction_preconditions<F: Field>(h: &Hypergraph<F>) -> Vec<Step> {
    let mut pre = Vec::new();
    let missing: Vec<&str> = TRIANGLE_IDS.iter().copied().filter(|id| h.label(id).is_none()).collect();
    pre.push(Step::new("b1..b9 are present and labeled", missing.is_empty(), missing.join(",")));
    let has_context = |want: &[&str; 4]| {
        (0..h.contexts().len()).any(|c| {
            let ids = h.context_ids(c);
            want.iter().all(|w| ids.iter().any(|i| i == w))
        })
    };
    let contexts_ok = TRIANGLE_CONTEXTS.iter().all(has_context);
    pre.push(Step::new("triangle contexts are present", contexts_ok, ""));
    if !missing.is_empty() {
        return pre;
    }
    match check_faithfulness(h) {
        Ok(r) => {
            let detail = format!(
                "{} orthogonality violations, {} multiplicities",
                r.orthogonality_violations.len(),
                r.multiplicities.len()
            );
            pre.push(Step::new("labeling is faithful", r.verdict == Verdict::Faithful, detail));
        }
        Err(e) => pre.push(Step::new("labeling is faithful", false, e.to_string())),
    }
    let indecomposable: Vec<&str> =
        TRIANGLE_IDS[1..6].iter().copied().filter(|id| !is_decomposable(h.label(id).unwrap())).collect();
    pre.push(Step::new("b2..b6 are decomposable", indecomposable.is_empty(), indecomposable.join(",")));
    pre
}

/// Outcome of the exhaustive search for a faithful labeling with decomposable
/// `b8`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridSearch {
    pub bound: i64,
    /// Decomposable candidates `x⊗y` examined.
    pub candidates: usize,
    /// Candidates orthogonal to both `b4` and `b7`.
    pub orthogonal: usize,
    /// Candidates yielding a faithful labeling.
    pub faithful: usize,
}

/// Keep `b1, …, b7` of `h` and try every `b8 = x⊗y` with integer (real
/// field) or Gaussian-integer (complex field) components of magnitude at
/// most `bound`, completing `b9` as the unique remaining ray.
pub fn search_decomposable_b8<F: Field>(h: &Hypergraph<F>, bound: i64) -> GridSearch {
    let b4 = h.label("b4").expect("b4 labeled").clone();
    let b7 = h.label("b7").expect("b7 labeled").clone();
    let grid = grid_vectors::<F>(bound, h.field());
    let mut result = GridSearch { bound, candidates: 0, orthogonal: 0, faithful: 0 };
    for x in &grid {
        for y in &grid {
            let b8 = tensor2(x, y);
            result.candidates += 1;
            if !inner4(&b4, &b8).is_zero() || !inner4(&b7, &b8).is_zero() {
                continue;
            }
            result.orthogonal += 1;
            let Ok(b9) = missing_ray(&[&b4, &b7, &b8]) else { continue };
            let mut trial = h.clone();
            trial.set_label("b8", b8).unwrap();
            trial.set_label("b9", b9).unwrap();
            if check_faithfulness(&trial).is_ok_and(|r| r.verdict == Verdict::Faithful) {
                result.faithful += 1;
            }
        }
    }
    result
}

fn grid_vectors<F: Field>(bound: i64, field: FieldKind) -> Vec<Vec2<F>> {
    let range: Vec<i64> = (-bound..=bound).collect();
    let scalars: Vec<F> = match (field, F::imaginary_unit()) {
        (FieldKind::Complex, Some(i)) => range
            .iter()
            .flat_map(|&re| range.iter().map(move |&im| (re, im)))
            .map(|(re, im)| F::from_i64(re) + F::from_i64(im) * i.clone())
            .collect(),
        _ => range.iter().map(|&n| F::from_i64(n)).collect(),
    };
    let mut out = Vec::new();
    for a in &scalars {
        for b in &scalars {
            let v = Vec2([a.clone(), b.clone()]);
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational as Q;

    fn v2(x: [i64; 2]) -> Vec2<Q> {
        Vec2::from_ints(x)
    }

    #[test]
    fn raw_labeling_has_one_multiplicity() {
        let h = triangle_representation(&v2([1, 1]), &v2([1, 1]), &v2([1, 2]), &v2([1, 2]), FieldKind::Real).unwrap();
        assert!(TRIANGLE_IDS.iter().all(|id| is_decomposable(h.label(id).unwrap())));
        let r = check_faithfulness(&h).unwrap();
        assert_eq!(r.verdict, Verdict::Unfaithful);
        assert!(r.orthogonality_violations.is_empty());
        assert_eq!(r.multiplicities, vec![("b1".to_string(), "b9".to_string())]);
    }

    #[test]
    fn vanishing_basis_condition_is_named() {
        let e = triangle_representation(&v2([1, 0]), &v2([1, 0]), &v2([0, 1]), &v2([0, 1]), FieldKind::Real);
        assert_eq!(e.unwrap_err(), TriangleError::BasisCondition("{s^x,u}"));
    }

    #[test]
    fn raw_labeling_fails_preconditions() {
        let h = triangle_representation(&v2([1, 1]), &v2([1, 1]), &v2([1, 2]), &v2([1, 2]), FieldKind::Real).unwrap();
        let r = triangle_obstruction_check(&h);
        assert!(!r.passed);
        assert!(r.steps.is_empty());
        assert!(r.preconditions.iter().any(|s| s.name == "labeling is faithful" && !s.passed));
    }

    #[test]
    fn faithful_fixture_passes() {
        let h = faithful_triangle(&v2([1, 1]), &v2([1, 1]), &v2([1, 2]), &v2([1, 2]), FieldKind::Real).unwrap();
        let r = triangle_obstruction_check(&h);
        assert!(r.passed, "{r:#?}");
    }

    #[test]
    fn no_decomposable_b8() {
        let h = faithful_triangle(&v2([1, 1]), &v2([1, 1]), &v2([1, 2]), &v2([1, 2]), FieldKind::Real).unwrap();
        let r = search_decomposable_b8(&h, 2);
        assert!(r.orthogonal > 0);
        assert_eq!(r.faithful, 0);
    }
}
