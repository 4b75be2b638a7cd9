//! Orthogonal complements and completion of two orthogonal vectors to a full
//! orthogonal basis (a context) under a decomposability policy.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::decompose::{decomposables_in_plane, APPROXIMATE_RAY_BOUND, is_decomposable, DecomposableLocus, Ray};
use crate::linalg::{cross, det2, inner4, nullspace, tensor2, Vec2, Vec4};
use crate::planes::{Plane, PlaneError, PlaneType};
use crate::scalar::{Field, FieldKind, FloatScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("input vectors are linearly dependent")]
    Dependent,
    #[error("input vector {0} is zero")]
    ZeroVector(usize),
    #[error("input vectors are not orthogonal: <e1|e2> = {0}")]
    NotOrthogonal(String),
    #[error("{0}")]
    Plane(#[from] PlaneError),
    #[error("det({0}) vanishes, so {{{0}}} is not a basis")]
    DegenerateBasis(&'static str),
}

/// Two vectors spanning `{y : ⟨e1|y⟩ = ⟨e2|y⟩ = 0}`, mutually orthogonal.
pub fn orthocomplement<F: Field>(e1: &Vec4<F>, e2: &Vec4<F>) -> Result<(Vec4<F>, Vec4<F>), CompletionError> {
    let rows = vec![e1.conj().0.to_vec(), e2.conj().0.to_vec()];
    let ns = nullspace(&rows, 4);
    if ns.len() != 2 {
        return Err(CompletionError::Dependent);
    }
    let to_vec4 = |v: &Vec<F>| Vec4([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]);
    let (a, b) = (to_vec4(&ns[0]), to_vec4(&ns[1]));
    let b = orthogonalize_against(&b, &a);
    Ok((a, b))
}

/// `y - (⟨x|y⟩/⟨x|x⟩) x`.
fn orthogonalize_against<F: Field>(y: &Vec4<F>, x: &Vec4<F>) -> Vec4<F> {
    let c = inner4(x, y) / inner4(x, x);
    y.add_scaled(&-c, x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ContextMode {
    /// Unnormalized vectors; only orthogonality is meaningful.
    ExactProjective,
    /// Unit vectors in floating point.
    FloatNormalized,
}

/// Orthogonal basis of the four-dimensional space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Context<F: Field> {
    pub vectors: [Vec4<F>; 4],
    pub mode: ContextMode,
}

impl<F: Field> Context<F> {
    pub fn projective(vectors: [Vec4<F>; 4]) -> Self {
        Context { vectors, mode: ContextMode::ExactProjective }
    }

    /// Unit-vector float copy with tolerance `eps`.
    pub fn normalized(&self, eps: f64) -> Context<FloatScalar> {
        let vectors = self.vectors.clone().map(|v| v.to_float(eps).normalized());
        Context { vectors, mode: ContextMode::FloatNormalized }
    }
}

/// Result of [`verify_context`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContextReport<F: Field> {
    /// `gram[i][j] = ⟨v_i|v_j⟩`.
    pub gram: Vec<Vec<F>>,
    /// Index pairs `(i, j)`, `i < j`, with `⟨v_i|v_j⟩ ≠ 0`.
    pub violations: Vec<(usize, usize)>,
    /// Indices of zero vectors.
    pub zero_vectors: Vec<usize>,
    /// `|det U|` with the vectors as columns; float mode only.
    pub det_abs: Option<f64>,
    /// `Tr(U U†) / 4`; float mode only.
    pub quarter_trace: Option<f64>,
    pub passed: bool,
}

pub fn verify_context<F: Field>(c: &Context<F>) -> ContextReport<F> {
    let v = &c.vectors;
    let gram: Vec<Vec<F>> = (0..4).map(|i| (0..4).map(|j| inner4(&v[i], &v[j])).collect()).collect();
    let scale = v.iter().map(Vec4::norm_sqr_f64).fold(0.0, f64::max);
    let violations: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .filter(|&(i, j)| !gram[i][j].is_zero_scaled(scale))
        .collect();
    let zero_vectors: Vec<usize> = (0..4).filter(|&i| v[i].is_zero()).collect();
    let mut passed = violations.is_empty() && zero_vectors.is_empty();
    let (mut det_abs, mut quarter_trace) = (None, None);
    if c.mode == ContextMode::FloatNormalized {
        let eps = v.iter().flat_map(|x| x.0.iter().filter_map(F::tolerance)).fold(0.0, f64::max);
        let cols = v.clone().map(|x| x.to_complex());
        let d = complex_det(cols).norm();
        let t = cols.iter().flatten().map(Complex64::norm_sqr).sum::<f64>() / 4.0;
        passed &= (d - 1.0).abs() <= eps && (t - 1.0).abs() <= eps;
        det_abs = Some(d);
        quarter_trace = Some(t);
    }
    ContextReport { gram, violations, zero_vectors, det_abs, quarter_trace, passed }
}

/// Determinant by elimination with partial pivoting. Row/column order does
/// not affect the magnitude.
fn complex_det(mut m: [[Complex64; 4]; 4]) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..4 {
        let p = (col..4).max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm())).unwrap();
        if m[p][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= m[col][col];
        for i in col + 1..4 {
            let f = m[i][col] / m[col][col];
            for j in col..4 {
                let sub = f * m[col][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompletionPolicy {
    Any,
    DecomposablePair,
    IndecomposablePair,
    /// One decomposable and one indecomposable vector.
    MixedPair,
}

impl CompletionPolicy {
    pub fn name(self) -> &'static str {
        match self {
            CompletionPolicy::Any => "any",
            CompletionPolicy::DecomposablePair => "decomposable",
            CompletionPolicy::IndecomposablePair => "indecomposable",
            CompletionPolicy::MixedPair => "mixed",
        }
    }
}

impl fmt::Display for CompletionPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CompletionPolicy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            CompletionPolicy::Any,
            CompletionPolicy::DecomposablePair,
            CompletionPolicy::IndecomposablePair,
            CompletionPolicy::MixedPair,
        ]
        .into_iter()
        .find(|p| p.name() == s)
        .ok_or_else(|| format!("unknown policy {s:?}; expected any, decomposable, indecomposable or mixed"))
    }
}

impl Serialize for CompletionPolicy {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Why a policy could not be honored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refusal {
    pub policy: CompletionPolicy,
    pub perp_type: PlaneType,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Completion<F: Field> {
    Completed(Context<F>),
    Refused(Refusal),
}

impl<F: Field> Completion<F> {
    pub fn context(&self) -> Option<&Context<F>> {
        match self {
            Completion::Completed(c) => Some(c),
            Completion::Refused(_) => None,
        }
    }

    pub fn refusal(&self) -> Option<&Refusal> {
        match self {
            Completion::Completed(_) => None,
            Completion::Refused(r) => Some(r),
        }
    }
}

/// Orthogonal basis of `span{a, b}` (with `⟨a|b⟩ = 0`) consisting of two
/// indecomposable vectors, or `None` if the plane has no such basis within
/// the sweep.
///
/// Tries `u = a + t b`, `v = t⟨b|b⟩ a - ⟨a|a⟩ b` for `t = 0, …, 5`. A plane
/// that is not of type `(0,0)` holds at most two decomposable rays, and each
/// can spoil at most one `u` and one `v`, so six candidates suffice.
pub fn indecomposable_orthogonal_basis<F: Field>(a: &Vec4<F>, b: &Vec4<F>) -> Option<(Vec4<F>, Vec4<F>)> {
    let (aa, bb) = (inner4(a, a), inner4(b, b));
    (0..=5).find_map(|t| {
        let t = F::from_i64(t);
        let u = a.add_scaled(&t, b);
        let v = a.scale(&(t.conj() * bb.clone())) - b.scale(&aa);
        (!is_decomposable(&u) && !is_decomposable(&v)).then_some((u, v))
    })
}

/// Complete the orthogonal pair `e1, e2` to a context honoring `policy`.
///
/// Feasibility by orthocomplement type:
/// - decomposable pair: type `(0,0)`, or two exactly computable rays that
///   are orthogonal;
/// - indecomposable pair: any type but `(0,0)`;
/// - mixed pair: types `(1,0)` and `(-1,0)`.
pub fn complete_context<F: Field>(
    e1: &Vec4<F>,
    e2: &Vec4<F>,
    field: FieldKind,
    policy: CompletionPolicy,
) -> Result<Completion<F>, CompletionError> {
    for (i, e) in [e1, e2].into_iter().enumerate() {
        if e.is_zero() {
            return Err(CompletionError::ZeroVector(i + 1));
        }
    }
    let ip = inner4(e1, e2);
    if !ip.is_zero_scaled(e1.norm_sqr_f64().max(e2.norm_sqr_f64())) {
        return Err(CompletionError::NotOrthogonal(ip.to_string()));
    }
    let (a, b) = orthocomplement(e1, e2)?;
    let perp = Plane::new(a.clone(), b.clone(), field)?;
    let perp_type = perp.classify();
    let refuse = |reason: &str| {
        Ok(Completion::Refused(Refusal { policy, perp_type, reason: reason.to_string() }))
    };
    let done = |x: Vec4<F>, y: Vec4<F>| Ok(Completion::Completed(Context::projective([e1.clone(), e2.clone(), x, y])));
    match policy {
        CompletionPolicy::Any => done(a, b),
        CompletionPolicy::IndecomposablePair => {
            if perp_type == PlaneType::Null {
                return refuse("every vector of the orthocomplement is decomposable");
            }
            match indecomposable_orthogonal_basis(&a, &b) {
                Some((u, v)) => done(u, v),
                None => refuse("no indecomposable orthogonal pair found"),
            }
        }
        CompletionPolicy::DecomposablePair => {
            if perp_type == PlaneType::Null {
                return done(a, b);
            }
            match decomposables_in_plane(&a, &b, field).map_err(|_| CompletionError::Dependent)? {
                DecomposableLocus::TwoRays(Ray::Exact(p), Ray::Exact(m)) => {
                    if inner4(&p, &m).is_zero_scaled(p.norm_sqr_f64().max(m.norm_sqr_f64())) {
                        done(p, m)
                    } else {
                        refuse("decomposable rays not orthogonal")
                    }
                }
                DecomposableLocus::TwoRays(p, m) => {
                    let overlap = inner4(&p.to_float().normalized(), &m.to_float().normalized()).to_complex().norm();
                    if overlap > APPROXIMATE_RAY_BOUND.sqrt() {
                        refuse("decomposable rays not orthogonal")
                    } else {
                        refuse("decomposable rays are not representable exactly")
                    }
                }
                _ => refuse("orthocomplement contains fewer than two decomposable rays"),
            }
        }
        CompletionPolicy::MixedPair => {
            if !matches!(perp_type, PlaneType::PositiveDegenerate | PlaneType::NegativeDegenerate) {
                return refuse("a mixed pair requires an orthocomplement of type (1,0) or (-1,0)");
            }
            let DecomposableLocus::OneRay(c) = decomposables_in_plane(&a, &b, field).map_err(|_| CompletionError::Dependent)?
            else {
                unreachable!("degenerate non-null planes have exactly one decomposable ray")
            };
            let x = if crate::linalg::proportional(&c, &a) { &b } else { &a };
            let d = orthogonalize_against(x, &c);
            done(c, d)
        }
    }
}

/// The decomposable basis `{a, b} = {u^×⊗t^×, s^×⊗v^×}` of the
/// orthocomplement of `span{s⊗t, u⊗v}`.
pub fn tensor_complete<F: Field>(
    s: &Vec2<F>,
    t: &Vec2<F>,
    u: &Vec2<F>,
    v: &Vec2<F>,
) -> Result<(Vec4<F>, Vec4<F>), CompletionError> {
    if det2(s, u).is_zero() {
        return Err(CompletionError::DegenerateBasis("s,u"));
    }
    if det2(t, v).is_zero() {
        return Err(CompletionError::DegenerateBasis("t,v"));
    }
    Ok((tensor2(&cross(u), &cross(t)), tensor2(&cross(s), &cross(v))))
}

/// One of the six planes spanned by pairs of tetrahedron vertices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TetrahedronPlane<F: Field> {
    pub labels: (&'static str, &'static str),
    pub vectors: (Vec4<F>, Vec4<F>),
    pub plane_type: PlaneType,
}

/// Types of the six planes spanned by pairs of
/// `{s^×⊗t^×, s^×⊗v^×, u^×⊗t^×, u^×⊗v^×}`.
pub fn tetrahedron_planes<F: Field>(
    s: &Vec2<F>,
    t: &Vec2<F>,
    u: &Vec2<F>,
    v: &Vec2<F>,
    field: FieldKind,
) -> Result<Vec<TetrahedronPlane<F>>, CompletionError> {
    let (a, b) = tensor_complete(s, t, u, v)?;
    let vertices = [
        ("sx*tx", tensor2(&cross(s), &cross(t))),
        ("b=sx*vx", b),
        ("a=ux*tx", a),
        ("ux*vx", tensor2(&cross(u), &cross(v))),
    ];
    let mut planes = Vec::with_capacity(6);
    for i in 0..4 {
        for j in i + 1..4 {
            let (x, y) = (vertices[i].1.clone(), vertices[j].1.clone());
            let plane_type = Plane::new(x.clone(), y.clone(), field)?.classify();
            planes.push(TetrahedronPlane { labels: (vertices[i].0, vertices[j].0), vectors: (x, y), plane_type });
        }
    }
    Ok(planes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Guarantee {
    AllFactorizable,
    AllEntangled,
    Mixed,
}

/// Random sampling of unit vectors in the orthocomplement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplingCheck {
    pub seed: u64,
    pub samples: usize,
    pub decomposable: usize,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SteeringReport {
    pub source_type: PlaneType,
    pub perp_type: PlaneType,
    pub guarantee: Guarantee,
    pub sampling: SamplingCheck,
}

pub const STEERING_SAMPLES: usize = 100;

/// Whether measuring onto `span{e1, e2}` and failing leaves the system in a
/// product state always, never, or sometimes.
pub fn steering_report<F: Field>(e1: &Vec4<F>, e2: &Vec4<F>, field: FieldKind, seed: u64) -> Result<SteeringReport, CompletionError> {
    let source_type = Plane::new(e1.clone(), e2.clone(), field)?.classify();
    let (a, b) = orthocomplement(e1, e2)?;
    let perp_type = Plane::new(a.clone(), b.clone(), field)?.classify();
    let guarantee = match (perp_type, field) {
        (PlaneType::Null, _) => Guarantee::AllFactorizable,
        (PlaneType::PositiveDefinite | PlaneType::NegativeDefinite, FieldKind::Real) => Guarantee::AllEntangled,
        _ => Guarantee::Mixed,
    };
    let sampling = sample_perp(&a, &b, field, guarantee, seed);
    Ok(SteeringReport { source_type, perp_type, guarantee, sampling })
}

fn sample_perp<F: Field>(a: &Vec4<F>, b: &Vec4<F>, field: FieldKind, guarantee: Guarantee, seed: u64) -> SamplingCheck {
    const SAMPLE_EPS: f64 = 1e-9;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (af, bf) = (a.to_complex(), b.to_complex());
    let coefficient = |rng: &mut ChaCha8Rng| match field {
        FieldKind::Real => Complex64::new(rng.gen_range(-1.0..1.0), 0.0),
        FieldKind::Complex => Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
    };
    let mut decomposable = 0;
    for _ in 0..STEERING_SAMPLES {
        let (x, y) = (coefficient(&mut rng), coefficient(&mut rng));
        let z: [Complex64; 4] = std::array::from_fn(|i| x * af[i] + y * bf[i]);
        let norm = z.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let z = Vec4(z.map(|c| FloatScalar::from_complex(c / norm, SAMPLE_EPS)));
        if is_decomposable(&z) {
            decomposable += 1;
        }
    }
    let consistent = match guarantee {
        Guarantee::AllFactorizable => decomposable == STEERING_SAMPLES,
        Guarantee::AllEntangled => decomposable == 0,
        Guarantee::Mixed => decomposable < STEERING_SAMPLES,
    };
    SamplingCheck { seed, samples: STEERING_SAMPLES, decomposable, consistent }
}
