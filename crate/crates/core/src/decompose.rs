//! Decomposability tests, tensor factorization, and the decomposable rays
//! inside a plane.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{bilinear, gramian, independent, Gramian2, Vec2, Vec4};
use crate::scalar::{Field, FieldKind, FloatScalar, Sign, DEFAULT_EPS};

/// Largest accepted `|(c|c)| / ‖c‖²` for rays computed in floating point.
pub const APPROXIMATE_RAY_BOUND: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("cannot factorize the zero vector")]
    Zero,
    #[error("vector is indecomposable: z1*z4 - z2*z3 = {residual}")]
    Indecomposable { residual: String },
    #[error("plane basis vectors are linearly dependent")]
    Dependent,
}

/// `z1 z4 - z2 z3`, which vanishes exactly on decomposable vectors.
pub fn residual<F: Field>(z: &Vec4<F>) -> F {
    let [z1, z2, z3, z4] = &z.0;
    z1.clone() * z4.clone() - z2.clone() * z3.clone()
}

/// Exact test, or `|z1 z4 - z2 z3| ≤ eps·‖z‖²` for float vectors.
pub fn is_decomposable<F: Field>(z: &Vec4<F>) -> bool {
    residual(z).is_zero_scaled(z.norm_sqr_f64())
}

/// `scale · (left ⊗ right)` reproduces the factorized vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Factorization<F: Field> {
    pub left: Vec2<F>,
    pub right: Vec2<F>,
    pub scale: F,
}

impl<F: Field> Factorization<F> {
    pub fn product(&self) -> Vec4<F> {
        crate::linalg::tensor2(&self.left, &self.right).scale(&self.scale)
    }
}

/// Split a decomposable vector into a tensor product.
///
/// Gauge: when `(z1, z2) ≠ 0` the right factor is `(z1, z2)` and the left
/// factor is `(1, z_{3+p}/z_{1+p})` for the first non-zero index `p` of that
/// row; otherwise left is `(0, 1)` and right is `(z3, z4)`. The scale is
/// always 1.
pub fn factorize<F: Field>(z: &Vec4<F>) -> Result<Factorization<F>, DecomposeError> {
    if z.is_zero() {
        return Err(DecomposeError::Zero);
    }
    if !is_decomposable(z) {
        return Err(DecomposeError::Indecomposable { residual: residual(z).to_string() });
    }
    let [z1, z2, z3, z4] = z.0.clone();
    let (left, right) = if z1.is_zero() && z2.is_zero() {
        (Vec2::from_ints([0, 1]), Vec2([z3, z4]))
    } else {
        let ratio = if !z1.is_zero() { z3 / z1.clone() } else { z4 / z2.clone() };
        (Vec2([F::one(), ratio]), Vec2([z1, z2]))
    };
    Ok(Factorization { left, right, scale: F::one() })
}

/// A decomposable ray, exact when the quadratic's roots lie in the field.
#[derive(Clone, Debug, PartialEq)]
pub enum Ray<F> {
    Exact(Vec4<F>),
    /// Float representative; `residual` is `|(c|c)| / ‖c‖²`.
    Approximate { vector: Vec4<FloatScalar>, residual: f64 },
}

impl<F: Field> Ray<F> {
    pub fn exact(&self) -> Option<&Vec4<F>> {
        match self {
            Ray::Exact(v) => Some(v),
            Ray::Approximate { .. } => None,
        }
    }

    pub fn to_float(&self) -> Vec4<FloatScalar> {
        match self {
            Ray::Exact(v) => v.to_float(DEFAULT_EPS),
            Ray::Approximate { vector, .. } => vector.clone(),
        }
    }
}

impl<F: Field> Serialize for Ray<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Ray::Exact(v) => {
                let mut s = serializer.serialize_struct("Ray", 2)?;
                s.serialize_field("vector", v)?;
                s.serialize_field("exact", &true)?;
                s.end()
            }
            Ray::Approximate { vector, residual } => {
                let mut s = serializer.serialize_struct("Ray", 3)?;
                s.serialize_field("vector", vector)?;
                s.serialize_field("exact", &false)?;
                s.serialize_field("residual", residual)?;
                s.end()
            }
        }
    }
}

/// Decomposable rays of a plane.
#[derive(Clone, Debug, PartialEq)]
pub enum DecomposableLocus<F> {
    /// Every vector of the plane is decomposable.
    All,
    TwoRays(Ray<F>, Ray<F>),
    OneRay(Vec4<F>),
    None,
}

impl<F: Field> DecomposableLocus<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            DecomposableLocus::All => "All",
            DecomposableLocus::TwoRays(..) => "TwoRays",
            DecomposableLocus::OneRay(_) => "OneRay",
            DecomposableLocus::None => "None",
        }
    }

    pub fn rays(&self) -> Vec<Ray<F>> {
        match self {
            DecomposableLocus::TwoRays(p, m) => vec![p.clone(), m.clone()],
            DecomposableLocus::OneRay(c) => vec![Ray::Exact(c.clone())],
            _ => Vec::new(),
        }
    }
}

impl<F: Field> Serialize for DecomposableLocus<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DecomposableLocus", 2)?;
        s.serialize_field("kind", self.kind())?;
        s.serialize_field("rays", &self.rays())?;
        s.end()
    }
}

/// Magnitude scales for tolerance decisions on Gramian-derived quantities.
pub(crate) fn gram_scale<F: Field>(a: &Vec4<F>, b: &Vec4<F>) -> f64 {
    a.norm_sqr_f64().max(b.norm_sqr_f64())
}

/// Decomposable rays in `span{a, b}`.
///
/// `(ξa + b | ξa + b) = G11 ξ² + 2 G12 ξ + G22` is solved for `ξ`; roots that
/// leave the field are returned as float rays.
pub fn decomposables_in_plane<F: Field>(
    a: &Vec4<F>,
    b: &Vec4<F>,
    field: FieldKind,
) -> Result<DecomposableLocus<F>, DecomposeError> {
    if !independent(&[a, b]) {
        return Err(DecomposeError::Dependent);
    }
    let g = gramian(a, b);
    let scale = gram_scale(a, b);
    let zero = |x: &F| x.is_zero_scaled(scale);
    if zero(&g.g11) && zero(&g.g12) && zero(&g.g22) {
        return Ok(DecomposableLocus::All);
    }
    if zero(&g.g11) && zero(&g.g22) {
        return Ok(DecomposableLocus::TwoRays(Ray::Exact(a.clone()), Ray::Exact(b.clone())));
    }
    if zero(&g.g11) {
        let swapped = Gramian2 { g11: g.g22.clone(), g12: g.g12.clone(), g22: g.g11.clone() };
        return Ok(solve_quadratic(&swapped, b, a, field, scale));
    }
    Ok(solve_quadratic(&g, a, b, field, scale))
}

/// Roots of `G11 ξ² + 2 G12 ξ + G22` as rays `ξa + b`; requires `G11 ≠ 0`.
fn solve_quadratic<F: Field>(g: &Gramian2<F>, a: &Vec4<F>, b: &Vec4<F>, field: FieldKind, scale: f64) -> DecomposableLocus<F> {
    let disc = g.g12.clone() * g.g12.clone() - g.g11.clone() * g.g22.clone();
    if disc.is_zero_scaled(scale * scale) {
        let xi = -(g.g12.clone() / g.g11.clone());
        return DecomposableLocus::OneRay(a.scale(&xi) + b.clone());
    }
    if field == FieldKind::Real && disc.real_sign() == Some(Sign::Negative) {
        return DecomposableLocus::None;
    }
    match disc.sqrt_exact().ok().flatten() {
        Some(root) => {
            let ray = |r: F| {
                let xi = (-g.g12.clone() + r) / g.g11.clone();
                Ray::Exact(a.scale(&xi) + b.clone())
            };
            DecomposableLocus::TwoRays(ray(root.clone()), ray(-root))
        }
        None => {
            let (af, bf) = (a.to_float(DEFAULT_EPS), b.to_float(DEFAULT_EPS));
            let gf = g.map(|x| FloatScalar::from_field(x, DEFAULT_EPS));
            let df = FloatScalar::from_field(&disc, DEFAULT_EPS);
            let root = df.sqrt_exact().ok().flatten().expect("float square roots always exist");
            let ray = |r: FloatScalar| {
                let xi = (-gf.g12 + r) / gf.g11;
                let c = af.scale(&xi) + bf.clone();
                let residual = bilinear(&c, &c).value().norm() / c.norm_sqr_f64();
                debug_assert!(residual <= APPROXIMATE_RAY_BOUND, "approximate ray residual {residual}");
                Ray::Approximate { vector: c, residual }
            };
            DecomposableLocus::TwoRays(ray(root), ray(-root))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{proportional, tensor2};
    use crate::scalar::{GaussianRational as G, Rational as Q};

    fn v(s: &str) -> Vec4<G> {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Vec4<Q> {
        s.parse().unwrap()
    }

    #[test]
    fn decomposability_examples() {
        assert!(is_decomposable(&v("(1,0,0,0)")));
        assert!(!is_decomposable(&v("(0,1,1,0)")));
        assert!(!is_decomposable(&v("(5,i,i,i)")));
        assert_eq!(residual(&v("(5,i,i,i)")), "1+5i".parse().unwrap());
    }

    #[test]
    fn float_decomposability_is_relative() {
        let z = Vec4::new(
            FloatScalar::new(1e6, 0.0, 1e-12),
            FloatScalar::new(1e6, 0.0, 1e-12),
            FloatScalar::new(1e6, 0.0, 1e-12),
            FloatScalar::new(1e6 + 1e-7, 0.0, 1e-12),
        );
        assert!(is_decomposable(&z));
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&v("(1,1,1,1)")).unwrap();
        assert_eq!((f.left, f.right, f.scale), ("(1,1)".parse().unwrap(), "(1,1)".parse().unwrap(), G::one()));
        let f = factorize(&v("(0,0,2,3)")).unwrap();
        assert_eq!((f.left, f.right), ("(0,1)".parse().unwrap(), "(2,3)".parse().unwrap()));
        assert_eq!(
            factorize(&v("(0,1,1,0)")),
            Err(DecomposeError::Indecomposable { residual: "-1".into() })
        );
        assert_eq!(factorize(&v("(0,0,0,0)")), Err(DecomposeError::Zero));
    }

    #[test]
    fn factorize_second_column_pivot() {
        let z = v("(0,2,0,-6i)");
        let f = factorize(&z).unwrap();
        assert_eq!(f.product(), z);
    }

    #[test]
    fn locus_examples() {
        let real = FieldKind::Real;
        let l = decomposables_in_plane(&q("(1,0,0,0)"), &q("(0,0,0,1)"), real).unwrap();
        assert_eq!(l, DecomposableLocus::TwoRays(Ray::Exact(q("(1,0,0,0)")), Ray::Exact(q("(0,0,0,1)"))));
        let l = decomposables_in_plane(&q("(0,1,-1,0)"), &q("(1,0,0,0)"), real).unwrap();
        assert_eq!(l, DecomposableLocus::OneRay(q("(1,0,0,0)")));
        let l = decomposables_in_plane(&q("(0,1,-1,0)"), &q("(1,0,0,1)"), real).unwrap();
        assert_eq!(l, DecomposableLocus::None);
        let l = decomposables_in_plane(&q("(1,0,0,0)"), &q("(0,1,0,0)"), real).unwrap();
        assert_eq!(l, DecomposableLocus::All);
    }

    #[test]
    fn complex_field_finds_rays_of_definite_real_planes() {
        let l = decomposables_in_plane(&v("(0,1,-1,0)"), &v("(1,0,0,1)"), FieldKind::Complex).unwrap();
        let DecomposableLocus::TwoRays(p, m) = l else { panic!("expected two rays") };
        for r in [p, m] {
            let c = r.exact().unwrap().clone();
            assert!(is_decomposable(&c));
        }
    }

    #[test]
    fn irrational_roots_become_float_rays() {
        // G = diag(2,-4): ξ = ±√2
        let a = q("(0,1,-1,0)");
        let b = q("(1,0,0,-2)");
        let l = decomposables_in_plane(&a, &b, FieldKind::Real).unwrap();
        let DecomposableLocus::TwoRays(Ray::Approximate { residual, vector }, _) = l else {
            panic!("expected approximate rays")
        };
        assert!(residual <= APPROXIMATE_RAY_BOUND);
        assert!(is_decomposable(&vector));
    }

    #[test]
    fn swap_branch() {
        let a = q("(1,0,0,0)");
        let b = q("(0,1,-1,1)");
        let l = decomposables_in_plane(&a, &b, FieldKind::Real).unwrap();
        let rays: Vec<_> = l.rays().iter().map(|r| r.exact().unwrap().clone()).collect();
        assert_eq!(rays.len(), 2);
        assert!(rays.iter().any(|r| proportional(r, &a)));
        assert!(rays.iter().all(is_decomposable));
    }

    #[test]
    fn dependent_basis_is_rejected() {
        let a = q("(1,2,3,4)");
        assert_eq!(decomposables_in_plane(&a, &a.scale(&Q::from_i64(2)), FieldKind::Real), Err(DecomposeError::Dependent));
    }

    #[test]
    fn tensor_products_are_decomposable() {
        let z = tensor2(&"(1+i,2)".parse::<Vec2<G>>().unwrap(), &"(3,-i)".parse().unwrap());
        assert!(is_decomposable(&z));
        assert_eq!(factorize(&z).unwrap().product(), z);
    }
}
