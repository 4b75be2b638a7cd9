//! Planes (two-dimensional subspaces) and their types with respect to the
//! bilinear form.
//!
//! Over the reals the type is the signature of the form restricted to the
//! plane; over the complex numbers only its rank survives, since every
//! non-zero diagonal entry can be rescaled to 1.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::decompose::gram_scale;
use crate::linalg::{gramian, independent, rank, tilde, Gramian2, Vec4};
use crate::scalar::{Field, FieldKind, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("plane basis vectors are linearly dependent")]
    Dependent,
    #[error("vector {0} has non-real components but the field is real")]
    NotReal(String),
}

/// Type of a plane: `(1,1)`, `(1,-1)`, `(0,0)` and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneType {
    /// `(0,0)`: the form vanishes identically.
    Null,
    /// `(1,0)`
    PositiveDegenerate,
    /// `(-1,0)`
    NegativeDegenerate,
    /// `(1,1)`
    PositiveDefinite,
    /// `(-1,-1)`
    NegativeDefinite,
    /// `(1,-1)`
    Indefinite,
}

impl PlaneType {
    pub const REAL: [PlaneType; 6] = [
        PlaneType::Null,
        PlaneType::PositiveDegenerate,
        PlaneType::NegativeDegenerate,
        PlaneType::PositiveDefinite,
        PlaneType::NegativeDefinite,
        PlaneType::Indefinite,
    ];

    pub const COMPLEX: [PlaneType; 3] = [PlaneType::Null, PlaneType::PositiveDegenerate, PlaneType::PositiveDefinite];

    pub fn signature(self) -> (i8, i8) {
        match self {
            PlaneType::Null => (0, 0),
            PlaneType::PositiveDegenerate => (1, 0),
            PlaneType::NegativeDegenerate => (-1, 0),
            PlaneType::PositiveDefinite => (1, 1),
            PlaneType::NegativeDefinite => (-1, -1),
            PlaneType::Indefinite => (1, -1),
        }
    }

    /// Rank of the restricted form.
    pub fn rank(self) -> usize {
        let (x, y) = self.signature();
        usize::from(x != 0) + usize::from(y != 0)
    }

    pub fn valid_for(self, field: FieldKind) -> bool {
        field == FieldKind::Real || PlaneType::COMPLEX.contains(&self)
    }
}

impl fmt::Display for PlaneType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.signature();
        write!(f, "({x},{y})")
    }
}

impl FromStr for PlaneType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PlaneType::REAL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| format!("unknown plane type {s:?}"))
    }
}

impl Serialize for PlaneType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The type of the orthocomplement given the type of the tilde image.
pub fn transfer_type(t: PlaneType, field: FieldKind) -> PlaneType {
    if field == FieldKind::Complex {
        return t;
    }
    match t {
        PlaneType::PositiveDefinite => PlaneType::NegativeDefinite,
        PlaneType::NegativeDefinite => PlaneType::PositiveDefinite,
        PlaneType::PositiveDegenerate => PlaneType::NegativeDegenerate,
        PlaneType::NegativeDegenerate => PlaneType::PositiveDegenerate,
        other => other,
    }
}

/// Two linearly independent vectors and the Gramian of their span.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Plane<F: Field> {
    a: Vec4<F>,
    b: Vec4<F>,
    field: FieldKind,
    gramian: Gramian2<F>,
}

impl<F: Field> Plane<F> {
    pub fn new(a: Vec4<F>, b: Vec4<F>, field: FieldKind) -> Result<Self, PlaneError> {
        if field == FieldKind::Real {
            if let Some(v) = [&a, &b].into_iter().find(|v| !v.is_real()) {
                return Err(PlaneError::NotReal(v.to_string()));
            }
        }
        if !independent(&[&a, &b]) {
            return Err(PlaneError::Dependent);
        }
        let gramian = gramian(&a, &b);
        Ok(Plane { a, b, field, gramian })
    }

    pub fn a(&self) -> &Vec4<F> {
        &self.a
    }

    pub fn b(&self) -> &Vec4<F> {
        &self.b
    }

    pub fn basis(&self) -> [&Vec4<F>; 2] {
        [&self.a, &self.b]
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn gramian(&self) -> &Gramian2<F> {
        &self.gramian
    }

    /// `true` when `v` lies in the plane.
    pub fn contains(&self, v: &Vec4<F>) -> bool {
        let rows: Vec<Vec<F>> = [&self.a, &self.b, v].iter().map(|x| x.0.to_vec()).collect();
        rank(&rows) == 2
    }

    pub fn same_span(&self, other: &Plane<F>) -> bool {
        self.contains(&other.a) && self.contains(&other.b)
    }

    pub fn classify(&self) -> PlaneType {
        self.classify_detailed().plane_type
    }

    pub fn classify_detailed(&self) -> Classification {
        classify_gramian(&self.gramian, self.field, gram_scale(&self.a, &self.b))
    }
}

/// A plane type together with whether a float tolerance decided it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub plane_type: PlaneType,
    /// Set when some quantity was treated as zero only within tolerance.
    pub tolerance_dependent: bool,
}

struct ZeroTest {
    scale: f64,
    fuzzy: bool,
}

impl ZeroTest {
    fn zero<F: Field>(&mut self, x: &F, power: i32) -> bool {
        let z = x.is_zero_scaled(self.scale.powi(power));
        if z && x.tolerance().is_some() && x.to_complex().norm() > 0.0 {
            self.fuzzy = true;
        }
        z
    }

    fn sign<F: Field>(&mut self, x: &F, power: i32) -> Sign {
        if self.zero(x, power) {
            return Sign::Zero;
        }
        if x.to_complex().re > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Type of a plane with Gramian `g`. `scale` sets float tolerances; it is
/// ignored for exact scalars.
pub fn classify_gramian<F: Field>(g: &Gramian2<F>, field: FieldKind, scale: f64) -> Classification {
    let mut t = ZeroTest { scale, fuzzy: false };
    let det = g.det();
    let plane_type = match field {
        FieldKind::Complex => {
            if t.zero(&g.g11, 1) && t.zero(&g.g12, 1) && t.zero(&g.g22, 1) {
                PlaneType::Null
            } else if t.zero(&det, 2) {
                PlaneType::PositiveDegenerate
            } else {
                PlaneType::PositiveDefinite
            }
        }
        FieldKind::Real => match t.sign(&det, 2) {
            Sign::Positive => match t.sign(&g.g11, 1) {
                Sign::Negative => PlaneType::NegativeDefinite,
                _ => PlaneType::PositiveDefinite,
            },
            Sign::Negative => PlaneType::Indefinite,
            Sign::Zero => match (t.sign(&g.g11, 1), t.sign(&g.g22, 1)) {
                (Sign::Positive, _) | (_, Sign::Positive) => PlaneType::PositiveDegenerate,
                (Sign::Negative, _) | (_, Sign::Negative) => PlaneType::NegativeDegenerate,
                // det = -G12² = 0 forces G12 = 0
                _ => PlaneType::Null,
            },
        },
    };
    Classification { plane_type, tolerance_dependent: t.fuzzy }
}

/// Basis of the same plane with diagonal Gramian. Entries are not rescaled.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CanonicalBasis<F: Field> {
    pub c1: Vec4<F>,
    pub c2: Vec4<F>,
    pub gramian: Gramian2<F>,
    pub plane_type: PlaneType,
}

pub fn canonical_basis<F: Field>(p: &Plane<F>) -> CanonicalBasis<F> {
    let (a, b, g) = (&p.a, &p.b, &p.gramian);
    let scale = gram_scale(a, b);
    let zero = |x: &F| x.is_zero_scaled(scale);
    let orthogonalize = |x: &Vec4<F>, y: &Vec4<F>, gxx: &F| {
        let c = -(g.g12.clone() / gxx.clone());
        (x.clone(), y.add_scaled(&c, x))
    };
    let (c1, c2) = if !zero(&g.g11) {
        orthogonalize(a, b, &g.g11)
    } else if !zero(&g.g22) {
        orthogonalize(b, a, &g.g22)
    } else if !zero(&g.g12) {
        (a.clone() + b.clone(), a.clone() - b.clone())
    } else {
        (a.clone(), b.clone())
    };
    let plane_type = p.classify();
    let rank_key = |v: &Vec4<F>| {
        let d = crate::linalg::bilinear(v, v);
        if zero(&d) {
            2
        } else if p.field == FieldKind::Complex || d.to_complex().re > 0.0 {
            0
        } else {
            1
        }
    };
    let (c1, c2) = if rank_key(&c2) < rank_key(&c1) { (c2, c1) } else { (c1, c2) };
    let gramian = Gramian2::diag(crate::linalg::bilinear(&c1, &c1), crate::linalg::bilinear(&c2, &c2));
    CanonicalBasis { c1, c2, gramian, plane_type }
}

/// Basis of the vectors of the plane that are form-orthogonal to the whole
/// plane.
pub fn radical<F: Field>(p: &Plane<F>) -> Vec<Vec4<F>> {
    let cb = canonical_basis(p);
    let scale = gram_scale(&p.a, &p.b);
    [(cb.c1, cb.gramian.g11), (cb.c2, cb.gramian.g22)]
        .into_iter()
        .filter(|(_, d)| d.is_zero_scaled(scale))
        .map(|(c, _)| c)
        .collect()
}

/// `true` when two lists of vectors span the same subspace.
pub fn same_subspace<F: Field>(x: &[Vec4<F>], y: &[Vec4<F>]) -> bool {
    let rows = |vs: &[&Vec4<F>]| vs.iter().map(|v| v.0.to_vec()).collect::<Vec<_>>();
    let xs: Vec<&Vec4<F>> = x.iter().collect();
    let ys: Vec<&Vec4<F>> = y.iter().collect();
    let both: Vec<&Vec4<F>> = x.iter().chain(y).collect();
    let r = rank(&rows(&both));
    r == rank(&rows(&xs)) && r == rank(&rows(&ys))
}

/// Image of the plane under the tilde map.
pub fn tilde_plane<F: Field>(p: &Plane<F>) -> Plane<F> {
    Plane::new(tilde(&p.a), tilde(&p.b), p.field).expect("tilde is a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational as G, Rational as Q};

    fn plane(a: &str, b: &str) -> Plane<Q> {
        Plane::new(a.parse().unwrap(), b.parse().unwrap(), FieldKind::Real).unwrap()
    }

    fn cplane(a: &str, b: &str) -> Plane<G> {
        Plane::new(a.parse().unwrap(), b.parse().unwrap(), FieldKind::Complex).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(plane("(0,1,1,0)", "(1,0,0,-1)").classify(), PlaneType::NegativeDefinite);
        assert_eq!(plane("(1,0,0,0)", "(0,0,0,1)").classify(), PlaneType::Indefinite);
        assert_eq!(cplane("(i,1,-1/2,-1/2)", "(i,3,3,5)").classify(), PlaneType::PositiveDefinite);
        assert_eq!(plane("(0,1,-1,0)", "(1,0,0,0)").classify(), PlaneType::PositiveDegenerate);
        assert_eq!(plane("(0,1,1,0)", "(1,0,0,0)").classify(), PlaneType::NegativeDegenerate);
        assert_eq!(plane("(1,0,0,0)", "(0,1,0,0)").classify(), PlaneType::Null);
    }

    #[test]
    fn type_strings() {
        assert_eq!(PlaneType::Indefinite.to_string(), "(1,-1)");
        assert_eq!("(-1,0)".parse::<PlaneType>(), Ok(PlaneType::NegativeDegenerate));
        assert!(!PlaneType::Indefinite.valid_for(FieldKind::Complex));
    }

    #[test]
    fn real_field_rejects_complex_vectors() {
        let r = Plane::<G>::new("(i,0,0,0)".parse().unwrap(), "(0,1,0,0)".parse().unwrap(), FieldKind::Real);
        assert!(matches!(r, Err(PlaneError::NotReal(_))));
    }

    #[test]
    fn canonical_basis_examples() {
        let cb = canonical_basis(&plane("(1,0,0,0)", "(0,0,0,1)"));
        assert_eq!(cb.c1, "(1,0,0,1)".parse().unwrap());
        assert_eq!(cb.c2, "(1,0,0,-1)".parse().unwrap());
        assert_eq!(cb.gramian, Gramian2::diag(Q::from_i64(2), Q::from_i64(-2)));

        let cb = canonical_basis(&plane("(0,1,-1,0)", "(1,0,0,1)"));
        assert_eq!(cb.c1, "(0,1,-1,0)".parse().unwrap());
        assert_eq!(cb.c2, "(1,0,0,1)".parse().unwrap());
        assert_eq!(cb.gramian, Gramian2::diag(Q::from_i64(2), Q::from_i64(2)));

        let cb = canonical_basis(&plane("(1,0,0,0)", "(0,1,0,0)"));
        assert!(cb.gramian.is_zero());
    }

    #[test]
    fn canonical_order_puts_zero_last() {
        let cb = canonical_basis(&plane("(1,0,0,0)", "(0,1,-1,0)"));
        assert_eq!(cb.gramian, Gramian2::diag(Q::from_i64(2), Q::zero()));
        assert_eq!(cb.c2, "(1,0,0,0)".parse().unwrap());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(&plane("(1,0,0,0)", "(0,1,0,0)")).len(), 2);
        let r = radical(&plane("(0,1,-1,0)", "(1,0,0,0)"));
        assert_eq!(r, vec!["(1,0,0,0)".parse().unwrap()]);
        assert!(radical(&plane("(0,1,-1,0)", "(1,0,0,1)")).is_empty());
    }

    #[test]
    fn tilde_plane_examples() {
        let p = plane("(1,0,0,0)", "(0,1,0,0)");
        let t = tilde_plane(&p);
        assert!(t.same_span(&plane("(0,0,0,1)", "(0,0,1,0)")));
        assert!(tilde_plane(&t).same_span(&p));
    }

    #[test]
    fn transfer_examples() {
        let real = FieldKind::Real;
        assert_eq!(transfer_type(PlaneType::PositiveDefinite, real), PlaneType::NegativeDefinite);
        assert_eq!(transfer_type(PlaneType::Indefinite, real), PlaneType::Indefinite);
        assert_eq!(transfer_type(PlaneType::NegativeDegenerate, real), PlaneType::PositiveDegenerate);
        assert_eq!(transfer_type(PlaneType::Null, real), PlaneType::Null);
        assert_eq!(transfer_type(PlaneType::PositiveDegenerate, FieldKind::Complex), PlaneType::PositiveDegenerate);
    }

    #[test]
    fn float_classification_flags_tolerance() {
        use crate::scalar::FloatScalar;
        let f = |x: f64| FloatScalar::new(x, 0.0, 1e-9);
        let a = Vec4::new(f(0.0), f(1.0), f(-1.0), f(0.0));
        let b = Vec4::new(f(1.0), f(0.0), f(0.0), f(1e-12));
        let c = Plane::new(a, b, FieldKind::Real).unwrap().classify_detailed();
        assert_eq!(c.plane_type, PlaneType::PositiveDegenerate);
        assert!(c.tolerance_dependent);
    }
}
