//! Vectors of the two- and four-dimensional spaces and the maps between them.
//!
//! The four-dimensional space is identified with the tensor product of two
//! copies of the two-dimensional one through
//! `u ⊗ v = (u1 v1, u1 v2, u2 v1, u2 v2)`.
//!
//! Besides the standard inner product `⟨x|y⟩ = Σ conj(x_i) y_i` there is the
//! symmetric bilinear form
//!
//! ```text
//! (a|b) = a1 b4 - a2 b3 - a3 b2 + a4 b1
//! ```
//!
//! whose quadratic form `(z|z) = 2 (z1 z4 - z2 z3)` vanishes exactly on
//! decomposable vectors. The two are linked by the tilde map:
//! `⟨x|y⟩ = (x̃|y)`.

mod elimination;

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::scalar::{Field, FloatScalar, LiteralError};

pub use elimination::{nullspace, rank, row_echelon};

/// Vector of the two-dimensional space.
#[derive(Clone, PartialEq, Debug)]
pub struct Vec2<F>(pub [F; 2]);

/// Vector of the four-dimensional space.
#[derive(Clone, PartialEq, Debug)]
pub struct Vec4<F>(pub [F; 4]);

impl<F: Field> Vec2<F> {
    pub fn new(x1: F, x2: F) -> Self {
        Vec2([x1, x2])
    }

    pub fn from_ints(x: [i64; 2]) -> Self {
        Vec2(x.map(F::from_i64))
    }

    pub fn components(&self) -> &[F; 2] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(F::is_zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Vec2(self.0.clone().map(|x| c.clone() * x))
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Vec2<G> {
        Vec2([f(&self.0[0]), f(&self.0[1])])
    }
}

impl<F: Field> Vec4<F> {
    pub fn new(x1: F, x2: F, x3: F, x4: F) -> Self {
        Vec4([x1, x2, x3, x4])
    }

    pub fn from_ints(x: [i64; 4]) -> Self {
        Vec4(x.map(F::from_i64))
    }

    pub fn zero() -> Self {
        Vec4::from_ints([0; 4])
    }

    pub fn components(&self) -> &[F; 4] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(F::is_zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Vec4(self.0.clone().map(|x| c.clone() * x))
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Vec4<G> {
        Vec4([f(&self.0[0]), f(&self.0[1]), f(&self.0[2]), f(&self.0[3])])
    }

    pub fn conj(&self) -> Self {
        self.map(F::conj)
    }

    /// Squared Euclidean norm as a float, used for relative tolerances.
    pub fn norm_sqr_f64(&self) -> f64 {
        self.0.iter().map(|x| x.to_complex().norm_sqr()).sum()
    }

    pub fn to_complex(&self) -> [Complex64; 4] {
        [0, 1, 2, 3].map(|i| self.0[i].to_complex())
    }

    /// Float copy with tolerance `eps` (kept as is for float input).
    pub fn to_float(&self, eps: f64) -> Vec4<FloatScalar> {
        self.map(|x| FloatScalar::from_field(x, eps))
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(F::is_real)
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &F, other: &Self) -> Self {
        self.clone() + other.scale(c)
    }
}

impl Vec4<FloatScalar> {
    /// Unit vector along `self`. Panics on the zero vector.
    pub fn normalized(&self) -> Self {
        let n = self.norm_sqr_f64().sqrt();
        assert!(n > 0.0, "cannot normalize the zero vector");
        self.map(|x| FloatScalar::from_complex(x.value() / n, x.eps()))
    }
}

impl<F: Field> Add for Vec4<F> {
    type Output = Vec4<F>;
    fn add(self, rhs: Self) -> Self {
        let [a1, a2, a3, a4] = self.0;
        let [b1, b2, b3, b4] = rhs.0;
        Vec4([a1 + b1, a2 + b2, a3 + b3, a4 + b4])
    }
}

impl<F: Field> Sub for Vec4<F> {
    type Output = Vec4<F>;
    fn sub(self, rhs: Self) -> Self {
        let [a1, a2, a3, a4] = self.0;
        let [b1, b2, b3, b4] = rhs.0;
        Vec4([a1 - b1, a2 - b2, a3 - b3, a4 - b4])
    }
}

impl<F: Field> Neg for Vec4<F> {
    type Output = Vec4<F>;
    fn neg(self) -> Self {
        Vec4(self.0.map(|x| -x))
    }
}

impl<F> Index<usize> for Vec4<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.0[i]
    }
}

impl<F> Index<usize> for Vec2<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.0[i]
    }
}

fn fmt_tuple<F: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[F]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl<F: fmt::Display> fmt::Display for Vec4<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl<F: fmt::Display> fmt::Display for Vec2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl<F: fmt::Display> Serialize for Vec4<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<F: fmt::Display> Serialize for Vec2<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_components<F: FromStr<Err = LiteralError>>(src: &str, n: usize) -> Result<Vec<F>, LiteralError> {
    let parts = crate::scalar::split_tuple(src)?;
    if parts.len() != n {
        return Err(LiteralError::new(src, 0, format!("expected {n} components, found {}", parts.len())));
    }
    parts
        .into_iter()
        .map(|(offset, piece)| piece.parse::<F>().map_err(|e| e.shifted(src, offset)))
        .collect()
}

impl<F: Field + FromStr<Err = LiteralError>> FromStr for Vec4<F> {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_components::<F>(s, 4)?;
        let [a, b, c, d]: [F; 4] = v.try_into().expect("length checked");
        Ok(Vec4([a, b, c, d]))
    }
}

impl<F: Field + FromStr<Err = LiteralError>> FromStr for Vec2<F> {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_components::<F>(s, 2)?;
        let [a, b]: [F; 2] = v.try_into().expect("length checked");
        Ok(Vec2([a, b]))
    }
}

/// `⟨x|y⟩ = Σ conj(x_i) y_i` on the four-dimensional space.
pub fn inner4<F: Field>(x: &Vec4<F>, y: &Vec4<F>) -> F {
    x.0.iter()
        .zip(&y.0)
        .fold(F::zero(), |acc, (a, b)| acc + a.conj() * b.clone())
}

/// `⟨u|v⟩` on the two-dimensional space.
pub fn inner2<F: Field>(u: &Vec2<F>, v: &Vec2<F>) -> F {
    u.0[0].conj() * v.0[0].clone() + u.0[1].conj() * v.0[1].clone()
}

/// The symmetric bilinear form `(a|b) = a1 b4 - a2 b3 - a3 b2 + a4 b1`.
/// No conjugation.
pub fn bilinear<F: Field>(a: &Vec4<F>, b: &Vec4<F>) -> F {
    let [a1, a2, a3, a4] = &a.0;
    let [b1, b2, b3, b4] = &b.0;
    a1.clone() * b4.clone() - a2.clone() * b3.clone() - a3.clone() * b2.clone() + a4.clone() * b1.clone()
}

/// Entries of the matrix of the bilinear form; symmetric and its own inverse.
pub const BILINEAR_MATRIX: [[i64; 4]; 4] = [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]];

/// `aᵀ · A · b` evaluated with the full matrix.
pub fn bilinear_via_matrix<F: Field>(a: &Vec4<F>, b: &Vec4<F>) -> F {
    let mut acc = F::zero();
    for (i, row) in BILINEAR_MATRIX.iter().enumerate() {
        for (j, &entry) in row.iter().enumerate() {
            if entry != 0 {
                acc = acc + F::from_i64(entry) * a.0[i].clone() * b.0[j].clone();
            }
        }
    }
    acc
}

pub fn tensor2<F: Field>(u: &Vec2<F>, v: &Vec2<F>) -> Vec4<F> {
    let [u1, u2] = &u.0;
    let [v1, v2] = &v.0;
    Vec4([
        u1.clone() * v1.clone(),
        u1.clone() * v2.clone(),
        u2.clone() * v1.clone(),
        u2.clone() * v2.clone(),
    ])
}

/// `u^× = (conj(u2), -conj(u1))`, inner-product-orthogonal to `u`.
pub fn cross<F: Field>(u: &Vec2<F>) -> Vec2<F> {
    Vec2([u.0[1].conj(), -u.0[0].conj()])
}

/// `x̃ = (conj(x4), -conj(x3), -conj(x2), conj(x1))`; an involution.
pub fn tilde<F: Field>(x: &Vec4<F>) -> Vec4<F> {
    let [x1, x2, x3, x4] = &x.0;
    Vec4([x4.conj(), -x3.conj(), -x2.conj(), x1.conj()])
}

/// `det(s, u) = s1 u2 - s2 u1` with `s`, `u` as columns.
pub fn det2<F: Field>(s: &Vec2<F>, u: &Vec2<F>) -> F {
    s.0[0].clone() * u.0[1].clone() - s.0[1].clone() * u.0[0].clone()
}

/// 2×2 Gramian of the bilinear form; symmetric by construction.
#[derive(Clone, PartialEq, Debug)]
pub struct Gramian2<F> {
    pub g11: F,
    pub g12: F,
    pub g22: F,
}

impl<F: Field> Gramian2<F> {
    pub fn diag(g11: F, g22: F) -> Self {
        Gramian2 { g11, g12: F::zero(), g22 }
    }

    pub fn det(&self) -> F {
        self.g11.clone() * self.g22.clone() - self.g12.clone() * self.g12.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.g11.is_zero() && self.g12.is_zero() && self.g22.is_zero()
    }

    pub fn is_diagonal(&self) -> bool {
        self.g12.is_zero()
    }

    pub fn rows(&self) -> [[F; 2]; 2] {
        [[self.g11.clone(), self.g12.clone()], [self.g12.clone(), self.g22.clone()]]
    }

    pub fn rank(&self) -> usize {
        rank(&self.rows().map(|r| r.to_vec()).to_vec())
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Gramian2<G> {
        Gramian2 { g11: f(&self.g11), g12: f(&self.g12), g22: f(&self.g22) }
    }

    pub fn conj(&self) -> Self {
        self.map(F::conj)
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| c.clone() * x.clone())
    }
}

impl<F: fmt::Display> fmt::Display for Gramian2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{}))", self.g11, self.g12, self.g12, self.g22)
    }
}

impl<F: Field> Serialize for Gramian2<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

pub fn gramian<F: Field>(a: &Vec4<F>, b: &Vec4<F>) -> Gramian2<F> {
    Gramian2 { g11: bilinear(a, a), g12: bilinear(a, b), g22: bilinear(b, b) }
}

/// Coordinates in which the bilinear form becomes `diag(1,1,-1,-1)`:
/// `x1' = (x1+x4)/√2`, `x2' = (x2-x3)/√2`, `x3' = (x2+x3)/√2`,
/// `x4' = (x1-x4)/√2`.
pub fn to_prime_coords(x: &Vec4<FloatScalar>) -> Vec4<FloatScalar> {
    let s = FloatScalar::from_complex(Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0), 0.0);
    to_prime_coords_scaled(x).scale(&s)
}

/// The prime coordinates multiplied by √2, exact over any field. With this
/// scaling `x'ᵀ · diag(1,1,-1,-1) · y' = 2 (x|y)`.
pub fn to_prime_coords_scaled<F: Field>(x: &Vec4<F>) -> Vec4<F> {
    let [x1, x2, x3, x4] = &x.0;
    Vec4([
        x1.clone() + x4.clone(),
        x2.clone() - x3.clone(),
        x2.clone() + x3.clone(),
        x1.clone() - x4.clone(),
    ])
}

/// `x'ᵀ · diag(1,1,-1,-1) · y'`.
pub fn diagonal_form<F: Field>(x: &Vec4<F>, y: &Vec4<F>) -> F {
    x.0[0].clone() * y.0[0].clone() + x.0[1].clone() * y.0[1].clone()
        - x.0[2].clone() * y.0[2].clone()
        - x.0[3].clone() * y.0[3].clone()
}

/// `true` when `x` and `y` span the same ray (both must be non-zero), i.e.
/// every 2×2 minor of the stacked pair vanishes.
pub fn proportional<F: Field>(x: &Vec4<F>, y: &Vec4<F>) -> bool {
    let scale = x.norm_sqr_f64().sqrt() * y.norm_sqr_f64().sqrt();
    (0..4).all(|i| {
        (i + 1..4).all(|j| (x.0[i].clone() * y.0[j].clone() - x.0[j].clone() * y.0[i].clone()).is_zero_scaled(scale))
    })
}

/// `true` when the vectors are linearly independent.
pub fn independent<F: Field>(vectors: &[&Vec4<F>]) -> bool {
    let rows: Vec<Vec<F>> = vectors.iter().map(|v| v.0.to_vec()).collect();
    rank(&rows) == vectors.len()
}
