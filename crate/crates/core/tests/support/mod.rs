//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use basis4::linalg::bilinear;
use basis4::{Field, FieldKind, GaussianRational, Rational, Vec2, Vec4};
use rand::Rng;

/// Exact scalars drawn with numerators and denominators bounded by 10.
pub trait Sample: Field {
    const KIND: FieldKind;
    fn sample<R: Rng>(rng: &mut R) -> Self;
}

fn rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-10..=10), rng.gen_range(1..=10))
}

impl Sample for Rational {
    const KIND: FieldKind = FieldKind::Real;
    fn sample<R: Rng>(rng: &mut R) -> Self {
        rational(rng)
    }
}

impl Sample for GaussianRational {
    const KIND: FieldKind = FieldKind::Complex;
    fn sample<R: Rng>(rng: &mut R) -> Self {
        GaussianRational::new(rational(rng), rational(rng))
    }
}

pub fn vec2<F: Sample, R: Rng>(rng: &mut R) -> Vec2<F> {
    loop {
        let v = Vec2([F::sample(rng), F::sample(rng)]);
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn vec4<F: Sample, R: Rng>(rng: &mut R) -> Vec4<F> {
    loop {
        let v = Vec4([F::sample(rng), F::sample(rng), F::sample(rng), F::sample(rng)]);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Ways of drawing a plane, chosen to reach every type with useful frequency.
#[derive(Clone, Copy, Debug)]
pub enum PlaneShape {
    Generic,
    /// Two decomposable vectors.
    Products,
    /// `s⊗t, s⊗v`: every vector decomposable.
    SharedFactor,
    /// A decomposable vector and a form-orthogonal partner.
    Degenerate,
    /// A decomposable vector and a generic one.
    OneProduct,
}

pub const SHAPES: [PlaneShape; 5] =
    [PlaneShape::Generic, PlaneShape::Products, PlaneShape::SharedFactor, PlaneShape::Degenerate, PlaneShape::OneProduct];

fn product<F: Sample, R: Rng>(rng: &mut R) -> Vec4<F> {
    basis4::linalg::tensor2(&vec2::<F, R>(rng), &vec2::<F, R>(rng))
}

fn draw<F: Sample, R: Rng>(shape: PlaneShape, rng: &mut R) -> (Vec4<F>, Vec4<F>) {
    match shape {
        PlaneShape::Generic => (vec4(rng), vec4(rng)),
        PlaneShape::Products => (product(rng), product(rng)),
        PlaneShape::SharedFactor => {
            let s = vec2::<F, R>(rng);
            (basis4::linalg::tensor2(&s, &vec2(rng)), basis4::linalg::tensor2(&s, &vec2(rng)))
        }
        PlaneShape::Degenerate => {
            let d = product::<F, R>(rng);
            let (r, w) = (vec4::<F, R>(rng), vec4::<F, R>(rng));
            let b = r.scale(&bilinear(&d, &w)) - w.scale(&bilinear(&d, &r));
            (d, b)
        }
        PlaneShape::OneProduct => (product(rng), vec4(rng)),
    }
}

/// A linearly independent pair of the given shape.
pub fn plane<F: Sample, R: Rng>(shape: PlaneShape, rng: &mut R) -> (Vec4<F>, Vec4<F>) {
    loop {
        let (a, b) = draw::<F, R>(shape, rng);
        if basis4::linalg::independent(&[&a, &b]) {
            return (a, b);
        }
    }
}
