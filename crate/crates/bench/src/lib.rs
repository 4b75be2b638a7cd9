//! Deterministic benchmark inputs.

use basis4::linalg::inner4;
use basis4::{GaussianRational, Rational, Vec4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn real_pairs(n: usize) -> Vec<(Vec4<Rational>, Vec4<Rational>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut v = || Vec4::from_ints([0; 4].map(|_| rng.gen_range(-9..=9)));
    (0..n).map(|_| (v(), v())).filter(|(a, b)| basis4::linalg::independent(&[a, b])).collect()
}

pub fn complex_pairs(n: usize) -> Vec<(Vec4<GaussianRational>, Vec4<GaussianRational>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut v = || Vec4([0; 4].map(|_| GaussianRational::from_parts(rng.gen_range(-9..=9), 1, rng.gen_range(-9..=9), 1)));
    (0..n).map(|_| (v(), v())).filter(|(a, b)| basis4::linalg::independent(&[a, b])).collect()
}

/// Orthogonal pairs obtained by projecting the second vector off the first.
pub fn complex_orthogonal_pairs(n: usize) -> Vec<(Vec4<GaussianRational>, Vec4<GaussianRational>)> {
    complex_pairs(n)
        .into_iter()
        .map(|(a, b)| {
            let c = inner4(&a, &b) / inner4(&a, &a);
            let b = b.add_scaled(&-c, &a);
            (a, b)
        })
        .collect()
}

pub const HARDY: &str = include_str!("../../core/fixtures/hardy.json");
