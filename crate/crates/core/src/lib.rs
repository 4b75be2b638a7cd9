//! Exact classification of two-dimensional subspaces of four-dimensional
//! Hilbert space by their decomposability structure, and completion of
//! orthogonal bases with decomposable or indecomposable vectors.

pub mod completion;
pub mod decompose;
pub mod hypergraph;
pub mod linalg;
pub mod planes;
pub mod scalar;

pub use linalg::{Gramian2, Vec2, Vec4};
pub use decompose::{DecomposableLocus, Factorization, Ray};
pub use planes::{Plane, PlaneType};
pub use scalar::{Field, FieldKind, FloatScalar, GaussianRational, Rational, Sign};
