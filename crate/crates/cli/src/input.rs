//! Parsing of command-line vectors and hypergraph files into the scalar type
//! selected by `--field` and `--mode`.

use std::fmt;

use basis4::hypergraph::{parse_hypergraph, FormatError, Hypergraph};
use basis4::scalar::LiteralError;
use basis4::{Field, FieldKind, FloatScalar, GaussianRational, Rational, Vec2, Vec4};

/// An input error; always exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {}", self.0)
    }
}

impl InputError {
    pub fn literal(name: &str, e: &LiteralError) -> Self {
        let caret = " ".repeat(e.position);
        InputError(format!(
            "argument <{name}>: {} at position {}\n  {}\n  {caret}^",
            e.message, e.position, e.input
        ))
    }
}

/// Scalars the command line can compute with.
pub trait Scalar: Field {
    fn from_real(x: &Rational, eps: f64) -> Self;
    fn from_complex(x: &GaussianRational, eps: f64) -> Self;
}

impl Scalar for Rational {
    fn from_real(x: &Rational, _: f64) -> Self {
        x.clone()
    }

    fn from_complex(_: &GaussianRational, _: f64) -> Self {
        unreachable!("rational scalars are only selected for the real field")
    }
}

impl Scalar for GaussianRational {
    fn from_real(x: &Rational, _: f64) -> Self {
        GaussianRational::real(x.clone())
    }

    fn from_complex(x: &GaussianRational, _: f64) -> Self {
        x.clone()
    }
}

impl Scalar for FloatScalar {
    fn from_real(x: &Rational, eps: f64) -> Self {
        FloatScalar::from_rational(x, eps)
    }

    fn from_complex(x: &GaussianRational, eps: f64) -> Self {
        FloatScalar::from_gaussian(x, eps)
    }
}

#[derive(Clone, Copy)]
pub struct Parser {
    pub field: FieldKind,
    pub eps: f64,
}

impl Parser {
    pub fn vec4<F: Scalar>(&self, name: &str, text: &str) -> Result<Vec4<F>, InputError> {
        let err = |e: LiteralError| InputError::literal(name, &e);
        match self.field {
            FieldKind::Real => Ok(text.parse::<Vec4<Rational>>().map_err(err)?.map(|x| F::from_real(x, self.eps))),
            FieldKind::Complex => {
                Ok(text.parse::<Vec4<GaussianRational>>().map_err(err)?.map(|x| F::from_complex(x, self.eps)))
            }
        }
    }

    pub fn vec2<F: Scalar>(&self, name: &str, text: &str) -> Result<Vec2<F>, InputError> {
        let err = |e: LiteralError| InputError::literal(name, &e);
        match self.field {
            FieldKind::Real => Ok(text.parse::<Vec2<Rational>>().map_err(err)?.map(|x| F::from_real(x, self.eps))),
            FieldKind::Complex => {
                Ok(text.parse::<Vec2<GaussianRational>>().map_err(err)?.map(|x| F::from_complex(x, self.eps)))
            }
        }
    }
}

fn format_error(file: &str, e: FormatError) -> InputError {
    match e {
        FormatError::Literal { path, source } => {
            let caret = " ".repeat(source.position);
            InputError(format!(
                "{file}: {path}: {} at position {}\n  {}\n  {caret}^",
                source.message, source.position, source.input
            ))
        }
        FormatError::Json { line, column, .. } => InputError(format!("{file}:{line}:{column}: {e}")),
        other => InputError(format!("{file}: {other}")),
    }
}

/// A parsed hypergraph in the scalar type matching its field and the mode.
pub enum LoadedHypergraph {
    Real(Hypergraph<Rational>),
    Complex(Hypergraph<GaussianRational>),
    Float(Hypergraph<FloatScalar>),
}

pub fn load_hypergraph(file: &str, text: &str, float: Option<f64>) -> Result<LoadedHypergraph, InputError> {
    let complex: Hypergraph<GaussianRational> = parse_hypergraph(text).map_err(|e| format_error(file, e))?;
    Ok(match (float, complex.field()) {
        (Some(eps), _) => LoadedHypergraph::Float(complex.map_labels(|x| FloatScalar::from_gaussian(x, eps))),
        (None, FieldKind::Real) => {
            LoadedHypergraph::Real(parse_hypergraph(text).map_err(|e| format_error(file, e))?)
        }
        (None, FieldKind::Complex) => LoadedHypergraph::Complex(complex),
    })
}
