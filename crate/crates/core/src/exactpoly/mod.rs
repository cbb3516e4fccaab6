//! Sparse multivariate polynomials over the rationals with a grading,
//! plus polynomial matrices, determinants and resultants.

mod matrix;
mod monomial;
mod poly;
mod polymap;
mod text;
mod var;

pub use matrix::{resultant, sylvester, PolyMatrix};
pub use monomial::Monomial;
pub use poly::{Homogeneity, Poly};
pub use polymap::PolyMap;
pub use text::{latex_var, parse};
pub use var::Var;

/// Exact coefficient domain.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable {name} is registered with weight {registered}, not {requested}")]
    RingMismatch {
        name: String,
        registered: u32,
        requested: u32,
    },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable {0} has no value")]
    UnassignedVariable(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("resultant of the zero polynomial")]
    ZeroPolynomial,
}

/// Shorthand used throughout for transcribed formulas that are known to parse.
pub fn poly(src: &str) -> Poly {
    parse(src).unwrap_or_else(|e| panic!("{e}"))
}
