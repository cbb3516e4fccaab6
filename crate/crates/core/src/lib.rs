//! Exact polynomial vector fields on the parameter spaces of hyperelliptic
//! curves of genus 1, 2 and 3, the polynomial map `p: C^{3g} -> C^{2g}` and
//! the Lie algebras of the lifted fields, with a verification suite for
//! every identity.

pub mod claim;
pub mod derivation;
pub mod dubrovin;
pub mod exactpoly;
pub mod genus_fields;
pub mod lambda_space;
pub mod linsolve;
pub mod suite;

pub use exactpoly::{parse, Homogeneity, Monomial, Poly, PolyError, PolyMap, PolyMatrix, Rational, Var};
