//! Exact scalar arithmetic and dense linear algebra.

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{ensure_same_field, Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;
