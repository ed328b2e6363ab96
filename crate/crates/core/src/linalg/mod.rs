//! Exact rational linear algebra: dense matrices, canonical subspaces and
//! the incremental echelon engines used by the heavier rank computations.

mod echelon;
mod matrix;
pub mod modular;
mod rational;
mod subspace;

pub use echelon::{EchelonForm, FractionFreeEchelon, IntScalar, Overflow, SparseRow};
pub use matrix::{kernel, rref, Matrix};
pub use rational::{format_rational, int, parse_rational, ratio, Rational};
pub use subspace::{subspace_intersect, subspace_sum, SpanBuilder, Subquotient, Subspace};
