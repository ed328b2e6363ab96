//! Exact computations around polynomial-identity exponents of finite-dimensional
//! Lie algebras carrying an action by derivations and automorphisms.
//!
//! The crate has two independent routes to the exponent:
//!
//! * a structural route ([`exponent`]) that decomposes the algebra
//!   (radical, Levi section, simple components of the semisimple quotient)
//!   and searches for the largest combination of components whose bracket
//!   chains do not vanish, plus a checker for user-supplied ideal certificates;
//! * a brute-force route ([`codim`]) that computes codimensions and
//!   `S_n`-cocharacters as ranks of evaluation matrices over the rationals.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and every
//! subspace is kept in reduced row echelon form, so equality of subspaces is
//! equality of their canonical bases.

pub mod action;
pub mod codim;
mod error;
pub mod exponent;
pub mod lie;
pub mod linalg;
pub mod structure;

pub use action::{ActionAlgebra, ActionGenerator, GeneratorKind};
pub use error::{Error, ErrorKind, Result};
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Rational, Subspace};
