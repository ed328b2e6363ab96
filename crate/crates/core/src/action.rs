//! Actions by derivations and automorphisms, represented by their image: the
//! unital associative algebra of operators on `L` generated by the declared
//! generators (and the inverses of the automorphisms).
//!
//! The Hopf algebra itself is never materialized. Every quantity computed
//! downstream (`H`-orbits of subspaces, invariance, irreducibility, the
//! evaluation matrices of the codimension oracle) only depends on the span of
//! the operators, and ranging over a basis of that span gives the same linear
//! spans as ranging over all of `H`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational, SpanBuilder, Subquotient, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Derivation,
    Automorphism,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::Derivation => write!(f, "derivation"),
            GeneratorKind::Automorphism => write!(f, "automorphism"),
        }
    }
}

/// A declared operator on `L`, acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionGenerator {
    pub name: String,
    pub kind: GeneratorKind,
    pub matrix: Matrix,
}

impl ActionGenerator {
    pub fn derivation(name: impl Into<String>, matrix: Matrix) -> Self {
        ActionGenerator {
            name: name.into(),
            kind: GeneratorKind::Derivation,
            matrix,
        }
    }

    pub fn automorphism(name: impl Into<String>, matrix: Matrix) -> Self {
        ActionGenerator {
            name: name.into(),
            kind: GeneratorKind::Automorphism,
            matrix,
        }
    }

    /// Checks the compatibility law of the generator's kind on every basis
    /// pair; returns the first violating pair.
    fn check(&self, l: &LieAlgebra) -> Result<()> {
        let n = l.dim();
        if self.matrix.rows() != n || self.matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.matrix.rows(),
            });
        }
        if self.kind == GeneratorKind::Automorphism && self.matrix.inverse().is_none() {
            return Err(Error::SingularAutomorphism(self.name.clone()));
        }
        let images: Vec<Vec<Rational>> = self.matrix.columns();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.matrix.apply(l.basis_bracket(i, j));
                let rhs = match self.kind {
                    GeneratorKind::Derivation => {
                        let a = l.bracket(&images[i], &l.unit(j));
                        let b = l.bracket(&l.unit(i), &images[j]);
                        a.into_iter().zip(b).map(|(x, y)| x + y).collect()
                    }
                    GeneratorKind::Automorphism => l.bracket(&images[i], &images[j]),
                };
                if lhs != rhs {
                    return Err(Error::CompatibilityViolation {
                        generator: self.name.clone(),
                        i,
                        j,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Linear basis of the operator algebra generated by an action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionAlgebra {
    dim: usize,
    basis: Vec<Matrix>,
    generators: Vec<ActionGenerator>,
}

impl ActionAlgebra {
    /// The trivial action: only the identity.
    pub fn trivial(dim: usize) -> Self {
        ActionAlgebra {
            dim,
            basis: vec![Matrix::identity(dim)],
            generators: Vec::new(),
        }
    }

    /// Validates the generators against `l` and closes them into an algebra.
    pub fn build(l: &LieAlgebra, generators: Vec<ActionGenerator>) -> Result<Self> {
        for g in &generators {
            g.check(l)?;
        }
        let mut ops: Vec<Matrix> = Vec::new();
        for g in &generators {
            ops.push(g.matrix.clone());
            if g.kind == GeneratorKind::Automorphism {
                ops.push(g.matrix.inverse().expect("checked invertible"));
            }
        }
        Ok(ActionAlgebra {
            dim: l.dim(),
            basis: generated_algebra(l.dim(), &ops, true),
            generators,
        })
    }

    /// The unital algebra generated by arbitrary operators, without any
    /// compatibility check (used for induced actions on quotients).
    pub fn from_operators(dim: usize, ops: &[Matrix]) -> Self {
        ActionAlgebra {
            dim,
            basis: generated_algebra(dim, ops, true),
            generators: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the operator algebra.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis in insertion order; the identity comes first.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn generators(&self) -> &[ActionGenerator] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.len() == 1
    }

    /// Operators that generate the algebra (identity excluded).
    pub fn generating_operators(&self) -> Vec<Matrix> {
        if self.generators.is_empty() {
            return self.basis[1..].to_vec();
        }
        let mut ops = Vec::new();
        for g in &self.generators {
            ops.push(g.matrix.clone());
            if g.kind == GeneratorKind::Automorphism {
                ops.push(g.matrix.inverse().expect("checked invertible"));
            }
        }
        ops
    }

    pub fn apply_to_subspace(&self, u: &Subspace) -> Subspace {
        apply_to_subspace(self, u)
    }

    pub fn is_invariant(&self, u: &Subspace) -> bool {
        is_invariant(self, u)
    }

    /// The action induced on `top / bottom`, or `None` when either subspace is
    /// not invariant.
    pub fn induced(&self, sq: &Subquotient) -> Option<ActionAlgebra> {
        let ops: Option<Vec<Matrix>> = self
            .generating_operators()
            .iter()
            .map(|op| sq.induced(op))
            .collect();
        Some(ActionAlgebra::from_operators(sq.dim(), &ops?))
    }

    /// The same action after the basis change `x_old = p · x_new`.
    pub fn conjugate(&self, p: &Matrix) -> ActionAlgebra {
        let inv = p.inverse().expect("invertible basis change");
        let conj = |m: &Matrix| inv.mul(m).mul(p);
        ActionAlgebra {
            dim: self.dim,
            basis: self.basis.iter().map(conj).collect(),
            generators: self
                .generators
                .iter()
                .map(|g| ActionGenerator {
                    name: g.name.clone(),
                    kind: g.kind,
                    matrix: conj(&g.matrix),
                })
                .collect(),
        }
    }
}

pub fn build_action_algebra(
    l: &LieAlgebra,
    generators: Vec<ActionGenerator>,
) -> Result<ActionAlgebra> {
    ActionAlgebra::build(l, generators)
}

fn flatten(m: &Matrix) -> Vec<Rational> {
    m.as_slice().to_vec()
}

/// Basis of the associative algebra generated by `ops` (with the identity when
/// `unital`). Breadth-first: each admitted element is multiplied on the left
/// by every generator, and products are admitted when they enlarge the span.
pub fn generated_algebra(dim: usize, ops: &[Matrix], unital: bool) -> Vec<Matrix> {
    let mut span = SpanBuilder::new(dim * dim);
    let mut basis: Vec<Matrix> = Vec::new();
    let seeds: Vec<Matrix> = if unital {
        vec![Matrix::identity(dim)]
    } else {
        ops.to_vec()
    };
    for s in seeds {
        if span.insert(&flatten(&s)) {
            basis.push(s);
        }
    }
    let mut next = 0;
    while next < basis.len() {
        let x = basis[next].clone();
        next += 1;
        for g in ops {
            let y = g.mul(&x);
            if span.insert(&flatten(&y)) {
                basis.push(y);
            }
        }
        if span.dim() == dim * dim {
            break;
        }
    }
    basis
}

/// Span of `T v` over the algebra basis `T` and the basis vectors `v` of `u`.
pub fn apply_to_subspace(a: &ActionAlgebra, u: &Subspace) -> Subspace {
    assert_eq!(u.ambient_dim(), a.dim);
    if u.is_zero() || a.is_trivial() {
        return u.clone();
    }
    let mut span = SpanBuilder::new(a.dim);
    for v in u.basis_vectors() {
        for t in &a.basis {
            span.insert(&t.apply(v));
        }
    }
    span.to_subspace()
}

/// Whether every generator maps `u` into itself.
pub fn is_invariant(a: &ActionAlgebra, u: &Subspace) -> bool {
    assert_eq!(u.ambient_dim(), a.dim);
    a.generating_operators()
        .iter()
        .all(|op| u.contains_subspace(&u.image(op)))
}
