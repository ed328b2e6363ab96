use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
    #[error("malformed rational literal {0:?}")]
    InvalidRational(String),
    #[error("structure constants violate the Lie algebra axioms: {0}")]
    InvalidAlgebra(String),
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("generator {generator:?} is not compatible with the bracket on basis pair ({i}, {j})")]
    CompatibilityViolation {
        generator: String,
        i: usize,
        j: usize,
    },
    #[error("automorphism generator {0:?} is singular")]
    SingularAutomorphism(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("formula requires R = N: solvable radical is not nilpotent")]
    RadicalNotNilpotent,
    #[error("formula requires an H-invariant radical: the action does not preserve the solvable radical")]
    RadicalNotInvariant,
    #[error("Levi lifting has no solution (invalid input algebra)")]
    NoSolution,
    #[error("algebra is not semisimple (degenerate Killing form)")]
    NotSemisimple,
    #[error("a simple component is not absolutely simple (centroid of dimension {centroid_dim}); the formula is stated over an algebraically closed field")]
    NonSplitComponent { centroid_dim: usize },
    #[error("sum of a component group is not invariant under the induced action")]
    GroupSumNotInvariant,
    #[error("[B, S] != 0")]
    BSNotCommuting,
    #[error("decomposition mismatch: {0}")]
    DecompositionMismatch(String),
    #[error("semisimple part of A0 is not a sum of copies of the base field: {0}")]
    A0ShapeViolation(String),
    #[error("arguments are not ideals")]
    NotIdeals,
    #[error("J is not contained in I")]
    NotNested,
    #[error("pair {0}: I/J is not an absolutely irreducible (H, L)-module")]
    ConditionOneFails(usize),
    #[error("pair {index}: complement T is invalid: {reason}")]
    ComplementInvalid { index: usize, reason: String },
    #[error("no choice of chain lengths gives a nonzero bracket of the complements")]
    ConditionTwoPrimeFails,
    #[error("pair {0}: I and J must be H-invariant ideals with J contained in I")]
    NotInvariantIdeal(usize),
    #[error("supplied Levi subalgebra is invalid: {0}")]
    InvalidLevi(String),
    #[error("evaluation matrix needs {required} entries, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("cocharacter multiplicity for {partition:?} is {value}, not a nonnegative integer")]
    NonIntegralMultiplicity {
        partition: Vec<usize>,
        value: String,
    },
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input is malformed or violates the axioms it claims.
    Input,
    /// The input is fine but the requested computation does not apply to it.
    Refusal,
    /// A bug or a broken invariant.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            DimensionMismatch { .. }
            | IndexOutOfRange { .. }
            | ZeroDenominator(_)
            | InvalidRational(_)
            | InvalidAlgebra(_)
            | CompatibilityViolation { .. }
            | SingularAutomorphism(_) => ErrorKind::Input,
            InternalInconsistency(_) | NonIntegralMultiplicity { .. } => ErrorKind::Internal,
            _ => ErrorKind::Refusal,
        }
    }
}
