//! Structural decompositions: radical, quotients, Levi sections, simple
//! components of the semisimple quotient and the associative algebra
//! generated by `ad S`.

mod associative;
mod levi;
pub mod poly;
mod simple;

pub use associative::{complete_reducibility_check, trace_radical, wedderburn_split, A0Data};
pub use levi::{levi_subalgebra, LeviData};
pub use simple::{h_simple_grouping, simple_decomposition, SemisimpleDecomposition};

use crate::error::{Error, Result};
use crate::lie::{bracket_subspaces, is_ideal, killing_form, series, LieAlgebra, SeriesMode};
use crate::linalg::{kernel, Matrix, Rational, Subquotient, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalData {
    pub radical: Subspace,
    pub is_nilpotent: bool,
    /// Least `p` with `R^p = 0` for a nilpotent radical (1 when `R = 0`).
    pub nilpotency: Option<usize>,
    /// Lower central series of `R`, starting with `R`.
    pub lower_central: Vec<Subspace>,
}

/// Solvable radical as the Killing-orthogonal complement of `[L, L]`.
pub fn solvable_radical(l: &LieAlgebra) -> Result<RadicalData> {
    let n = l.dim();
    let full = Subspace::full(n);
    let derived = bracket_subspaces(l, &full, &full);
    let k = killing_form(l);
    let radical = if derived.is_zero() {
        full.clone()
    } else {
        kernel(&derived.basis().mul(&k))
    };
    if !is_ideal(l, &radical) {
        return Err(Error::InternalInconsistency(
            "Killing-orthogonal of [L,L] is not an ideal".into(),
        ));
    }
    let ds = series(l, &radical, SeriesMode::Derived)?;
    if !ds.last().unwrap().is_zero() {
        return Err(Error::InternalInconsistency(
            "candidate radical is not solvable".into(),
        ));
    }
    let lower_central = series(l, &radical, SeriesMode::LowerCentral)?;
    let is_nilpotent = lower_central.last().unwrap().is_zero();
    let nilpotency = is_nilpotent.then_some(lower_central.len());
    Ok(RadicalData {
        radical,
        is_nilpotent,
        nilpotency,
        lower_central,
    })
}

/// `L / I` on the representatives of the complement of the pivot columns of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `dim L/I x dim L`.
    pub projection: Matrix,
    /// `dim L x dim L/I`, the representatives as columns.
    pub section: Matrix,
    pub subquotient: Subquotient,
}

pub fn quotient_algebra(l: &LieAlgebra, ideal: &Subspace) -> Result<Quotient> {
    if ideal.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: ideal.ambient_dim(),
        });
    }
    if !is_ideal(l, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let sq = Subquotient::quotient(ideal);
    let q = sq.dim();
    let reps: Vec<Vec<Rational>> = sq
        .representatives()
        .basis_vectors()
        .map(|r| r.to_vec())
        .collect();
    let mut table = Vec::with_capacity(q * q * q);
    for a in &reps {
        for b in &reps {
            table.extend(sq.coords(&l.bracket(a, b)).expect("ideal quotient"));
        }
    }
    let labels = sq
        .representatives()
        .pivots()
        .iter()
        .map(|&p| l.labels()[p].clone())
        .collect();
    let algebra = LieAlgebra::from_table(format!("{}/I", l.name()), q, table)?.with_labels(labels);
    Ok(Quotient {
        algebra,
        projection: sq.projection(),
        section: sq.section(),
        subquotient: sq,
    })
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::lie::validate_algebra;

    #[test]
    fn fixtures_are_valid() {
        for l in [sl2(), sl2_plus_sl2(), heisenberg(), solvable2(), bahturin()] {
            assert!(validate_algebra(&l).is_valid(), "{}", l.name());
        }
    }

    #[test]
    fn radicals() {
        let r = solvable_radical(&sl2()).unwrap();
        assert!(r.radical.is_zero() && r.is_nilpotent);
        assert_eq!(r.nilpotency, Some(1));

        let r = solvable_radical(&heisenberg()).unwrap();
        assert!(r.radical.is_full() && r.is_nilpotent);
        assert_eq!(r.nilpotency, Some(3));

        let r = solvable_radical(&bahturin()).unwrap();
        assert_eq!(r.radical, Subspace::unit(7, 3..7));
        assert_eq!(r.nilpotency, Some(2));

        let r = solvable_radical(&solvable2()).unwrap();
        assert!(r.radical.is_full() && !r.is_nilpotent);
        assert_eq!(r.nilpotency, None);
    }

    #[test]
    fn quotients() {
        let l = bahturin();
        let q = quotient_algebra(&l, &Subspace::unit(7, 3..7)).unwrap();
        assert_eq!(q.algebra.dim(), 3);
        assert_eq!(q.algebra.entries(), sl2().entries());
        assert_eq!(q.projection.mul(&q.section), Matrix::identity(3));

        let all = quotient_algebra(&l, &Subspace::full(7)).unwrap();
        assert_eq!(all.algebra.dim(), 0);

        let same = quotient_algebra(&l, &Subspace::zero(7)).unwrap();
        assert_eq!(same.projection, Matrix::identity(7));
        assert_eq!(same.algebra.entries(), l.entries());

        assert_eq!(
            quotient_algebra(&l, &Subspace::unit(7, [0])).unwrap_err(),
            Error::NotAnIdeal
        );
    }
}
