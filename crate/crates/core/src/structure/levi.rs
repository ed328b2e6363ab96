use num_traits::Zero;

use super::{quotient_algebra, RadicalData};
use crate::error::{Error, Result};
use crate::lie::{is_subalgebra, LieAlgebra};
use crate::linalg::{Matrix, Rational, Subquotient, Subspace};

#[derive(Clone, Debug)]
pub struct LeviData {
    pub levi: Subspace,
    /// `dim L x dim L/R`, a bracket-preserving section.
    pub kappa: Matrix,
    /// `dim L/R x dim L`.
    pub pi: Matrix,
    pub quotient: LieAlgebra,
}

impl LeviData {
    /// `kappa([x, y]) - [kappa x, kappa y]` on the quotient basis pair `(a, b)`.
    pub fn defect(&self, l: &LieAlgebra, a: usize, b: usize) -> Vec<Rational> {
        defect(l, &self.quotient, &self.kappa, a, b)
    }
}

fn defect(l: &LieAlgebra, q: &LieAlgebra, kappa: &Matrix, a: usize, b: usize) -> Vec<Rational> {
    let lhs = kappa.apply(q.basis_bracket(a, b));
    let rhs = l.bracket(&kappa.column(a), &kappa.column(b));
    lhs.into_iter().zip(rhs).map(|(x, y)| x - y).collect()
}

const EXACT: &str = "section is not a homomorphism after the last stage";

/// Levi subalgebra of an algebra with nilpotent radical, by correcting a
/// linear section stage by stage along the lower central series of `R`.
pub fn levi_subalgebra(l: &LieAlgebra, rad: &RadicalData) -> Result<LeviData> {
    if !rad.is_nilpotent {
        return Err(Error::RadicalNotNilpotent);
    }
    let quot = quotient_algebra(l, &rad.radical)?;
    let q = quot.algebra.dim();
    let n = l.dim();
    let mut kappa = quot.section.clone();

    for stage in rad.lower_central.windows(2) {
        let (upper, lower) = (&stage[0], &stage[1]);
        let sq = Subquotient::new(upper, lower)?;
        let m = sq.dim();
        if m == 0 || q == 0 {
            continue;
        }
        let reps: Vec<Vec<Rational>> = sq
            .representatives()
            .basis_vectors()
            .map(|r| r.to_vec())
            .collect();
        let kcols = kappa.columns();
        // unknowns c[(c_idx, t)]: delta(e_c) = sum_t c * reps[t]
        let unknowns = q * m;
        let pairs: Vec<(usize, usize)> = (0..q)
            .flat_map(|a| (a + 1..q).map(move |b| (a, b)))
            .collect();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(pairs.len() * m);
        let mut rhs: Vec<Rational> = Vec::with_capacity(pairs.len() * m);
        let project = |v: &[Rational]| sq.coords(v).expect("term lies in the stage");
        for &(a, b) in &pairs {
            let mut block = vec![vec![Rational::zero(); unknowns]; m];
            let qab = quot.algebra.basis_bracket(a, b);
            for t in 0..m {
                let r = project(&reps[t]);
                for c in 0..q {
                    if !qab[c].is_zero() {
                        for (row, x) in block.iter_mut().zip(&r) {
                            row[c * m + t] += &qab[c] * x;
                        }
                    }
                }
                let left = project(&l.bracket(&kcols[a], &reps[t]));
                for (row, x) in block.iter_mut().zip(&left) {
                    row[b * m + t] -= x;
                }
                let right = project(&l.bracket(&reps[t], &kcols[b]));
                for (row, x) in block.iter_mut().zip(&right) {
                    row[a * m + t] -= x;
                }
            }
            let d = defect(l, &quot.algebra, &kappa, a, b);
            let dp = sq.coords(&d).ok_or_else(|| {
                Error::InternalInconsistency("Levi defect left the current stage".into())
            })?;
            rows.extend(block);
            rhs.extend(dp.into_iter().map(|x| -x));
        }
        if rows.is_empty() {
            continue;
        }
        let sys = Matrix::from_rows(unknowns, rows);
        let sol = sys.solve(&rhs).ok_or(Error::NoSolution)?;
        let mut delta = Matrix::zeros(n, q);
        for c in 0..q {
            for t in 0..m {
                let s = &sol[c * m + t];
                if s.is_zero() {
                    continue;
                }
                for (i, x) in reps[t].iter().enumerate() {
                    if !x.is_zero() {
                        delta[(i, c)] += s * x;
                    }
                }
            }
        }
        kappa = kappa.add(&delta);
    }

    for a in 0..q {
        for b in a + 1..q {
            if defect(l, &quot.algebra, &kappa, a, b)
                .iter()
                .any(|x| !x.is_zero())
            {
                return Err(Error::InternalInconsistency(EXACT.into()));
            }
        }
    }
    let levi = Subspace::column_space(&kappa);
    debug_assert!(is_subalgebra(l, &levi));
    Ok(LeviData {
        levi,
        kappa,
        pi: quot.projection,
        quotient: quot.algebra,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::solvable_radical;
    use super::*;
    use crate::lie::LieAlgebra;
    use crate::linalg::int;

    fn levi(l: &LieAlgebra) -> LeviData {
        levi_subalgebra(l, &solvable_radical(l).unwrap()).unwrap()
    }

    #[test]
    fn trivial_cases() {
        let d = levi(&sl2());
        assert!(d.levi.is_full());
        assert_eq!(d.kappa, Matrix::identity(3));
        assert!(levi(&heisenberg()).levi.is_zero());
    }

    #[test]
    fn bahturin_levi_is_the_matrix_block() {
        let d = levi(&bahturin());
        assert_eq!(d.levi, Subspace::unit(7, 0..3));
        assert_eq!(d.pi.mul(&d.kappa), Matrix::identity(3));
    }

    #[test]
    fn skewed_basis_needs_correction() {
        // Bahturin in the basis e + d12, h + d11 - d22, f + d21, d.. where the
        // naive section is not a homomorphism
        let l = bahturin();
        let mut p = Matrix::identity(7);
        p[(4, 0)] = int(1);
        p[(3, 1)] = int(1);
        p[(6, 1)] = int(-1);
        p[(5, 2)] = int(1);
        p[(4, 2)] = int(3);
        let t = l.transport(&p).unwrap();
        let d = levi(&t);
        assert_eq!(d.levi.dim(), 3);
        assert_eq!(d.pi.mul(&d.kappa), Matrix::identity(3));
        for a in 0..3 {
            for b in 0..3 {
                assert!(d.defect(&t, a, b).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn non_nilpotent_radical_is_refused() {
        let l = solvable2();
        let rad = solvable_radical(&l).unwrap();
        assert_eq!(
            levi_subalgebra(&l, &rad).unwrap_err(),
            Error::RadicalNotNilpotent
        );
    }
}
