use num_traits::Zero;

use super::{reach_set, search_chains, ExponentResult};
use crate::action::{generated_algebra, ActionAlgebra};
use crate::error::{Error, Result};
use crate::lie::{is_ideal, is_subalgebra, LieAlgebra};
use crate::linalg::{kernel, Matrix, Rational, Subquotient, Subspace};
use crate::structure::{levi_subalgebra, solvable_radical, wedderburn_split};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificatePair {
    pub i: Subspace,
    pub j: Subspace,
    pub t: Option<Subspace>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub pairs: Vec<CertificatePair>,
    pub s: Option<Subspace>,
    pub b: Option<Subspace>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedValue {
    /// `dim L - dim` of the intersection of the annihilators.
    pub value: usize,
    pub q: Vec<usize>,
    pub annihilator: Subspace,
}

/// `{x : [x, I] ⊆ J}` for ideals `J ⊆ I`.
pub fn annihilator(l: &LieAlgebra, i: &Subspace, j: &Subspace) -> Result<Subspace> {
    if !is_ideal(l, i) || !is_ideal(l, j) {
        return Err(Error::NotIdeals);
    }
    if !i.contains_subspace(j) {
        return Err(Error::NotNested);
    }
    Ok(ann(l, i, j))
}

fn ann(l: &LieAlgebra, i: &Subspace, j: &Subspace) -> Subspace {
    let n = l.dim();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for b in i.basis_vectors() {
        // column c of the block: [e_c, b] reduced modulo J
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|c| j.reduce(&l.bracket(&l.unit(c), b)))
            .collect();
        for r in 0..n {
            let row: Vec<Rational> = cols.iter().map(|col| col[r].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    kernel(&Matrix::from_rows(n, rows))
}

fn preserves(op: &Matrix, u: &Subspace) -> bool {
    u.contains_subspace(&u.image(op))
}

/// Checks a certificate and returns the value it witnesses.
pub fn certify_dprime(
    l: &LieAlgebra,
    a: &ActionAlgebra,
    cert: &Certificate,
) -> Result<CertifiedValue> {
    let n = l.dim();
    for (k, p) in cert.pairs.iter().enumerate() {
        let ok = p.i.ambient_dim() == n
            && p.j.ambient_dim() == n
            && is_ideal(l, &p.i)
            && is_ideal(l, &p.j)
            && p.i.contains_subspace(&p.j)
            && a.is_invariant(&p.i)
            && a.is_invariant(&p.j);
        if !ok {
            return Err(Error::NotInvariantIdeal(k));
        }
    }
    let rad = solvable_radical(l)?;
    let b = match &cert.b {
        Some(b) => {
            if b.ambient_dim() != n || !is_subalgebra(l, b) {
                return Err(Error::InvalidLevi("B is not a subalgebra".into()));
            }
            if !b.intersect(&rad.radical)?.is_zero() || b.dim() + rad.radical.dim() != n {
                return Err(Error::InvalidLevi(
                    "B is not a complement of the radical".into(),
                ));
            }
            b.clone()
        }
        None => levi_subalgebra(l, &rad)?.levi,
    };
    let s = cert.s.clone().unwrap_or_else(|| Subspace::zero(n));
    let a0 = wedderburn_split(l, &rad, &b, &s)?;

    let ad_all = l.ad_basis();
    let action_ops = a.generating_operators();
    for (k, p) in cert.pairs.iter().enumerate() {
        let sq = Subquotient::new(&p.i, &p.j)?;
        let m = sq.dim();
        if m == 0 {
            return Err(Error::ConditionOneFails(k));
        }
        let induced: Vec<Matrix> = ad_all
            .iter()
            .chain(&action_ops)
            .map(|op| sq.induced(op).expect("invariant ideals"))
            .collect();
        if generated_algebra(m, &induced, true).len() != m * m {
            return Err(Error::ConditionOneFails(k));
        }
    }

    let ad_b: Vec<Matrix> = b.basis_vectors().map(|v| l.ad(v)).collect();
    let mut complements = Vec::with_capacity(cert.pairs.len());
    for (k, p) in cert.pairs.iter().enumerate() {
        let invalid = |reason: &str| Error::ComplementInvalid {
            index: k,
            reason: reason.into(),
        };
        let t = p.t.as_ref().ok_or_else(|| invalid("missing"))?;
        if t.ambient_dim() != n || !p.i.contains_subspace(t) {
            return Err(invalid("T is not contained in I"));
        }
        if !t.intersect(&p.j)?.is_zero() || t.dim() + p.j.dim() != p.i.dim() {
            return Err(invalid("I is not the direct sum of J and T"));
        }
        if !a.is_invariant(t) {
            return Err(invalid("T is not invariant under the action"));
        }
        if !ad_b.iter().all(|op| preserves(op, t)) {
            return Err(invalid("T is not invariant under ad B"));
        }
        if !a0.semisimple.iter().all(|op| preserves(op, t)) {
            return Err(invalid(
                "T is not invariant under the semisimple part of A0",
            ));
        }
        complements.push(t.clone());
    }

    let reaches: Vec<Vec<(usize, Subspace)>> =
        complements.iter().map(|t| reach_set(l, t)).collect();
    let refs: Vec<&[(usize, Subspace)]> = reaches.iter().map(|r| r.as_slice()).collect();
    let idx = if refs.is_empty() {
        Vec::new()
    } else {
        search_chains(l, &refs).ok_or(Error::ConditionTwoPrimeFails)?
    };
    let q: Vec<usize> = idx.iter().zip(&reaches).map(|(&i, r)| r[i].0).collect();

    let mut annihilator = Subspace::full(n);
    for p in &cert.pairs {
        annihilator = annihilator.intersect(&ann(l, &p.i, &p.j))?;
    }
    Ok(CertifiedValue {
        value: n - annihilator.dim(),
        q,
        annihilator,
    })
}

/// Certificate built from an exponent witness: `I_k = L`, `J_k` the preimage
/// of the other components, `T_k` the lifted witness component.
pub fn canonical_certificate(l: &LieAlgebra, result: &ExponentResult) -> Result<Certificate> {
    let n = l.dim();
    let rad = solvable_radical(l)?;
    let mut pairs = Vec::new();
    for &w in &result.witness_components {
        let mut j = rad.radical.clone();
        for (c, comp) in result.components.iter().enumerate() {
            if c != w {
                j = j.sum(&comp.lifted)?;
            }
        }
        pairs.push(CertificatePair {
            i: Subspace::full(n),
            j,
            t: Some(result.components[w].lifted.clone()),
        });
    }
    let b = result
        .components
        .iter()
        .try_fold(Subspace::zero(n), |acc, c| acc.sum(&c.lifted))?;
    Ok(Certificate {
        pairs,
        s: None,
        b: Some(b),
    })
}

#[cfg(test)]
mod tests {
    use super::super::structural_exponent;
    use super::super::tests::{glue10, phi};
    use super::*;
    use crate::action::ActionGenerator;
    use crate::structure::fixtures::*;

    fn n_block() -> Subspace {
        Subspace::unit(7, 3..7)
    }

    #[test]
    fn annihilators() {
        let s = sl2();
        assert!(annihilator(&s, &Subspace::full(3), &Subspace::zero(3))
            .unwrap()
            .is_zero());
        assert!(annihilator(&s, &Subspace::full(3), &Subspace::full(3))
            .unwrap()
            .is_full());
        let l = bahturin();
        assert_eq!(
            annihilator(&l, &n_block(), &Subspace::zero(7)).unwrap(),
            n_block()
        );
        assert_eq!(
            annihilator(&l, &Subspace::unit(7, [0]), &Subspace::zero(7)).unwrap_err(),
            Error::NotIdeals
        );
        assert_eq!(
            annihilator(&l, &n_block(), &Subspace::full(7)).unwrap_err(),
            Error::NotNested
        );
    }

    #[test]
    fn bahturin_certificates() {
        let l = bahturin();
        let triv = ActionAlgebra::trivial(7);
        let good = Certificate {
            pairs: vec![CertificatePair {
                i: Subspace::full(7),
                j: n_block(),
                t: Some(Subspace::unit(7, 0..3)),
            }],
            ..Default::default()
        };
        let v = certify_dprime(&l, &triv, &good).unwrap();
        assert_eq!((v.value, v.q.clone()), (3, vec![0]));
        assert_eq!(v.annihilator, n_block());

        let bad = Certificate {
            pairs: vec![CertificatePair {
                i: n_block(),
                j: Subspace::zero(7),
                t: Some(n_block()),
            }],
            ..Default::default()
        };
        assert_eq!(
            certify_dprime(&l, &triv, &bad).unwrap_err(),
            Error::ConditionOneFails(0)
        );

        let phi_action =
            ActionAlgebra::build(&l, vec![ActionGenerator::automorphism("phi", phi())]).unwrap();
        assert_eq!(
            certify_dprime(&l, &phi_action, &bad).unwrap_err(),
            Error::ConditionOneFails(0)
        );
        assert!(matches!(
            certify_dprime(&l, &phi_action, &good),
            Err(Error::ComplementInvalid { index: 0, .. })
        ));

        let not_ideal = Certificate {
            pairs: vec![CertificatePair {
                i: Subspace::unit(7, [0]),
                j: Subspace::zero(7),
                t: None,
            }],
            ..Default::default()
        };
        assert_eq!(
            certify_dprime(&l, &triv, &not_ideal).unwrap_err(),
            Error::NotInvariantIdeal(0)
        );
    }

    #[test]
    fn canonical_certificates_reach_the_exponent() {
        for l in [sl2(), sl2_plus_sl2(), bahturin(), glue10()] {
            let a = ActionAlgebra::trivial(l.dim());
            let r = structural_exponent(&l, &a).unwrap();
            let cert = canonical_certificate(&l, &r).unwrap();
            let v = certify_dprime(&l, &a, &cert).unwrap();
            assert_eq!(v.value, r.d, "{}", l.name());
        }
    }
}
