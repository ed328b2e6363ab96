//! Structural exponent: the largest total dimension of a tuple of distinct
//! `H`-simple components of `L/N` whose lifted bracket chains can be combined
//! into a nonzero left-normed commutator, plus the certificate checker for
//! ideal systems.

mod certificate;

pub use certificate::{
    annihilator, canonical_certificate, certify_dprime, Certificate, CertificatePair,
    CertifiedValue,
};

use std::collections::HashSet;

use num_traits::Zero;

use crate::action::ActionAlgebra;
use crate::error::{Error, Result};
use crate::lie::{bracket_subspaces, LieAlgebra};
use crate::linalg::{Matrix, Rational, Subquotient, Subspace};
use crate::structure::poly::{generic_coefficients, minimal_polynomial, rational_roots};
use crate::structure::{
    h_simple_grouping, levi_subalgebra, quotient_algebra, simple_decomposition, solvable_radical,
    RadicalData,
};

/// `(q, U_q)` for `U_0 = u0`, `U_{q+1} = [U_q, L]`, up to the first repeat.
pub fn reach_set(l: &LieAlgebra, u0: &Subspace) -> Vec<(usize, Subspace)> {
    let full = Subspace::full(l.dim());
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut out = Vec::new();
    let mut cur = u0.clone();
    let mut q = 0;
    while seen.insert(cur.clone()) {
        let next = bracket_subspaces(l, &cur, &full);
        out.push((q, cur));
        cur = next;
        q += 1;
    }
    out
}

/// Left-normed bracket `[[V_1, V_2], ..., V_r]` of subspaces.
pub fn left_normed(l: &LieAlgebra, parts: &[&Subspace]) -> Subspace {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        if acc.is_zero() {
            break;
        }
        acc = bracket_subspaces(l, &acc, p);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Exponent,
    Nilpotent,
}

/// A component of `L/N` lifted to `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedComponent {
    /// Indices of the simple ideals forming this `H`-simple component.
    pub simple_parts: Vec<usize>,
    pub dim: usize,
    /// `kappa(B_i)`.
    pub lifted: Subspace,
    /// `A kappa(B_i)`.
    pub orbit: Subspace,
    pub reach: Vec<(usize, Subspace)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentResult {
    pub d: usize,
    pub verdict: Verdict,
    pub witness_components: Vec<usize>,
    pub witness_q: Vec<usize>,
    pub witness_subspaces: Vec<Subspace>,
    pub components: Vec<LiftedComponent>,
    pub nilpotency: usize,
    pub warnings: Vec<String>,
}

/// Odometer over `sizes` with the first position varying fastest; calls `f`
/// until it returns `true`.
fn odometer(sizes: &[usize], mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if sizes.contains(&0) {
        return None;
    }
    let mut idx = vec![0; sizes.len()];
    loop {
        if f(&idx) {
            return Some(idx);
        }
        let mut k = 0;
        loop {
            if k == sizes.len() {
                return None;
            }
            idx[k] += 1;
            if idx[k] < sizes[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// First choice `V_j` in the reach sets with nonzero left-normed bracket.
pub(crate) fn search_chains(
    l: &LieAlgebra,
    reaches: &[&[(usize, Subspace)]],
) -> Option<Vec<usize>> {
    let sizes: Vec<usize> = reaches.iter().map(|r| r.len()).collect();
    odometer(&sizes, |idx| {
        let parts: Vec<&Subspace> = idx.iter().zip(reaches).map(|(&i, r)| &r[i].1).collect();
        !left_normed(l, &parts).is_zero()
    })
}

/// Ordered tuples of distinct indices, by decreasing total weight and then
/// lexicographically.
fn ordered_tuples(weights: &[usize]) -> Vec<Vec<usize>> {
    let k = weights.len();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
    while let Some(t) = stack.pop() {
        for i in 0..k {
            if !t.contains(&i) {
                let mut u = t.clone();
                u.push(i);
                stack.push(u);
            }
        }
        out.push(t);
    }
    let total = |t: &Vec<usize>| t.iter().map(|&i| weights[i]).sum::<usize>();
    out.sort_by(|a, b| total(b).cmp(&total(a)).then_with(|| a.cmp(b)));
    out
}

/// Exponent for an algebra whose solvable radical is nilpotent.
pub fn structural_exponent(l: &LieAlgebra, a: &ActionAlgebra) -> Result<ExponentResult> {
    let rad = solvable_radical(l)?;
    check_radical(&rad, a)?;
    let levi = levi_subalgebra(l, &rad)?;
    exponent_from_section(l, a, &rad, &levi.kappa)
}

/// The same computation with a caller-supplied Levi section `kappa`
/// (`dim L x dim L/R`, in the quotient coordinates of [`quotient_algebra`]).
pub fn structural_exponent_with_section(
    l: &LieAlgebra,
    a: &ActionAlgebra,
    kappa: &Matrix,
) -> Result<ExponentResult> {
    let rad = solvable_radical(l)?;
    check_radical(&rad, a)?;
    exponent_from_section(l, a, &rad, kappa)
}

fn check_radical(rad: &RadicalData, a: &ActionAlgebra) -> Result<()> {
    if !rad.is_nilpotent {
        return Err(Error::RadicalNotNilpotent);
    }
    if !a.is_invariant(&rad.radical) {
        return Err(Error::RadicalNotInvariant);
    }
    Ok(())
}

fn exponent_from_section(
    l: &LieAlgebra,
    a: &ActionAlgebra,
    rad: &RadicalData,
    kappa: &Matrix,
) -> Result<ExponentResult> {
    let quot = quotient_algebra(l, &rad.radical)?;
    let q = quot.algebra.dim();
    if kappa.rows() != l.dim() || kappa.cols() != q {
        return Err(Error::InvalidLevi("section has the wrong shape".into()));
    }
    if quot.projection.mul(kappa) != Matrix::identity(q) {
        return Err(Error::InvalidLevi(
            "section is not right inverse to the projection".into(),
        ));
    }
    for i in 0..q {
        for j in i + 1..q {
            let lhs = kappa.apply(quot.algebra.basis_bracket(i, j));
            if lhs != l.bracket(&kappa.column(i), &kappa.column(j)) {
                return Err(Error::InvalidLevi(
                    "section does not preserve brackets".into(),
                ));
            }
        }
    }
    let dec = simple_decomposition(&quot.algebra)?;
    let induced = a
        .induced(&Subquotient::quotient(&rad.radical))
        .ok_or(Error::RadicalNotInvariant)?;
    let groups = h_simple_grouping(&dec, &induced)?;
    let mut components = Vec::with_capacity(groups.len());
    for g in groups {
        let mut sum = Subspace::zero(q);
        for &i in &g {
            sum = sum.sum(&dec.components[i])?;
        }
        let lifted = sum.image(kappa);
        let orbit = a.apply_to_subspace(&lifted);
        let reach = reach_set(l, &orbit);
        components.push(LiftedComponent {
            simple_parts: g,
            dim: sum.dim(),
            lifted,
            orbit,
            reach,
        });
    }
    let mut warnings = Vec::new();
    if let Some(w) = split_warning(a) {
        warnings.push(w);
    }
    let nilpotency = rad.nilpotency.expect("nilpotent radical");

    let weights: Vec<usize> = components.iter().map(|c| c.dim).collect();
    for tuple in ordered_tuples(&weights) {
        let reaches: Vec<&[(usize, Subspace)]> = tuple
            .iter()
            .map(|&i| components[i].reach.as_slice())
            .collect();
        if let Some(idx) = search_chains(l, &reaches) {
            let witness_subspaces: Vec<Subspace> = idx
                .iter()
                .zip(&reaches)
                .map(|(&k, r)| r[k].1.clone())
                .collect();
            let witness_q: Vec<usize> = idx.iter().zip(&reaches).map(|(&k, r)| r[k].0).collect();
            let refs: Vec<&Subspace> = witness_subspaces.iter().collect();
            if left_normed(l, &refs).is_zero() {
                return Err(Error::InternalInconsistency(
                    "witness bracket vanishes".into(),
                ));
            }
            let d = tuple.iter().map(|&i| weights[i]).sum();
            return Ok(ExponentResult {
                d,
                verdict: Verdict::Exponent,
                witness_components: tuple,
                witness_q,
                witness_subspaces,
                components,
                nilpotency,
                warnings,
            });
        }
    }
    Ok(ExponentResult {
        d: 0,
        verdict: Verdict::Nilpotent,
        witness_components: Vec::new(),
        witness_q: Vec::new(),
        witness_subspaces: Vec::new(),
        components,
        nilpotency,
        warnings,
    })
}

/// Heuristic: a generic central element of the action algebra whose minimal
/// polynomial has an irreducible factor of degree > 1 means the algebra does
/// not split over the rationals.
pub fn split_warning(a: &ActionAlgebra) -> Option<String> {
    if a.is_trivial() {
        return None;
    }
    let basis = a.basis();
    let n = a.ambient_dim();
    let gens = a.generating_operators();
    // unknown coefficients c with sum c_i [B_i, g] = 0 for every generator g
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in &gens {
        let comms: Vec<Matrix> = basis.iter().map(|b| b.mul(g).sub(&g.mul(b))).collect();
        for e in 0..n * n {
            rows.push(comms.iter().map(|c| c.as_slice()[e].clone()).collect());
        }
    }
    let center = crate::linalg::kernel(&Matrix::from_rows(basis.len(), rows));
    let coeffs = generic_coefficients(0, center.dim());
    let mut z = Matrix::zeros(n, n);
    for (c, v) in coeffs.iter().zip(center.basis_vectors()) {
        for (x, b) in v.iter().zip(basis) {
            if !x.is_zero() {
                z = z.add(&b.scale(&(c * x)));
            }
        }
    }
    match rational_roots(&minimal_polynomial(&z)) {
        Some((_, rest)) if rest.len() <= 1 => None,
        _ => Some("action algebra does not appear to split over the rationals; the value may differ over an algebraically closed field".into()),
    }
}
