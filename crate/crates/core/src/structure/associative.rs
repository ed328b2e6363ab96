use num_traits::{One, Zero};

use super::poly::{
    ceil_log2, first_relation, generic_coefficients, monic_from_relation, split_simple_roots,
};
use super::RadicalData;
use crate::action::generated_algebra;
use crate::error::{Error, Result};
use crate::lie::{bracket_subspaces, LieAlgebra};
use crate::linalg::{kernel, Matrix, Rational, SpanBuilder, Subspace};

const RETRIES: u64 = 8;

#[derive(Clone, Debug)]
pub struct A0Data {
    pub s: Subspace,
    /// Basis of the (non-unital) algebra generated by `ad S`.
    pub a0: Vec<Matrix>,
    /// Basis of its radical.
    pub radical: Vec<Matrix>,
    /// Basis of the semisimple complement, equal to `idempotents`.
    pub semisimple: Vec<Matrix>,
    pub idempotents: Vec<Matrix>,
}

fn flat(m: &Matrix) -> Vec<Rational> {
    m.as_slice().to_vec()
}

fn combine(coeffs: &[Rational], basis: &[Matrix], dim: usize) -> Matrix {
    let mut out = Matrix::zeros(dim, dim);
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            out = out.add(&b.scale(c));
        }
    }
    out
}

/// Radical `{x : tr(x a) = 0 for all a}` of the algebra spanned by `basis`,
/// which must be closed under products.
pub fn trace_radical(basis: &[Matrix]) -> Vec<Matrix> {
    let m = basis.len();
    if m == 0 {
        return Vec::new();
    }
    let dim = basis[0].rows();
    let gram = Matrix::from_fn(m, m, |i, j| basis[i].mul(&basis[j]).trace());
    kernel(&gram)
        .basis_vectors()
        .map(|c| combine(c, basis, dim))
        .collect()
}

/// Least `t` with `J^t = 0` for the nilpotent ideal spanned by `j`.
fn nilpotency_index(j: &[Matrix]) -> usize {
    if j.is_empty() {
        return 1;
    }
    let dim = j[0].rows();
    let mut power: Vec<Matrix> = j.to_vec();
    let mut t = 1;
    while !power.is_empty() {
        let mut span = SpanBuilder::new(dim * dim);
        let mut next = Vec::new();
        for p in &power {
            for x in j {
                let y = p.mul(x);
                if span.insert(&flat(&y)) {
                    next.push(y);
                }
            }
        }
        power = next;
        t += 1;
    }
    t
}

fn lift_idempotent(mut e: Matrix, steps: usize) -> Matrix {
    let two = Rational::from_integer(2.into());
    let three = Rational::from_integer(3.into());
    for _ in 0..steps {
        let e2 = e.mul(&e);
        if e2 == e {
            break;
        }
        let e3 = e2.mul(&e);
        e = e2.scale(&three).sub(&e3.scale(&two));
    }
    e
}

/// Polynomial without constant term evaluated at `a`.
fn eval_at(poly: &[Rational], a: &Matrix) -> Matrix {
    let n = a.rows();
    let mut out = Matrix::zeros(n, n);
    let mut power = Matrix::identity(n);
    for c in poly.iter().skip(1) {
        power = power.mul(a);
        if !c.is_zero() {
            out = out.add(&power.scale(c));
        }
    }
    out
}

/// Lagrange basis polynomials on the points `0, r_1, ..., r_q`, keeping only
/// those for the nonzero points; each vanishes at 0.
fn lagrange_at_roots(roots: &[Rational]) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for (i, ri) in roots.iter().enumerate() {
        // x / r_i * prod_{j != i} (x - r_j) / (r_i - r_j)
        let mut p = vec![Rational::zero(), Rational::one() / ri];
        for (j, rj) in roots.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = Rational::one() / (ri - rj);
            let mut next = vec![Rational::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                next[k + 1] += c * &d;
                next[k] -= c * &d * rj;
            }
            p = next;
        }
        out.push(p);
    }
    out
}

/// Wedderburn splitting of the algebra generated by `ad S` into orthogonal
/// idempotents plus its radical.
pub fn wedderburn_split(
    l: &LieAlgebra,
    rad: &RadicalData,
    b: &Subspace,
    s: &Subspace,
) -> Result<A0Data> {
    let n = l.dim();
    if !bracket_subspaces(l, b, s).is_zero() {
        return Err(Error::BSNotCommuting);
    }
    if !rad.radical.contains_subspace(s) {
        return Err(Error::DecompositionMismatch(
            "S is not contained in the radical".into(),
        ));
    }
    if !b.intersect(&rad.radical)?.is_zero() || b.dim() + rad.radical.dim() != n {
        return Err(Error::DecompositionMismatch(
            "B is not a complement of the radical".into(),
        ));
    }
    if rad.is_nilpotent && !s.is_zero() {
        // N = R, so B + S + N = L leaves no room for a nonzero S
        return Err(Error::DecompositionMismatch(
            "S must be zero when the radical is nilpotent".into(),
        ));
    }
    let ops: Vec<Matrix> = s.basis_vectors().map(|v| l.ad(v)).collect();
    let a0 = generated_algebra(n, &ops, false);
    let radical = trace_radical(&a0);
    let quotient_dim = a0.len() - radical.len();
    if quotient_dim == 0 {
        return Ok(A0Data {
            s: s.clone(),
            a0,
            radical,
            semisimple: Vec::new(),
            idempotents: Vec::new(),
        });
    }
    let jspace = Subspace::span(n * n, radical.iter().map(flat));
    let steps = ceil_log2(nilpotency_index(&radical)) + 2;

    for seed in 0..RETRIES {
        let a = combine(&generic_coefficients(seed, a0.len()), &a0, n);
        // first relation among a, a^2, ... modulo J
        let mut power = Matrix::identity(n);
        let rel = first_relation(
            |_| {
                power = power.mul(&a);
                flat(&power)
            },
            Some(&jspace),
            a0.len() + 1,
        )
        .expect("powers live in a finite-dimensional algebra");
        // relation a^k = sum_{i<k} c_i a^(i+1): polynomial x * g(x)
        let Some(roots) = split_simple_roots(&monic_from_relation(&rel)) else {
            continue;
        };
        if roots.iter().any(|r| r.is_zero()) || roots.len() != quotient_dim {
            continue;
        }
        let idempotents: Vec<Matrix> = lagrange_at_roots(&roots)
            .iter()
            .map(|p| lift_idempotent(eval_at(p, &a), steps))
            .collect();
        for (i, e) in idempotents.iter().enumerate() {
            if &e.mul(e) != e {
                return Err(Error::A0ShapeViolation(
                    "idempotent lifting did not converge".into(),
                ));
            }
            for f in &idempotents[i + 1..] {
                if !e.mul(f).is_zero() || !f.mul(e).is_zero() {
                    return Err(Error::A0ShapeViolation(
                        "lifted idempotents are not orthogonal".into(),
                    ));
                }
            }
        }
        let mut span = SpanBuilder::new(n * n);
        for x in radical.iter().chain(&idempotents) {
            span.insert(&flat(x));
        }
        if span.dim() != a0.len() {
            return Err(Error::A0ShapeViolation(
                "idempotents and radical do not span A0".into(),
            ));
        }
        return Ok(A0Data {
            s: s.clone(),
            a0,
            radical,
            semisimple: idempotents.clone(),
            idempotents,
        });
    }
    Err(Error::A0ShapeViolation(
        "A0 modulo its radical is not a sum of copies of the base field".into(),
    ))
}

/// Whether the unital algebra generated by `ops` has zero trace radical,
/// i.e. the space is a completely reducible module over it.
pub fn complete_reducibility_check(dim: usize, ops: &[Matrix]) -> bool {
    trace_radical(&generated_algebra(dim, ops, true)).is_empty()
}
