//! Univariate polynomials over the rationals, just enough for minimal
//! polynomials and their rational roots. Coefficients are stored lowest
//! degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{Matrix, Rational, Subspace};

/// Trial division stops here; larger unfactored cofactors make root
/// enumeration give up.
const TRIAL_LIMIT: u64 = 1 << 20;

pub fn evaluate(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Divides by `x - r`, assuming `r` is a root.
fn deflate(coeffs: &[Rational], r: &Rational) -> Vec<Rational> {
    let d = coeffs.len() - 1;
    let mut out = vec![Rational::zero(); d];
    let mut carry = Rational::zero();
    for k in (1..=d).rev() {
        carry = &coeffs[k] + carry * r;
        out[k - 1] = carry.clone();
    }
    out
}

/// Coefficients `c` of the first linear relation `v_k = sum_{i<k} c_i v_i`
/// in the sequence produced by `next`, reduced modulo `modulo` when given.
/// Returns `None` if no relation appears within `max_len` terms.
pub fn first_relation(
    mut next: impl FnMut(usize) -> Vec<Rational>,
    modulo: Option<&Subspace>,
    max_len: usize,
) -> Option<Vec<Rational>> {
    let mut seen: Vec<Vec<Rational>> = Vec::new();
    for k in 0..=max_len {
        let mut v = next(k);
        if let Some(m) = modulo {
            v = m.reduce(&v);
        }
        if seen.is_empty() {
            if v.iter().all(|x| x.is_zero()) {
                return Some(Vec::new());
            }
        } else {
            let a = Matrix::from_columns(v.len(), &seen);
            if let Some(c) = a.solve(&v) {
                return Some(c);
            }
        }
        seen.push(v);
    }
    None
}

/// Monic minimal polynomial of a square matrix.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Rational> {
    let n = m.rows();
    let mut power = Matrix::identity(n);
    let rel = first_relation(
        |k| {
            if k > 0 {
                power = power.mul(m);
            }
            power.as_slice().to_vec()
        },
        None,
        n,
    )
    .expect("Cayley-Hamilton bounds the degree");
    monic_from_relation(&rel)
}

/// `x^k - sum c_i x^i` for a relation of length `k`.
pub fn monic_from_relation(rel: &[Rational]) -> Vec<Rational> {
    let mut p: Vec<Rational> = rel.iter().map(|c| -c).collect();
    p.push(Rational::one());
    p
}

fn integer_coefficients(coeffs: &[Rational]) -> Vec<BigInt> {
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect()
}

/// Prime factorization by trial division, or `None` when a cofactor is too
/// large to be certified prime.
fn factor(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d < TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let limit = BigInt::from(TRIAL_LIMIT);
        if n >= &limit * &limit {
            return None;
        }
        out.push((n, 1));
    }
    Some(out)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factor(n)? {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut x = d.clone();
            for _ in 0..=e {
                next.push(x.clone());
                x *= &p;
            }
        }
        out = next;
    }
    Some(out)
}

/// Roots with multiplicities and the cofactor.
pub type RootSplit = (Vec<(Rational, usize)>, Vec<Rational>);

/// Rational roots with multiplicities, plus the remaining factor with no
/// rational roots. `None` when coefficients are too large to enumerate
/// divisors.
pub fn rational_roots(coeffs: &[Rational]) -> Option<RootSplit> {
    let mut p: Vec<Rational> = coeffs.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let mut zero_mult = 0;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if p.len() > 1 {
        let ints = integer_coefficients(&p);
        let nums = divisors(&ints[0])?;
        let dens = divisors(ints.last().unwrap())?;
        let mut candidates: Vec<Rational> = Vec::new();
        for a in &nums {
            for b in &dens {
                let r = Rational::new(a.clone(), b.clone());
                for c in [r.clone(), -r] {
                    if !candidates.contains(&c) {
                        candidates.push(c);
                    }
                }
            }
        }
        candidates.sort();
        for c in candidates {
            let mut mult = 0;
            while p.len() > 1 && evaluate(&p, &c).is_zero() {
                p = deflate(&p, &c);
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Some((roots, p))
}

/// The distinct roots when `coeffs` is squarefree and splits over the
/// rationals.
pub fn split_simple_roots(coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let (roots, rest) = rational_roots(coeffs)?;
    if rest.len() != 1 || roots.iter().any(|(_, m)| *m > 1) {
        return None;
    }
    Some(roots.into_iter().map(|(r, _)| r).collect())
}

/// Small nonzero integer coefficients for generic combinations.
pub fn generic_coefficients(seed: u64, count: usize) -> Vec<Rational> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut v: i64 = rng.gen_range(-16..=16);
            if v == 0 {
                v = 17;
            }
            Rational::from_integer(v.into())
        })
        .collect()
}

/// `ceil(log2(n))` for `n >= 1`.
pub fn ceil_log2(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    #[test]
    fn roots_with_multiplicity() {
        // (x - 1/2)^2 (x + 3) x = x^4 + 2x^3 - 11/4 x^2 + 3/4 x
        let p = vec![int(0), ratio(3, 4), ratio(-11, 4), int(2), int(1)];
        let (roots, rest) = rational_roots(&p).unwrap();
        assert_eq!(roots, vec![(int(-3), 1), (int(0), 1), (ratio(1, 2), 2)]);
        assert_eq!(rest, vec![int(1)]);
        assert!(split_simple_roots(&p).is_none());
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        let p = vec![int(-2), int(0), int(1)];
        let (roots, rest) = rational_roots(&p).unwrap();
        assert!(roots.is_empty());
        assert_eq!(rest.len(), 3);
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let mut m = Matrix::zeros(3, 3);
        m[(0, 0)] = int(1);
        m[(1, 1)] = int(1);
        assert_eq!(minimal_polynomial(&m), vec![int(0), int(-1), int(1)]);
        assert_eq!(
            minimal_polynomial(&Matrix::identity(2)),
            vec![int(-1), int(1)]
        );
    }

    #[test]
    fn log_bound() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(5), 3);
    }
}
