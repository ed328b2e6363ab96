mod common;

use common::*;
use liepi::codim::{
    class_size, codimension, evaluate_monomial, evaluation_matrix, evaluation_row, factorial,
    mn_character, partitions, RankMode, DEFAULT_BUDGET,
};
use liepi::linalg::Rational;
use liepi::{ActionAlgebra, LieAlgebra, Matrix, Subspace};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_cases() -> Vec<(LieAlgebra, ActionAlgebra, usize)> {
    vec![
        (sl2(), ActionAlgebra::trivial(3), 3),
        (sl2(), adjoint_action(&sl2()), 2),
        (heisenberg(), ActionAlgebra::trivial(3), 3),
        (solvable2(), ActionAlgebra::trivial(2), 3),
        (bahturin(), phi_action(), 2),
    ]
}

fn row_space(m: &Matrix) -> Subspace {
    Subspace::span(m.cols(), m.row_vectors().map(|r| r.to_vec()))
}

fn random_op(rng: &mut ChaCha8Rng, a: &ActionAlgebra) -> Matrix {
    let n = a.ambient_dim();
    a.basis().iter().fold(Matrix::zeros(n, n), |acc, b| {
        acc.add(&b.scale(&small_int(rng, 3)))
    })
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

#[test]
fn engine_matches_the_dense_oracle() {
    for (l, a, n) in small_cases() {
        let dense = evaluation_matrix(&l, &a, n).rank();
        for mode in [RankMode::Exact, RankMode::TwoPrime] {
            assert_eq!(
                codimension(&l, &a, n, mode, DEFAULT_BUDGET).unwrap().value,
                dense,
                "{}",
                l.name()
            );
        }
    }
}

#[test]
fn basis_tuples_determine_the_rank() {
    // evaluations on arbitrary tuples add columns but never rank
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (l, a, n) in small_cases() {
        let m = evaluation_matrix(&l, &a, n);
        let rank = m.rank();
        let basis = a.basis();
        let perms: Vec<Vec<usize>> = {
            let mut out = Vec::new();
            let mut p: Vec<usize> = (0..n).collect();
            loop {
                out.push(p.clone());
                let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                    break;
                };
                let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
                p.swap(i, j);
                p[i + 1..].reverse();
            }
            out
        };
        for _ in 0..3 {
            let xs: Vec<Vec<Rational>> = (0..n).map(|_| random_vector(&mut rng, l.dim())).collect();
            let mut extended = Vec::new();
            for g in 0..basis.len().pow(n as u32) {
                let ops: Vec<&Matrix> = (0..n)
                    .map(|k| &basis[(g / basis.len().pow(k as u32)) % basis.len()])
                    .collect();
                for sigma in &perms {
                    let mut row = m.row(extended.len()).to_vec();
                    row.extend(evaluate_monomial(&l, &ops, sigma, &xs));
                    extended.push(row);
                }
            }
            let wide = Matrix::from_rows(m.cols() + l.dim(), extended);
            assert_eq!(wide.rank(), rank, "{}", l.name());
        }
    }
}

#[test]
fn action_basis_is_sufficient() {
    // general elements and longer words of the action algebra give rows
    // already in the row space
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (l, a, n) in small_cases() {
        let space = row_space(&evaluation_matrix(&l, &a, n));
        let basis = a.basis();
        for _ in 0..4 {
            let ops: Vec<Matrix> = (0..n)
                .map(|k| {
                    if k == 0 {
                        let i = rng.gen_range(0..basis.len());
                        let j = rng.gen_range(0..basis.len());
                        basis[i].mul(&basis[j])
                    } else {
                        random_op(&mut rng, &a)
                    }
                })
                .collect();
            let refs: Vec<&Matrix> = ops.iter().collect();
            let sigma = random_perm(&mut rng, n);
            assert!(
                space.contains(&evaluation_row(&l, &refs, &sigma)),
                "{}",
                l.name()
            );
        }
    }
}

#[test]
fn codimensions_are_basis_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (l, a) in [
        (sl2_plus_sl2(), ActionAlgebra::trivial(6)),
        (heisenberg(), ActionAlgebra::trivial(3)),
    ] {
        let base: Vec<usize> = (1..=3)
            .map(|n| {
                codimension(&l, &a, n, RankMode::Exact, DEFAULT_BUDGET)
                    .unwrap()
                    .value
            })
            .collect();
        for _ in 0..3 {
            let p = random_invertible(&mut rng, l.dim());
            let (t, at) = (l.transport(&p).unwrap(), a.conjugate(&p));
            let moved: Vec<usize> = (1..=3)
                .map(|n| {
                    codimension(&t, &at, n, RankMode::TwoPrime, DEFAULT_BUDGET)
                        .unwrap()
                        .value
                })
                .collect();
            assert_eq!(moved, base);
        }
    }
}

#[test]
fn characters_are_orthonormal() {
    for n in 1..=6 {
        let classes = partitions(n);
        let nfact = Rational::from_integer(factorial(n).into());
        for lambda in &classes {
            for nu in &classes {
                let mut s = Rational::zero();
                for mu in &classes {
                    let w = Rational::from_integer(class_size(mu).into()) / &nfact;
                    let a = mn_character(lambda, mu).unwrap();
                    let b = mn_character(nu, mu).unwrap();
                    s += w * Rational::from_integer((a * b).into());
                }
                let expected = if lambda == nu {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                assert_eq!(s, expected, "n = {n}: {lambda} vs {nu}");
            }
        }
    }
}
