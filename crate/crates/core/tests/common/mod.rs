#![allow(dead_code)]

use liepi::lie::BracketEntry;
use liepi::linalg::int;
use liepi::{ActionAlgebra, ActionGenerator, LieAlgebra, Matrix, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn entry(i: usize, j: usize, value: &[(usize, i64)]) -> BracketEntry {
    BracketEntry {
        i,
        j,
        value: value.iter().map(|&(k, v)| (k, int(v))).collect(),
    }
}

fn sl2_entries(o: usize) -> Vec<BracketEntry> {
    vec![
        entry(o, o + 1, &[(o, -2)]),
        entry(o, o + 2, &[(o + 1, 1)]),
        entry(o + 1, o + 2, &[(o + 2, -2)]),
    ]
}

const SL2_MATRICES: [[[i64; 2]; 2]; 3] = [[[0, 1], [0, 0]], [[1, 0], [0, -1]], [[0, 0], [1, 0]]];

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_entries("sl2", 3, None, sl2_entries(0)).unwrap()
}

pub fn sl2_plus_sl2() -> LieAlgebra {
    let mut es = sl2_entries(0);
    es.extend(sl2_entries(3));
    LieAlgebra::from_entries("sl2+sl2", 6, None, es).unwrap()
}

pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_entries("heisenberg", 3, None, [entry(0, 1, &[(2, 1)])]).unwrap()
}

pub fn solvable2() -> LieAlgebra {
    LieAlgebra::from_entries("solvable2", 2, None, [entry(0, 1, &[(1, 1)])]).unwrap()
}

/// `sl2 ⋉ M_2`, left multiplication; basis e, h, f, d11, d12, d21, d22.
#[allow(clippy::needless_range_loop)]
pub fn bahturin() -> LieAlgebra {
    let mut es = sl2_entries(0);
    let d = |r: usize, s: usize| 3 + 2 * r + s;
    for (g, m) in SL2_MATRICES.iter().enumerate() {
        for r in 0..2 {
            for s in 0..2 {
                let v: Vec<(usize, i64)> = (0..2)
                    .filter(|&t| m[t][r] != 0)
                    .map(|t| (d(t, s), m[t][r]))
                    .collect();
                if !v.is_empty() {
                    es.push(entry(g, d(r, s), &v));
                }
            }
        }
    }
    LieAlgebra::from_entries("bahturin_m2", 7, None, es).unwrap()
}

/// `(sl2 + sl2) ⋉ M_2` with `[(C, E), D] = CD - DE`.
#[allow(clippy::needless_range_loop)]
pub fn glue10() -> LieAlgebra {
    let mut es = sl2_entries(0);
    es.extend(sl2_entries(3));
    let d = |r: usize, s: usize| 6 + 2 * r + s;
    for (g, m) in SL2_MATRICES.iter().enumerate() {
        for r in 0..2 {
            for s in 0..2 {
                let left: Vec<(usize, i64)> = (0..2)
                    .filter(|&t| m[t][r] != 0)
                    .map(|t| (d(t, s), m[t][r]))
                    .collect();
                if !left.is_empty() {
                    es.push(entry(g, d(r, s), &left));
                }
                let right: Vec<(usize, i64)> = (0..2)
                    .filter(|&t| m[s][t] != 0)
                    .map(|t| (d(r, t), -m[s][t]))
                    .collect();
                if !right.is_empty() {
                    es.push(entry(g + 3, d(r, s), &right));
                }
            }
        }
    }
    LieAlgebra::from_entries("glue10", 10, None, es).unwrap()
}

pub fn phi() -> Matrix {
    let mut m = Matrix::identity(7);
    m[(4, 0)] = int(1);
    m[(3, 1)] = int(1);
    m[(6, 1)] = int(-1);
    m[(5, 2)] = int(1);
    m
}

pub fn phi_action() -> ActionAlgebra {
    ActionAlgebra::build(
        &bahturin(),
        vec![ActionGenerator::automorphism("phi", phi())],
    )
    .unwrap()
}

pub fn adjoint_action(l: &LieAlgebra) -> ActionAlgebra {
    let gens = (0..l.dim())
        .map(|i| ActionGenerator::derivation(format!("ad{i}"), l.ad(&l.unit(i))))
        .collect();
    ActionAlgebra::build(l, gens).unwrap()
}

pub fn all_algebras() -> Vec<LieAlgebra> {
    vec![
        sl2(),
        sl2_plus_sl2(),
        heisenberg(),
        solvable2(),
        bahturin(),
        glue10(),
    ]
}

pub fn small_int(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_int(rng, 5)).collect()
}

/// Product of random unit lower and upper triangular integer matrices, then a
/// random row permutation.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let lower = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            int(1)
        } else if i > j {
            small_int(rng, 2)
        } else {
            int(0)
        }
    });
    let upper = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            int(1)
        } else if i < j {
            small_int(rng, 2)
        } else {
            int(0)
        }
    });
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let p = Matrix::from_fn(n, n, |i, j| if perm[i] == j { int(1) } else { int(0) });
    p.mul(&lower).mul(&upper)
}

pub fn form(k: &Matrix, x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(k.apply(y)).map(|(a, b)| a * b).sum()
}
