use num_traits::Zero;

use super::poly::{generic_coefficients, minimal_polynomial, split_simple_roots};
use crate::action::ActionAlgebra;
use crate::error::{Error, Result};
use crate::lie::{killing_form, LieAlgebra};
use crate::linalg::{kernel, Matrix, Rational, Subspace};

const RETRIES: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleDecomposition {
    /// Simple ideals of the algebra, ordered by canonical basis.
    pub components: Vec<Subspace>,
    pub centroid_dims: Vec<usize>,
}

/// Basis of `{T : T ad x = ad x T, T[x,y] = [Tx,y]}` as matrices.
fn centroid(l: &LieAlgebra) -> Vec<Matrix> {
    let n = l.dim();
    let ads = l.ad_basis();
    // unknown T[r][c] at index r * n + c
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for ad in &ads {
        for r in 0..n {
            for c in 0..n {
                // (T ad)[r][c] - (ad T)[r][c]
                let mut row = vec![Rational::zero(); n * n];
                for k in 0..n {
                    if !ad[(k, c)].is_zero() {
                        row[r * n + k] += &ad[(k, c)];
                    }
                    if !ad[(r, k)].is_zero() {
                        row[k * n + c] -= &ad[(r, k)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            // T[b_i,b_j] - [T b_i, b_j], coordinate r
            let bij = l.basis_bracket(i, j);
            for r in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for k in 0..n {
                    if !bij[k].is_zero() {
                        row[r * n + k] += &bij[k];
                    }
                    // [T b_i, b_j] = sum_k T[k][i] [b_k, b_j]
                    let c = l.structure_constant(k, j, r);
                    if !c.is_zero() {
                        row[k * n + i] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        Subspace::full(n * n)
    } else {
        kernel(&Matrix::from_rows(n * n, rows))
    };
    sol.basis_vectors()
        .map(|v| Matrix::from_vec(n, n, v.to_vec()))
        .collect()
}

fn split(q: &LieAlgebra, ideal: &Subspace, out: &mut Vec<(Subspace, usize)>) -> Result<()> {
    let sub = q.subalgebra(ideal)?;
    let gamma = centroid(&sub);
    if gamma.len() <= 1 {
        out.push((ideal.clone(), gamma.len()));
        return Ok(());
    }
    let m = sub.dim();
    for seed in 0..RETRIES {
        let coeffs = generic_coefficients(seed, gamma.len());
        let mut t = Matrix::zeros(m, m);
        for (c, g) in coeffs.iter().zip(&gamma) {
            t = t.add(&g.scale(c));
        }
        let Some(roots) = split_simple_roots(&minimal_polynomial(&t)) else {
            continue;
        };
        if roots.len() < 2 {
            continue;
        }
        let basis: Vec<Vec<Rational>> = ideal.basis_vectors().map(|v| v.to_vec()).collect();
        for r in roots {
            let shifted = t.sub(&Matrix::identity(m).scale(&r));
            let eig = kernel(&shifted);
            let vecs: Vec<Vec<Rational>> = eig
                .basis_vectors()
                .map(|c| {
                    let mut v = vec![Rational::zero(); q.dim()];
                    for (x, b) in c.iter().zip(&basis) {
                        if !x.is_zero() {
                            for (o, y) in v.iter_mut().zip(b) {
                                *o += x * y;
                            }
                        }
                    }
                    v
                })
                .collect();
            split(q, &Subspace::span(q.dim(), vecs), out)?;
        }
        return Ok(());
    }
    Err(Error::NonSplitComponent {
        centroid_dim: gamma.len(),
    })
}

fn canonical_order(a: &Subspace, b: &Subspace) -> std::cmp::Ordering {
    a.pivots()
        .cmp(b.pivots())
        .then_with(|| a.basis().as_slice().cmp(b.basis().as_slice()))
}

/// Simple ideals of a semisimple algebra, via eigenspaces of generic centroid
/// elements.
pub fn simple_decomposition(q: &LieAlgebra) -> Result<SemisimpleDecomposition> {
    let n = q.dim();
    if killing_form(q).rank() != n {
        return Err(Error::NotSemisimple);
    }
    let mut parts = Vec::new();
    if n > 0 {
        split(q, &Subspace::full(n), &mut parts)?;
    }
    if let Some((_, d)) = parts.iter().find(|(_, d)| *d != 1) {
        return Err(Error::NonSplitComponent { centroid_dim: *d });
    }
    parts.sort_by(|a, b| canonical_order(&a.0, &b.0));
    let (components, centroid_dims) = parts.into_iter().unzip();
    Ok(SemisimpleDecomposition {
        components,
        centroid_dims,
    })
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = i;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

/// Groups of components glued by the action: the classes of the relation
/// generated by `A B_i ∩ B_j != 0`. Groups are listed by smallest member.
pub fn h_simple_grouping(
    dec: &SemisimpleDecomposition,
    action: &ActionAlgebra,
) -> Result<Vec<Vec<usize>>> {
    let k = dec.components.len();
    let mut parent: Vec<usize> = (0..k).collect();
    for i in 0..k {
        let orbit = action.apply_to_subspace(&dec.components[i]);
        for j in 0..k {
            if i != j && !orbit.intersect(&dec.components[j])?.is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let roots: Vec<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        match groups.iter_mut().find(|g| roots[g[0]] == roots[i]) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    for g in &groups {
        let mut sum = Subspace::zero(action.ambient_dim());
        for &i in g {
            sum = sum.sum(&dec.components[i])?;
        }
        if !action.is_invariant(&sum) {
            return Err(Error::GroupSumNotInvariant);
        }
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::action::ActionGenerator;
    use crate::lie::{bracket_subspaces, BracketEntry};
    use crate::linalg::int;

    #[test]
    fn sl2_is_simple() {
        let d = simple_decomposition(&sl2()).unwrap();
        assert_eq!(d.components, vec![Subspace::full(3)]);
        assert_eq!(d.centroid_dims, vec![1]);
    }

    #[test]
    fn two_copies_split() {
        let l = sl2_plus_sl2();
        let d = simple_decomposition(&l).unwrap();
        assert_eq!(
            d.components,
            vec![Subspace::unit(6, 0..3), Subspace::unit(6, 3..6)]
        );
        assert!(bracket_subspaces(&l, &d.components[0], &d.components[1]).is_zero());
    }

    #[test]
    fn diagonal_basis_still_splits() {
        // basis u_i = a_i + b_i, v_i = a_i - b_i of sl2 + sl2
        let l = sl2_plus_sl2();
        let mut p = Matrix::zeros(6, 6);
        for i in 0..3 {
            p[(i, i)] = int(1);
            p[(i + 3, i)] = int(1);
            p[(i, i + 3)] = int(1);
            p[(i + 3, i + 3)] = int(-1);
        }
        let t = l.transport(&p).unwrap();
        let d = simple_decomposition(&t).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d.components.iter().all(|c| c.dim() == 3));
    }

    fn nonsplit6() -> LieAlgebra {
        // sl2 over Q(sqrt 2): basis e, h, f, r e, r h, r f with r^2 = 2
        let mut es = Vec::new();
        let base = [(0usize, 1usize, 0usize, -2i64), (0, 2, 1, 1), (1, 2, 2, -2)];
        for &(i, j, k, c) in &base {
            let e = |i, j, k, c| BracketEntry {
                i,
                j,
                value: vec![(k, int(c))],
            };
            es.push(e(i, j, k, c));
            es.push(e(i, j + 3, k + 3, c));
            es.push(e(i + 3, j, k + 3, c));
            es.push(e(i + 3, j + 3, k, 2 * c));
        }
        LieAlgebra::from_entries("nonsplit6", 6, None, normalize(es)).unwrap()
    }

    fn normalize(es: Vec<BracketEntry>) -> Vec<BracketEntry> {
        es.into_iter()
            .map(|e| {
                if e.i < e.j {
                    e
                } else {
                    BracketEntry {
                        i: e.j,
                        j: e.i,
                        value: e.value.into_iter().map(|(k, v)| (k, -v)).collect(),
                    }
                }
            })
            .collect()
    }

    #[test]
    fn non_split_component_is_refused() {
        let l = nonsplit6();
        assert!(crate::lie::validate_algebra(&l).is_valid());
        assert_eq!(
            simple_decomposition(&l).unwrap_err(),
            Error::NonSplitComponent { centroid_dim: 2 }
        );
    }

    #[test]
    fn degenerate_killing_form() {
        assert_eq!(
            simple_decomposition(&heisenberg()).unwrap_err(),
            Error::NotSemisimple
        );
    }

    #[test]
    fn grouping_by_action() {
        let l = sl2_plus_sl2();
        let d = simple_decomposition(&l).unwrap();
        assert_eq!(
            h_simple_grouping(&d, &ActionAlgebra::trivial(6)).unwrap(),
            vec![vec![0], vec![1]]
        );
        let mut swap = Matrix::zeros(6, 6);
        for i in 0..3 {
            swap[(i + 3, i)] = int(1);
            swap[(i, i + 3)] = int(1);
        }
        let a =
            ActionAlgebra::build(&l, vec![ActionGenerator::automorphism("swap", swap)]).unwrap();
        assert_eq!(h_simple_grouping(&d, &a).unwrap(), vec![vec![0, 1]]);
    }
}
