//! Codimensions and cocharacters by brute force.
//!
//! Rows of the evaluation matrix are indexed by a permutation `σ` and a
//! choice `γ` of action-basis operators, one per variable; columns by a tuple
//! of basis indices `a` and an output coordinate. The entry is the coordinate
//! of `[γ_1 b_{a_σ(1)}, ..., γ_n b_{a_σ(n)}]`. Its rank is `c_n`.
//!
//! Structure constants and operators are scaled to integers first. Scaling an
//! operator scales whole rows and scaling the bracket scales every entry by
//! the same power, so the rank and the row space are unchanged.

mod partition;

pub use partition::{
    class_size, cycle_type_representative, factorial, hook_dim, mn_character, partitions, Partition,
};

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::action::ActionAlgebra;
use crate::error::{Error, Result};
use crate::exponent::structural_exponent;
use crate::lie::LieAlgebra;
use crate::linalg::modular::{primes_from_seed, SparseModularEchelon};
use crate::linalg::{
    EchelonForm, FractionFreeEchelon, IntScalar, Matrix, Overflow, Rational, SparseRow,
};

/// Default cap on `n! |A|^n dim^(n+1)`.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    Exact,
    /// Ranks modulo two large primes, recomputed exactly if they differ.
    TwoPrime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimResult {
    pub n: usize,
    pub value: usize,
    pub mode: RankMode,
    pub action_basis_size: usize,
    /// Primes used in two-prime mode.
    pub primes: Option<[u64; 2]>,
    /// Two-prime ranks disagreed and the value was recomputed exactly.
    pub exact_fallback: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocharacterReport {
    pub n: usize,
    pub codim: usize,
    pub multiplicities: Vec<(Partition, u64)>,
}

impl CocharacterReport {
    pub fn multiplicity(&self, lambda: &[usize]) -> Option<u64> {
        self.multiplicities
            .iter()
            .find(|(p, _)| p.parts() == lambda)
            .map(|(_, m)| *m)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRow {
    pub n: usize,
    pub codim: usize,
    /// `c_n^(1/n)`, for display only.
    pub root: f64,
    pub d: Option<usize>,
}

/// `n! |A|^n dim^(n+1)`, saturating.
pub fn required_entries(dim: usize, action_dim: usize, n: usize) -> u128 {
    let mut acc: u128 = 1;
    for k in 1..=n as u128 {
        acc = acc.saturating_mul(k);
    }
    for _ in 0..n {
        acc = acc.saturating_mul(action_dim as u128);
    }
    for _ in 0..=n {
        acc = acc.saturating_mul(dim as u128);
    }
    acc
}

fn check_budget(l: &LieAlgebra, a: &ActionAlgebra, n: usize, budget: u128) -> Result<()> {
    let required = required_entries(l.dim(), a.dim(), n);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

fn lcm_of_denominators<'a>(xs: impl Iterator<Item = &'a Rational>) -> BigInt {
    xs.fold(<BigInt as One>::one(), |acc, x| acc.lcm(x.denom()))
}

/// Integer data of an evaluation problem.
struct Problem {
    dim: usize,
    n: usize,
    /// Sparse `[b_i, b_j]` at `i * dim + j`.
    consts: Vec<Vec<(usize, BigInt)>>,
    /// For each operator, its columns `g b_s`.
    ops: Vec<Vec<Vec<BigInt>>>,
}

impl Problem {
    fn new(l: &LieAlgebra, a: &ActionAlgebra, n: usize) -> Self {
        let dim = l.dim();
        let scale = Rational::from_integer(lcm_of_denominators(l.table().iter()));
        let mut consts = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in l.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        consts[i * dim + j].push((k, (c * &scale).to_integer()));
                    }
                }
            }
        }
        let ops = a
            .basis()
            .iter()
            .map(|m| {
                let s = Rational::from_integer(lcm_of_denominators(m.as_slice().iter()));
                (0..dim)
                    .map(|c| (0..dim).map(|r| (&m[(r, c)] * &s).to_integer()).collect())
                    .collect()
            })
            .collect();
        Problem {
            dim,
            n,
            consts,
            ops,
        }
    }

    fn cols(&self) -> usize {
        self.dim.pow(self.n as u32 + 1)
    }

    fn typed<T: IntScalar>(&self) -> std::result::Result<Typed<T>, Overflow> {
        let consts = self
            .consts
            .iter()
            .map(|v| {
                v.iter()
                    .map(|(k, c)| Ok((*k, T::from_bigint(c)?)))
                    .collect()
            })
            .collect::<std::result::Result<_, Overflow>>()?;
        let ops = self
            .ops
            .iter()
            .map(|cols| {
                cols.iter()
                    .map(|col| col.iter().map(T::from_bigint).collect())
                    .collect::<std::result::Result<_, Overflow>>()
            })
            .collect::<std::result::Result<_, Overflow>>()?;
        Ok(Typed {
            dim: self.dim,
            n: self.n,
            consts,
            ops,
        })
    }
}

type LeafSink<'a, T> = dyn FnMut(&[(u32, u32, T)]) -> std::result::Result<bool, Overflow> + 'a;

struct Typed<T> {
    dim: usize,
    n: usize,
    consts: Vec<Vec<(usize, T)>>,
    ops: Vec<Vec<Vec<T>>>,
}

impl<T: IntScalar> Typed<T> {
    fn bracket(&self, x: &[T], y: &[T]) -> std::result::Result<Vec<T>, Overflow> {
        let mut out = vec![T::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let cs = &self.consts[i * self.dim + j];
                if cs.is_empty() {
                    continue;
                }
                let f = xi.mul(yj)?;
                for (k, c) in cs {
                    out[*k] = out[*k].add(&f.mul(c)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Depth-first over operator choices, sharing prefixes. `sink` receives
    /// each leaf tensor as `(slot index, output, value)` triples and returns
    /// `true` to stop.
    fn for_each_leaf(&self, sink: &mut LeafSink<'_, T>) -> std::result::Result<(), Overflow> {
        self.descend(0, &[], sink).map(|_| ())
    }

    fn descend(
        &self,
        depth: usize,
        vecs: &[Vec<T>],
        sink: &mut LeafSink<'_, T>,
    ) -> std::result::Result<bool, Overflow> {
        if depth == self.n {
            let mut nz = Vec::new();
            for (s, v) in vecs.iter().enumerate() {
                for (o, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        nz.push((s as u32, o as u32, x.clone()));
                    }
                }
            }
            return sink(&nz);
        }
        for g in &self.ops {
            let next: Vec<Vec<T>> = if depth == 0 {
                g.clone()
            } else {
                let mut out = Vec::with_capacity(vecs.len() * self.dim);
                for v in vecs {
                    for col in g {
                        out.push(self.bracket(v, col)?);
                    }
                }
                out
            };
            if next.iter().all(|v| v.iter().all(|x| x.is_zero())) {
                continue;
            }
            if self.descend(depth + 1, &next, sink)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

fn digits(mut idx: usize, dim: usize, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for k in (0..n).rev() {
        d[k] = idx % dim;
        idx /= dim;
    }
    d
}

fn undigits(d: &[usize], dim: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * dim + x)
}

/// For each `σ`, the map from the slot tuple `s` to the variable tuple `a`
/// with `a_σ(i) = s_i`.
fn slot_tables(dim: usize, n: usize) -> Vec<Vec<u32>> {
    let slots = dim.pow(n as u32);
    permutations(n)
        .into_iter()
        .map(|sigma| {
            (0..slots)
                .map(|s| {
                    let sd = digits(s, dim, n);
                    let mut a = vec![0; n];
                    for (i, &si) in sd.iter().enumerate() {
                        a[sigma[i]] = si;
                    }
                    undigits(&a, dim) as u32
                })
                .collect()
        })
        .collect()
}

fn rows_of_leaf<T: IntScalar>(leaf: &[(u32, u32, T)], table: &[u32], dim: usize) -> SparseRow<T> {
    let mut row: SparseRow<T> = leaf
        .iter()
        .map(|(s, o, v)| (table[*s as usize] * dim as u32 + o, v.clone()))
        .collect();
    row.sort_unstable_by_key(|e| e.0);
    row
}

fn exact_echelon<T: IntScalar>(
    p: &Problem,
    tables: &[Vec<u32>],
) -> std::result::Result<FractionFreeEchelon<T>, Overflow> {
    let typed = p.typed::<T>()?;
    let mut ech = FractionFreeEchelon::<T>::new(p.cols());
    typed.for_each_leaf(&mut |leaf| {
        for t in tables {
            ech.insert(rows_of_leaf(leaf, t, p.dim))?;
            if ech.is_full() {
                return Ok(true);
            }
        }
        Ok(false)
    })?;
    Ok(ech)
}

fn reduced_echelon(p: &Problem, tables: &[Vec<u32>]) -> ExactForm {
    match exact_echelon::<i128>(p, tables).and_then(|e| e.into_reduced()) {
        Ok(e) => ExactForm::Small(e),
        Err(Overflow) => ExactForm::Big(
            exact_echelon::<BigInt>(p, tables)
                .and_then(|e| e.into_reduced())
                .expect("BigInt arithmetic cannot overflow"),
        ),
    }
}

fn exact_rank(p: &Problem, tables: &[Vec<u32>]) -> usize {
    match exact_echelon::<i128>(p, tables) {
        Ok(e) => e.rank(),
        Err(Overflow) => exact_echelon::<BigInt>(p, tables)
            .expect("no overflow")
            .rank(),
    }
}

enum ExactForm {
    Small(EchelonForm<i128>),
    Big(EchelonForm<BigInt>),
}

fn modular_ranks<T: IntScalar>(
    p: &Problem,
    tables: &[Vec<u32>],
    primes: [u64; 2],
) -> std::result::Result<[usize; 2], Overflow> {
    let typed = p.typed::<T>()?;
    let mut echs = primes.map(|q| SparseModularEchelon::new(p.cols(), q));
    let cols = p.cols();
    typed.for_each_leaf(&mut |leaf| {
        for t in tables {
            let row = rows_of_leaf(leaf, t, p.dim);
            for e in echs.iter_mut() {
                let q = e.prime();
                let r: Vec<(u32, u64)> = row
                    .iter()
                    .map(|(c, v)| (*c, v.residue(q)))
                    .filter(|e| e.1 != 0)
                    .collect();
                e.insert(r);
            }
            if echs.iter().all(|e| e.rank() == cols) {
                return Ok(true);
            }
        }
        Ok(false)
    })?;
    Ok([echs[0].rank(), echs[1].rank()])
}

/// Deterministic seed from the problem data.
fn problem_seed(p: &Problem) -> u64 {
    let mut s = String::new();
    let _ = write!(s, "{}:{}:", p.dim, p.n);
    for (idx, cs) in p.consts.iter().enumerate() {
        for (k, c) in cs {
            let _ = write!(s, "{idx},{k},{c};");
        }
    }
    for op in &p.ops {
        for col in op {
            for x in col {
                let _ = write!(s, "{x},");
            }
        }
        s.push('|');
    }
    // FNV-1a
    s.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// `c_n^H(L)`.
pub fn codimension(
    l: &LieAlgebra,
    a: &ActionAlgebra,
    n: usize,
    mode: RankMode,
    budget: u128,
) -> Result<CodimResult> {
    assert!(n >= 1, "degree must be positive");
    check_budget(l, a, n, budget)?;
    let p = Problem::new(l, a, n);
    let tables = slot_tables(l.dim(), n);
    let mut result = CodimResult {
        n,
        value: 0,
        mode,
        action_basis_size: a.dim(),
        primes: None,
        exact_fallback: false,
    };
    if l.dim() == 0 {
        return Ok(result);
    }
    match mode {
        RankMode::Exact => result.value = exact_rank(&p, &tables),
        RankMode::TwoPrime => {
            let ps = primes_from_seed(problem_seed(&p), 2);
            let primes = [ps[0], ps[1]];
            let ranks = match modular_ranks::<i128>(&p, &tables, primes) {
                Ok(r) => r,
                Err(Overflow) => modular_ranks::<BigInt>(&p, &tables, primes).expect("no overflow"),
            };
            result.primes = Some(primes);
            if ranks[0] == ranks[1] {
                result.value = ranks[0];
            } else {
                result.exact_fallback = true;
                result.value = exact_rank(&p, &tables);
            }
        }
    }
    Ok(result)
}

fn trace_on_row_space<T: IntScalar>(
    e: &EchelonForm<T>,
    sigma: &[usize],
    dim: usize,
    n: usize,
) -> Rational {
    let mut tr = Rational::zero();
    for i in 0..e.rank() {
        let col = e.pivot(i);
        let a = digits(col / dim, dim, n);
        let moved: Vec<usize> = (0..n).map(|k| a[sigma[k]]).collect();
        let target = undigits(&moved, dim) * dim + col % dim;
        if let Some(v) = e.entry(i, target) {
            tr += Rational::new(v.to_bigint(), e.pivot_value(i).to_bigint());
        }
    }
    tr
}

/// Multiplicities of the irreducible `S_n`-characters in the cocharacter.
pub fn cocharacter_multiplicities(
    l: &LieAlgebra,
    a: &ActionAlgebra,
    n: usize,
    budget: u128,
) -> Result<CocharacterReport> {
    assert!(n >= 1, "degree must be positive");
    check_budget(l, a, n, budget)?;
    let classes = partitions(n);
    let dim = l.dim();
    let (codim, traces): (usize, Vec<Rational>) = if dim == 0 {
        (0, vec![Rational::zero(); classes.len()])
    } else {
        let p = Problem::new(l, a, n);
        let tables = slot_tables(dim, n);
        let form = reduced_echelon(&p, &tables);
        let traces = classes
            .iter()
            .map(|mu| {
                let sigma = cycle_type_representative(mu);
                match &form {
                    ExactForm::Small(e) => trace_on_row_space(e, &sigma, dim, n),
                    ExactForm::Big(e) => trace_on_row_space(e, &sigma, dim, n),
                }
            })
            .collect();
        let rank = match &form {
            ExactForm::Small(e) => e.rank(),
            ExactForm::Big(e) => e.rank(),
        };
        (rank, traces)
    };
    let nfact = Rational::from_integer(factorial(n).into());
    let sizes: Vec<Rational> = classes
        .iter()
        .map(|mu| Rational::from_integer(class_size(mu).into()))
        .collect();
    let mut multiplicities = Vec::with_capacity(classes.len());
    let mut check: u128 = 0;
    for lambda in &classes {
        let mut acc = Rational::zero();
        for ((mu, size), tr) in classes.iter().zip(&sizes).zip(&traces) {
            let chi = mn_character(lambda, mu)?;
            acc += size * Rational::from_integer(chi.into()) * tr;
        }
        let m = acc / &nfact;
        let value = (m.is_integer() && m >= Rational::zero())
            .then(|| m.to_integer().to_u64())
            .flatten()
            .ok_or_else(|| Error::NonIntegralMultiplicity {
                partition: lambda.parts().to_vec(),
                value: m.to_string(),
            })?;
        check += value as u128 * hook_dim(lambda);
        multiplicities.push((lambda.clone(), value));
    }
    if check != codim as u128 {
        return Err(Error::InternalInconsistency(format!(
            "cocharacter degree {check} differs from codimension {codim}"
        )));
    }
    Ok(CocharacterReport {
        n,
        codim,
        multiplicities,
    })
}

/// `c_n` for `n = 1..=n_max` next to the structural exponent, when defined.
pub fn growth_report(
    l: &LieAlgebra,
    a: &ActionAlgebra,
    n_max: usize,
    mode: RankMode,
    budget: u128,
) -> Result<Vec<GrowthRow>> {
    let d = structural_exponent(l, a).ok().map(|r| r.d);
    (1..=n_max)
        .map(|n| {
            let c = codimension(l, a, n, mode, budget)?;
            let root = (c.value as f64).powf(1.0 / n as f64);
            Ok(GrowthRow {
                n,
                codim: c.value,
                root,
                d,
            })
        })
        .collect()
}

/// Row of the monomial `(ops, sigma)` over all basis tuples, in column order.
pub fn evaluation_row(l: &LieAlgebra, ops: &[&Matrix], sigma: &[usize]) -> Vec<Rational> {
    let (dim, n) = (l.dim(), ops.len());
    let mut row = Vec::with_capacity(dim.pow(n as u32 + 1));
    for idx in 0..dim.pow(n as u32) {
        let xs: Vec<Vec<Rational>> = digits(idx, dim, n).into_iter().map(|i| l.unit(i)).collect();
        row.extend(evaluate_monomial(l, ops, sigma, &xs));
    }
    row
}

/// Dense evaluation matrix built element by element, independent of the
/// integer engine. Rows run over operator tuples (odometer, first slot
/// fastest) and, inside each, over permutations in lexicographic order.
pub fn evaluation_matrix(l: &LieAlgebra, a: &ActionAlgebra, n: usize) -> Matrix {
    let basis = a.basis();
    let perms = permutations(n);
    let mut rows = Vec::new();
    for g in 0..basis.len().pow(n as u32) {
        let mut choice = digits(g, basis.len(), n);
        choice.reverse();
        let ops: Vec<&Matrix> = choice.iter().map(|&i| &basis[i]).collect();
        for sigma in &perms {
            rows.push(evaluation_row(l, &ops, sigma));
        }
    }
    Matrix::from_rows(l.dim().pow(n as u32 + 1), rows)
}

/// Column index of the variable tuple `a` and output coordinate `out`.
pub fn column_index(dim: usize, a: &[usize], out: usize) -> usize {
    undigits(a, dim) * dim + out
}

/// `[γ_1 x_σ(1), ..., γ_n x_σ(n)]` for arbitrary elements `xs`.
pub fn evaluate_monomial(
    l: &LieAlgebra,
    ops: &[&Matrix],
    sigma: &[usize],
    xs: &[Vec<Rational>],
) -> Vec<Rational> {
    let mut acc = ops[0].apply(&xs[sigma[0]]);
    for k in 1..ops.len() {
        acc = l.bracket(&acc, &ops[k].apply(&xs[sigma[k]]));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::ActionGenerator;
    use crate::structure::fixtures::*;

    fn adjoint(l: &LieAlgebra) -> ActionAlgebra {
        let gens = (0..l.dim())
            .map(|i| ActionGenerator::derivation(format!("ad{i}"), l.ad(&l.unit(i))))
            .collect();
        ActionAlgebra::build(l, gens).unwrap()
    }

    fn c(l: &LieAlgebra, a: &ActionAlgebra, n: usize) -> usize {
        codimension(l, a, n, RankMode::Exact, DEFAULT_BUDGET)
            .unwrap()
            .value
    }

    #[test]
    fn small_codimensions() {
        let s = sl2();
        let t = ActionAlgebra::trivial(3);
        assert_eq!(c(&s, &t, 1), 1);
        assert_eq!(c(&s, &t, 2), 1);
        assert_eq!(c(&s, &adjoint(&s), 1), 9);
        let h = heisenberg();
        assert_eq!(c(&h, &ActionAlgebra::trivial(3), 3), 0);
    }

    #[test]
    fn two_prime_matches_exact() {
        let s = sl2();
        let a = adjoint(&s);
        for n in 1..=3 {
            let tp = codimension(&s, &a, n, RankMode::TwoPrime, DEFAULT_BUDGET).unwrap();
            assert_eq!(tp.value, c(&s, &a, n));
            assert!(tp.primes.is_some());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let s = sl2();
        let err = codimension(&s, &adjoint(&s), 6, RankMode::Exact, DEFAULT_BUDGET).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn sign_module_in_degree_two() {
        let s = sl2();
        let r =
            cocharacter_multiplicities(&s, &ActionAlgebra::trivial(3), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.multiplicity(&[1, 1]), Some(1));
        assert_eq!(r.multiplicity(&[2]), Some(0));
    }

    #[test]
    fn heisenberg_cocharacter_vanishes() {
        let h = heisenberg();
        let r =
            cocharacter_multiplicities(&h, &ActionAlgebra::trivial(3), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.codim, 0);
        assert!(r.multiplicities.iter().all(|(_, m)| *m == 0));
    }

    #[test]
    fn dense_matrix_agrees() {
        let s = sl2();
        let t = ActionAlgebra::trivial(3);
        assert_eq!(evaluation_matrix(&s, &t, 3).rank(), c(&s, &t, 3));
        let ad = adjoint(&s);
        assert_eq!(evaluation_matrix(&s, &ad, 2).rank(), c(&s, &ad, 2));
        let b = bahturin();
        let tb = ActionAlgebra::trivial(7);
        assert_eq!(evaluation_matrix(&b, &tb, 3).rank(), c(&b, &tb, 3));
    }

    #[test]
    fn monomial_evaluation_matches_columns() {
        let s = sl2();
        let t = ActionAlgebra::trivial(3);
        let m = evaluation_matrix(&s, &t, 2);
        // row of the identity permutation, variables (e, f): [e, f] = h
        let id = &t.basis()[0];
        let v = evaluate_monomial(&s, &[id, id], &[0, 1], &[s.unit(0), s.unit(2)]);
        for out in 0..3 {
            assert_eq!(m[(0, column_index(3, &[0, 2], out))], v[out]);
        }
    }

    #[test]
    fn growth_rows() {
        let rows = growth_report(
            &heisenberg(),
            &ActionAlgebra::trivial(3),
            4,
            RankMode::Exact,
            DEFAULT_BUDGET,
        )
        .unwrap();
        let cs: Vec<usize> = rows.iter().map(|r| r.codim).collect();
        assert_eq!(cs, vec![1, 1, 0, 0]);
        assert_eq!(rows[0].d, Some(0));
    }
}
