//! Lie algebras given by structure constants, with brackets of elements and
//! subspaces, ideal closures, derived and lower central series, and the
//! Killing form.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, SpanBuilder, Subspace};

/// Coordinates of an element in the standard basis of its algebra.
pub type Element = Vec<Rational>;

/// One sparse row of the bracket table: `[b_i, b_j] = sum value_k b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<(usize, Rational)>,
}

/// A finite-dimensional algebra given by structure constants `c^k_{ij}`.
///
/// Tables are normally specified for `i < j` only and completed by
/// antisymmetry. Entries for `i >= j` are accepted as given so that a malformed
/// table can be represented and rejected by [`validate_algebra`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    labels: Vec<String>,
    // c^k_{ij} at (i * dim + j) * dim + k
    table: Vec<Rational>,
}

impl LieAlgebra {
    pub fn from_entries(
        name: impl Into<String>,
        dim: usize,
        labels: Option<Vec<String>>,
        entries: impl IntoIterator<Item = BracketEntry>,
    ) -> Result<Self> {
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: l.len(),
                })
            }
            Some(l) => l,
            None => (0..dim).map(|i| format!("b{i}")).collect(),
        };
        let mut table = vec![Rational::zero(); dim * dim * dim];
        let mut explicit = vec![false; dim * dim];
        let entries: Vec<BracketEntry> = entries.into_iter().collect();
        for e in &entries {
            for idx in [e.i, e.j].into_iter().chain(e.value.iter().map(|v| v.0)) {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            explicit[e.i * dim + e.j] = true;
        }
        for e in &entries {
            let base = (e.i * dim + e.j) * dim;
            let mirror = (e.j * dim + e.i) * dim;
            for (k, v) in &e.value {
                table[base + k] += v;
                if e.i != e.j && !explicit[e.j * dim + e.i] {
                    table[mirror + k] -= v;
                }
            }
        }
        Ok(LieAlgebra {
            name: name.into(),
            dim,
            labels,
            table,
        })
    }

    /// Builds from a full table of constants and validates the Lie axioms.
    pub fn from_table(name: impl Into<String>, dim: usize, table: Vec<Rational>) -> Result<Self> {
        assert_eq!(table.len(), dim * dim * dim);
        let l = LieAlgebra {
            name: name.into(),
            dim,
            labels: (0..dim).map(|i| format!("b{i}")).collect(),
            table,
        };
        l.validated()
    }

    /// Consumes `self`, returning it only if [`validate_algebra`] accepts it.
    pub fn validated(self) -> Result<Self> {
        let report = validate_algebra(&self);
        if report.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidAlgebra(report.to_string()))
        }
    }

    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        LieAlgebra::from_entries(name, dim, None, []).expect("no entries")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let base = (i * self.dim + j) * self.dim;
        &self.table[base..base + self.dim]
    }

    /// Nonzero brackets `[b_i, b_j]` with `i < j`, in index order.
    pub fn entries(&self) -> Vec<BracketEntry> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let value: Vec<(usize, Rational)> = self
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (k, v.clone()))
                    .collect();
                if !value.is_empty() {
                    out.push(BracketEntry { i, j, value });
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Element {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::from_integer(1.into());
        v
    }

    pub fn zero_element(&self) -> Element {
        vec![Rational::zero(); self.dim]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Element {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (o, c) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x = [x, -]` acting on coordinate columns.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Element> = (0..self.dim)
            .map(|j| self.bracket(x, &self.unit(j)))
            .collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn ad_basis(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.ad(&self.unit(i))).collect()
    }

    /// The algebra in the basis given by the columns of `p`: the new basis
    /// vector `i` is `sum_k p[k][i] b_k`.
    pub fn transport(&self, p: &Matrix) -> Result<LieAlgebra> {
        if p.rows() != self.dim || !p.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.rows(),
            });
        }
        let inv = p.inverse().ok_or_else(|| {
            Error::InternalInconsistency("basis change matrix is singular".into())
        })?;
        let cols = p.columns();
        let n = self.dim;
        let mut table = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let v = inv.apply(&self.bracket(&cols[i], &cols[j]));
                table[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&v);
            }
        }
        Ok(LieAlgebra {
            name: self.name.clone(),
            dim: n,
            labels: self.labels.clone(),
            table,
        })
    }

    /// The subalgebra `u`, in the coordinates of its canonical basis.
    pub fn subalgebra(&self, u: &Subspace) -> Result<LieAlgebra> {
        check_ambient(self, u)?;
        if !is_subalgebra(self, u) {
            return Err(Error::NotASubalgebra);
        }
        let basis: Vec<Element> = u.basis_vectors().map(|b| b.to_vec()).collect();
        let m = basis.len();
        let mut table = vec![Rational::zero(); m * m * m];
        for i in 0..m {
            for j in 0..m {
                let c = u
                    .coordinates(&self.bracket(&basis[i], &basis[j]))
                    .expect("closed");
                table[(i * m + j) * m..(i * m + j + 1) * m].clone_from_slice(&c);
            }
        }
        Ok(LieAlgebra {
            name: format!("{}|sub", self.name),
            dim: m,
            labels: (0..m).map(|i| format!("s{i}")).collect(),
            table,
        })
    }

    /// Dense constants, `c^k_{ij}` at `(i * dim + j) * dim + k`.
    pub(crate) fn table(&self) -> &[Rational] {
        &self.table
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim)
    }
}

fn check_ambient(l: &LieAlgebra, u: &Subspace) -> Result<()> {
    if u.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: u.ambient_dim(),
        });
    }
    Ok(())
}

/// Violated axioms found by [`validate_algebra`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Pairs `(i, j)`, `i <= j`, with `[b_i, b_j] != -[b_j, b_i]` (or
    /// `[b_i, b_i] != 0`).
    pub antisymmetry: Vec<(usize, usize)>,
    /// Triples `i < j < k` where the Jacobi sum is nonzero.
    pub jacobi: Vec<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let mut parts = Vec::new();
        if !self.antisymmetry.is_empty() {
            let s: Vec<String> = self
                .antisymmetry
                .iter()
                .map(|(i, j)| format!("({i},{j})"))
                .collect();
            parts.push(format!("antisymmetry violated at {}", s.join(" ")));
        }
        if !self.jacobi.is_empty() {
            let s: Vec<String> = self
                .jacobi
                .iter()
                .map(|(i, j, k)| format!("({i},{j},{k})"))
                .collect();
            parts.push(format!("Jacobi identity violated at {}", s.join(" ")));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks antisymmetry on every basis pair and the Jacobi identity on every
/// basis triple.
pub fn validate_algebra(l: &LieAlgebra) -> ValidationReport {
    let n = l.dim();
    let mut report = ValidationReport::default();
    for i in 0..n {
        for j in i..n {
            let ok = l
                .basis_bracket(i, j)
                .iter()
                .zip(l.basis_bracket(j, i))
                .all(|(a, b)| {
                    let s: Rational = a + b;
                    s.is_zero()
                });
            if !ok {
                report.antisymmetry.push((i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (bi, bj, bk) = (l.unit(i), l.unit(j), l.unit(k));
                let mut s = l.bracket(&bi, &l.bracket(&bj, &bk));
                for (x, y) in s.iter_mut().zip(l.bracket(&bj, &l.bracket(&bk, &bi))) {
                    *x += y;
                }
                for (x, y) in s.iter_mut().zip(l.bracket(&bk, &l.bracket(&bi, &bj))) {
                    *x += y;
                }
                if s.iter().any(|x| !x.is_zero()) {
                    report.jacobi.push((i, j, k));
                }
            }
        }
    }
    report
}

pub fn bracket(l: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Element {
    l.bracket(x, y)
}

/// Span of `[a, b]` over basis vectors `a` of `u` and `b` of `v`.
pub fn bracket_subspaces(l: &LieAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    assert_eq!(u.ambient_dim(), l.dim());
    assert_eq!(v.ambient_dim(), l.dim());
    let mut span = SpanBuilder::new(l.dim());
    for a in u.basis_vectors() {
        for b in v.basis_vectors() {
            span.insert(&l.bracket(a, b));
            if span.dim() == l.dim() {
                return span.to_subspace();
            }
        }
    }
    span.to_subspace()
}

pub fn is_subalgebra(l: &LieAlgebra, u: &Subspace) -> bool {
    u.contains_subspace(&bracket_subspaces(l, u, u))
}

pub fn is_ideal(l: &LieAlgebra, u: &Subspace) -> bool {
    u.contains_subspace(&bracket_subspaces(l, u, &Subspace::full(l.dim())))
}

/// Smallest ideal containing `u`.
pub fn ideal_closure(l: &LieAlgebra, u: &Subspace) -> Subspace {
    let full = Subspace::full(l.dim());
    let mut cur = u.clone();
    loop {
        let next = cur
            .sum(&bracket_subspaces(l, &cur, &full))
            .expect("same ambient");
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMode {
    /// `u, [u,u], [[u,u],[u,u]], ...`
    Derived,
    /// `u, [u,u], [[u,u],u], ...`
    LowerCentral,
}

/// The derived or lower central series of the subalgebra `u`, starting with
/// `u` and ending at the first term that repeats.
pub fn series(l: &LieAlgebra, u: &Subspace, mode: SeriesMode) -> Result<Vec<Subspace>> {
    check_ambient(l, u)?;
    if !is_subalgebra(l, u) {
        return Err(Error::NotASubalgebra);
    }
    let mut out = vec![u.clone()];
    loop {
        let last = out.last().unwrap();
        let next = match mode {
            SeriesMode::Derived => bracket_subspaces(l, last, last),
            SeriesMode::LowerCentral => bracket_subspaces(l, last, u),
        };
        if &next == last {
            return Ok(out);
        }
        out.push(next);
    }
}

/// `K_ij = trace(ad b_i ∘ ad b_j)`.
pub fn killing_form(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    let mut k = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            // trace(ad b_i ad b_j) = sum_{a,b} c^b_{i a} c^a_{j b}
            let mut acc = Rational::zero();
            for a in 0..n {
                for b in 0..n {
                    let x = l.structure_constant(i, a, b);
                    if x.is_zero() {
                        continue;
                    }
                    let y = l.structure_constant(j, b, a);
                    if !y.is_zero() {
                        acc += x * y;
                    }
                }
            }
            k[(i, j)] = acc.clone();
            k[(j, i)] = acc;
        }
    }
    k
}

/// Whether the lower central series of `l` reaches zero.
pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    let s = series(l, &Subspace::full(l.dim()), SeriesMode::LowerCentral).expect("full space");
    s.last().unwrap().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Subspace};

    fn entry(i: usize, j: usize, value: &[(usize, i64)]) -> BracketEntry {
        BracketEntry {
            i,
            j,
            value: value.iter().map(|&(k, v)| (k, int(v))).collect(),
        }
    }

    pub(crate) fn sl2() -> LieAlgebra {
        // basis e, h, f
        LieAlgebra::from_entries(
            "sl2",
            3,
            Some(vec!["e".into(), "h".into(), "f".into()]),
            [
                entry(0, 1, &[(0, -2)]),
                entry(0, 2, &[(1, 1)]),
                entry(1, 2, &[(2, -2)]),
            ],
        )
        .unwrap()
    }

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_entries("heis", 3, None, [entry(0, 1, &[(2, 1)])]).unwrap()
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(
            n,
            vs.iter()
                .map(|v| v.iter().map(|&x| int(x)).collect::<Vec<_>>()),
        )
    }

    #[test]
    fn validation_examples() {
        assert!(validate_algebra(&sl2()).is_valid());
        let bad = LieAlgebra::from_entries("bad", 2, None, [entry(0, 0, &[(0, 1)])]).unwrap();
        let r = validate_algebra(&bad);
        assert_eq!(r.antisymmetry, vec![(0, 0)]);
        let two = LieAlgebra::from_entries("ab", 2, None, [entry(0, 1, &[(0, 1)])]).unwrap();
        assert!(validate_algebra(&two).is_valid());
        let not_jacobi = LieAlgebra::from_entries(
            "nj",
            3,
            None,
            [entry(0, 1, &[(2, 1)]), entry(0, 2, &[(0, 1)])],
        )
        .unwrap();
        assert_eq!(validate_algebra(&not_jacobi).jacobi, vec![(0, 1, 2)]);
    }

    #[test]
    fn index_out_of_range_is_reported() {
        let e = LieAlgebra::from_entries("x", 2, None, [entry(0, 1, &[(2, 1)])]);
        assert_eq!(e, Err(Error::IndexOutOfRange { index: 2, dim: 2 }));
    }

    #[test]
    fn bracket_examples() {
        let l = sl2();
        assert_eq!(l.bracket(&l.unit(0), &l.unit(2)), l.unit(1));
        assert_eq!(
            l.bracket(&l.unit(1), &l.unit(0)),
            vec![int(2), int(0), int(0)]
        );
        let x = vec![int(3), int(-1), int(5)];
        assert!(l.bracket(&x, &x).iter().all(Zero::is_zero));
    }

    #[test]
    fn subspace_bracket_examples() {
        let l = sl2();
        let full = Subspace::full(3);
        assert_eq!(
            bracket_subspaces(&l, &span(3, &[&[1, 0, 0]]), &span(3, &[&[0, 0, 1]])),
            span(3, &[&[0, 1, 0]])
        );
        assert_eq!(bracket_subspaces(&l, &full, &full), full);
        let h = heisenberg();
        assert_eq!(bracket_subspaces(&h, &full, &full), span(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn ideal_closure_examples() {
        assert!(ideal_closure(&sl2(), &span(3, &[&[1, 0, 0]])).is_full());
        let z = span(3, &[&[0, 0, 1]]);
        assert_eq!(ideal_closure(&heisenberg(), &z), z);
        assert!(ideal_closure(&sl2(), &Subspace::zero(3)).is_zero());
    }

    #[test]
    fn series_examples() {
        let full = Subspace::full(3);
        let s = series(&heisenberg(), &full, SeriesMode::LowerCentral).unwrap();
        assert_eq!(
            s,
            vec![full.clone(), span(3, &[&[0, 0, 1]]), Subspace::zero(3)]
        );
        assert_eq!(
            series(&sl2(), &full, SeriesMode::Derived).unwrap(),
            vec![full]
        );
        let two = LieAlgebra::from_entries("ab", 2, None, [entry(0, 1, &[(0, 1)])]).unwrap();
        let f2 = Subspace::full(2);
        assert_eq!(
            series(&two, &f2, SeriesMode::Derived).unwrap(),
            vec![f2, span(2, &[&[1, 0]]), Subspace::zero(2)]
        );
        assert_eq!(
            series(
                &sl2(),
                &span(3, &[&[1, 0, 0], &[0, 0, 1]]),
                SeriesMode::Derived
            ),
            Err(Error::NotASubalgebra)
        );
    }

    #[test]
    fn killing_examples() {
        // basis e, h, f
        let k = killing_form(&sl2());
        assert_eq!(k[(1, 1)], int(8));
        assert_eq!(k[(0, 2)], int(4));
        assert_eq!(k[(2, 0)], int(4));
        for (i, j) in [(0, 0), (0, 1), (1, 2), (2, 2)] {
            assert!(k[(i, j)].is_zero());
        }
        assert!(killing_form(&heisenberg()).is_zero());
    }

    #[test]
    fn transport_round_trip() {
        let l = sl2();
        let p = Matrix::from_rows(
            3,
            vec![
                vec![int(1), int(1), int(0)],
                vec![int(0), int(1), int(2)],
                vec![int(1), int(0), int(1)],
            ],
        );
        let t = l.transport(&p).unwrap();
        assert!(validate_algebra(&t).is_valid());
        let back = t.transport(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, l);
    }
}
