use num_traits::{One, Zero};

use super::matrix::{kernel, rref_in_place, Matrix};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A linear subspace of `F^n`, stored by its reduced row echelon basis with
/// zero rows removed. The representation is canonical, so derived equality
/// and hashing are equality and hashing of subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span<I, V>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<Rational>>,
    {
        let mut rows: Vec<Vec<Rational>> = vectors
            .into_iter()
            .map(Into::into)
            .inspect(|v: &Vec<Rational>| assert_eq!(v.len(), ambient, "vector length mismatch"))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let pivots = rref_in_place(&mut rows, ambient);
        Subspace {
            ambient,
            basis: Matrix::from_rows(ambient, rows),
            pivots,
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace::span(m.cols(), m.row_vectors().map(|r| r.to_vec()))
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Subspace::span(m.rows(), m.columns())
    }

    pub fn unit(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(
            ambient,
            indices.into_iter().map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            }),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots; the unit vectors at these positions
    /// span a complement, and they index quotient coordinates.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// `v` minus its component along the canonical basis; zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.to_vec();
        for (row, &p) in self.basis.row_vectors().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        other.dim() <= self.dim() && other.basis_vectors().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Span of `m · b` over the basis vectors `b`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(m.rows(), self.basis_vectors().map(|b| m.apply(b)))
    }

    /// `{ x : <x, b> = 0 for every basis vector b }`.
    pub fn orthogonal(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        kernel(&self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        subspace_sum(self, other)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        subspace_intersect(self, other)
    }
}

fn check_ambient(u: &Subspace, v: &Subspace) -> Result<()> {
    if u.ambient != v.ambient {
        return Err(Error::DimensionMismatch {
            expected: u.ambient,
            found: v.ambient,
        });
    }
    Ok(())
}

/// Smallest subspace containing both arguments.
pub fn subspace_sum(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    check_ambient(u, v)?;
    if v.is_zero() || u.contains_subspace(v) {
        return Ok(u.clone());
    }
    if u.is_zero() {
        return Ok(v.clone());
    }
    Ok(Subspace::span(
        u.ambient,
        u.basis_vectors()
            .chain(v.basis_vectors())
            .map(|r| r.to_vec()),
    ))
}

/// Set-theoretic intersection, computed as the common kernel of both
/// orthogonal complements.
pub fn subspace_intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    check_ambient(u, v)?;
    if u.contains_subspace(v) {
        return Ok(v.clone());
    }
    if v.contains_subspace(u) {
        return Ok(u.clone());
    }
    let (ou, ov) = (u.orthogonal(), v.orthogonal());
    let constraints: Vec<Vec<Rational>> = ou
        .basis_vectors()
        .chain(ov.basis_vectors())
        .map(|r| r.to_vec())
        .collect();
    Ok(kernel(&Matrix::from_rows(u.ambient, constraints)))
}

/// Incrementally maintained reduced echelon basis. Used wherever spans grow
/// one vector at a time (operator-algebra closures, Krylov sequences).
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `true` when the span grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace {
            ambient: self.ambient,
            basis: Matrix::from_rows(self.ambient, self.rows.clone()),
            pivots: self.pivots.clone(),
        }
    }
}


/// The quotient `top / bottom` of two nested subspaces, with coordinates
/// taken along the canonical basis of the reduced representatives. When `top`
/// is the whole space these are the free (non-pivot) coordinates of `bottom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    top: Subspace,
    bottom: Subspace,
    reps: Subspace,
}

impl Subquotient {
    pub fn new(top: &Subspace, bottom: &Subspace) -> Result<Self> {
        check_ambient(top, bottom)?;
        if !top.contains_subspace(bottom) {
            return Err(Error::DimensionMismatch {
                expected: top.dim(),
                found: bottom.dim(),
            });
        }
        let reps = Subspace::span(top.ambient, top.basis_vectors().map(|t| bottom.reduce(t)));
        Ok(Subquotient {
            top: top.clone(),
            bottom: bottom.clone(),
            reps,
        })
    }

    pub fn quotient(bottom: &Subspace) -> Self {
        Subquotient::new(&Subspace::full(bottom.ambient), bottom).expect("nested")
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn top(&self) -> &Subspace {
        &self.top
    }

    pub fn bottom(&self) -> &Subspace {
        &self.bottom
    }

    /// Representatives of the quotient basis (zero in the pivot columns of
    /// `bottom`).
    pub fn representatives(&self) -> &Subspace {
        &self.reps
    }

    /// Quotient coordinates of `v`, which must lie in `top`.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.reps.coordinates(&self.bottom.reduce(v))
    }

    /// The representative with the given quotient coordinates.
    pub fn lift(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Rational::zero(); self.top.ambient];
        for (c, r) in coords.iter().zip(self.reps.basis_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(r) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Projection matrix `ambient -> quotient`; only meaningful on `top`.
    pub fn projection(&self) -> Matrix {
        let n = self.top.ambient;
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                let w = self.bottom.reduce(&e);
                self.reps.pivots().iter().map(|&p| w[p].clone()).collect()
            })
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of the representatives as columns (`quotient -> ambient`).
    pub fn section(&self) -> Matrix {
        Matrix::from_columns(
            self.top.ambient,
            &self
                .reps
                .basis_vectors()
                .map(|r| r.to_vec())
                .collect::<Vec<_>>(),
        )
    }

    /// The map induced by `op` on the quotient, or `None` if `op` does not
    /// preserve both `top` and `bottom`.
    pub fn induced(&self, op: &Matrix) -> Option<Matrix> {
        if !self.top.contains_subspace(&self.top.image(op))
            || !self.bottom.contains_subspace(&self.bottom.image(op))
        {
            return None;
        }
        let cols: Vec<Vec<Rational>> = self
            .reps
            .basis_vectors()
            .map(|r| self.coords(&op.apply(r)).expect("image lies in top"))
            .collect();
        Some(Matrix::from_columns(self.dim(), &cols))
    }

    /// Image of a subspace of `top` in quotient coordinates.
    pub fn project_subspace(&self, u: &Subspace) -> Subspace {
        Subspace::span(
            self.dim(),
            u.basis_vectors()
                .map(|v| self.coords(v).expect("subspace of top")),
        )
    }
}
