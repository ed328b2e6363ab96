//! Fraction-free sparse echelon forms over the integers.
//!
//! The codimension oracle inserts hundreds of thousands of sparse integer
//! rows into an echelon basis. Doing that over `BigRational` is dominated by
//! allocation, so rows are kept integral with the content removed, and
//! elimination uses `row <- (a/g) row - (b/g) pivot`. The scalar type is
//! either a checked `i128`, which reports [`Overflow`] so the caller can rerun
//! on `BigInt`, or `BigInt` itself.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modular;
use super::rational::Rational;

/// Signals that a checked `i128` computation left the representable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub trait IntScalar: Clone + Eq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn is_unit(&self) -> bool;
    fn mul(&self, o: &Self) -> Result<Self, Overflow>;
    fn add(&self, o: &Self) -> Result<Self, Overflow>;
    fn sub(&self, o: &Self) -> Result<Self, Overflow>;
    /// Nonnegative gcd.
    fn gcd(&self, o: &Self) -> Self;
    /// Exact division; the caller guarantees divisibility.
    fn div_exact(&self, o: &Self) -> Self;
    fn from_bigint(x: &BigInt) -> Result<Self, Overflow>;
    fn to_bigint(&self) -> BigInt;
    fn residue(&self, p: u64) -> u64;
}

impl IntScalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_mul(*o).ok_or(Overflow)
    }
    fn add(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_add(*o).ok_or(Overflow)
    }
    fn sub(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_sub(*o).ok_or(Overflow)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn from_bigint(x: &BigInt) -> Result<Self, Overflow> {
        // stay well inside the range so that one product fits
        x.to_i128()
            .filter(|v| v.unsigned_abs() < (1u128 << 100))
            .ok_or(Overflow)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn residue(&self, p: u64) -> u64 {
        modular::i128_mod(*self, p)
    }
}

impl IntScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn mul(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self * o)
    }
    fn add(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self + o)
    }
    fn sub(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self - o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn from_bigint(x: &BigInt) -> Result<Self, Overflow> {
        Ok(x.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn residue(&self, p: u64) -> u64 {
        modular::bigint_mod(self, p)
    }
}

/// Sparse integer row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow<T> = Vec<(u32, T)>;

const NO_PIVOT: u32 = u32::MAX;

fn normalize<T: IntScalar>(row: &mut SparseRow<T>) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.gcd(&first.1);
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = first.1.is_negative();
    if !g.is_unit() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
    if flip {
        for (_, v) in row.iter_mut() {
            *v = v.neg();
        }
    }
}

/// `fa * a - fb * b`, merged by column.
fn combine<T: IntScalar>(
    a: &SparseRow<T>,
    fa: &T,
    b: &SparseRow<T>,
    fb: &T,
) -> Result<SparseRow<T>, Overflow> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scale_a = !(fa.is_unit() && !fa.is_negative());
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(u32::MAX, |e| e.0);
        let cb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ca < cb {
            let v = if scale_a {
                a[i].1.mul(fa)?
            } else {
                a[i].1.clone()
            };
            out.push((ca, v));
            i += 1;
        } else if cb < ca {
            out.push((cb, b[j].1.mul(fb)?.neg()));
            j += 1;
        } else {
            let va = if scale_a {
                a[i].1.mul(fa)?
            } else {
                a[i].1.clone()
            };
            let v = va.sub(&b[j].1.mul(fb)?)?;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

fn lookup<T>(row: &SparseRow<T>, col: u32) -> Option<&T> {
    row.binary_search_by_key(&col, |e| e.0)
        .ok()
        .map(|i| &row[i].1)
}

/// Echelon basis of integer rows, grown one row at a time. Not reduced: a
/// pivot row may have nonzeros in later pivot columns.
#[derive(Clone, Debug)]
pub struct FractionFreeEchelon<T: IntScalar> {
    cols: usize,
    rows: Vec<SparseRow<T>>,
    pivot_of_col: Vec<u32>,
}

impl<T: IntScalar> FractionFreeEchelon<T> {
    pub fn new(cols: usize) -> Self {
        assert!(cols < u32::MAX as usize);
        FractionFreeEchelon {
            cols,
            rows: Vec::new(),
            pivot_of_col: vec![NO_PIVOT; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    fn eliminate(&self, mut row: SparseRow<T>) -> Result<SparseRow<T>, Overflow> {
        let mut pos = 0;
        while pos < row.len() {
            let (c, ref b) = row[pos];
            let pr = self.pivot_of_col[c as usize];
            if pr == NO_PIVOT {
                pos += 1;
                continue;
            }
            let pivot = &self.rows[pr as usize];
            let a = &pivot[0].1;
            let g = a.gcd(b);
            let (fa, fb) = (a.div_exact(&g), b.div_exact(&g));
            row = combine(&row, &fa, pivot, &fb)?;
            if !fa.is_unit() {
                normalize(&mut row);
            }
            // entries before `pos` are untouched by the pivot row
        }
        Ok(row)
    }

    /// Inserts `row` (sorted, zero-free); returns `true` when the rank grew.
    pub fn insert(&mut self, row: SparseRow<T>) -> Result<bool, Overflow> {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        let mut row = self.eliminate(row)?;
        if row.is_empty() {
            return Ok(false);
        }
        normalize(&mut row);
        self.pivot_of_col[row[0].0 as usize] = self.rows.len() as u32;
        self.rows.push(row);
        Ok(true)
    }

    /// Whether `row` lies in the current span.
    pub fn contains(&self, row: SparseRow<T>) -> Result<bool, Overflow> {
        Ok(self.eliminate(row)?.is_empty())
    }

    /// Back-substitutes into reduced form: every pivot column is zero outside
    /// its own row.
    pub fn into_reduced(self) -> Result<EchelonForm<T>, Overflow> {
        let cols = self.cols;
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        for i in (0..rows.len()).rev() {
            let c = rows[i][0].0;
            let (head, tail) = rows.split_at_mut(i);
            let pivot = &tail[0];
            let a = &pivot[0].1;
            for other in head.iter_mut() {
                let Some(b) = lookup(other, c) else { continue };
                let g = a.gcd(b);
                let (fa, fb) = (a.div_exact(&g), b.div_exact(&g));
                let mut next = combine(other, &fa, pivot, &fb)?;
                normalize(&mut next);
                *other = next;
            }
        }
        Ok(EchelonForm { cols, rows })
    }
}

/// Reduced echelon basis with integral rows: row `i` has pivot column
/// `pivot(i)` with positive value `pivot_value(i)` and every other row is zero
/// there. Dividing each row by its pivot value gives the canonical RREF.
#[derive(Clone, Debug)]
pub struct EchelonForm<T: IntScalar> {
    cols: usize,
    rows: Vec<SparseRow<T>>,
}

impl<T: IntScalar> EchelonForm<T> {
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot(&self, i: usize) -> usize {
        self.rows[i][0].0 as usize
    }

    pub fn pivot_value(&self, i: usize) -> &T {
        &self.rows[i][0].1
    }

    pub fn row(&self, i: usize) -> &SparseRow<T> {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, col: usize) -> Option<&T> {
        lookup(&self.rows[i], col as u32)
    }

    /// Row `i` of the canonical RREF as exact rationals (dense).
    pub fn rational_row(&self, i: usize) -> Vec<Rational> {
        let d = self.pivot_value(i).to_bigint();
        let mut out = vec![Rational::zero(); self.cols];
        for (c, v) in &self.rows[i] {
            out[*c as usize] = Rational::new(v.to_bigint(), d.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Subspace};

    fn sparse(v: &[i64]) -> SparseRow<i128> {
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(c, &x)| (c as u32, x as i128))
            .collect()
    }

    #[test]
    fn matches_rational_rref() {
        let rows: [&[i64]; 4] = [&[0, 2, 4, 6], &[3, 1, 0, 2], &[3, 3, 4, 8], &[1, 0, 0, 5]];
        let mut e = FractionFreeEchelon::<i128>::new(4);
        let grew: Vec<bool> = rows.iter().map(|r| e.insert(sparse(r)).unwrap()).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        let red = e.into_reduced().unwrap();
        let expected = Subspace::span(
            4,
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect::<Vec<_>>()),
        );
        let got = Subspace::span(4, (0..red.rank()).map(|i| red.rational_row(i)));
        assert_eq!(got, expected);
        for i in 0..red.rank() {
            assert_eq!(red.rational_row(i), expected.basis().row(i).to_vec());
        }
    }

    #[test]
    fn i128_overflow_is_reported() {
        let big = 1i128 << 100;
        let mut e = FractionFreeEchelon::<i128>::new(2);
        e.insert(vec![(0, big - 1), (1, 1)]).unwrap();
        assert_eq!(e.insert(vec![(0, big - 3), (1, big)]), Err(Overflow));
        let mut b = FractionFreeEchelon::<BigInt>::new(2);
        b.insert(vec![(0, BigInt::from(big - 1)), (1, BigInt::from(1))])
            .unwrap();
        assert_eq!(
            b.insert(vec![(0, BigInt::from(big - 3)), (1, BigInt::from(big))]),
            Ok(true)
        );
    }
}
