//! Prime-field shadows of exact computations.
//!
//! Reducing an integer (or denominator-free rational) matrix modulo `p` can
//! only lose rank, so a modular rank is a lower bound for the exact rank and
//! the two agree for all but finitely many primes. Every prime used here is
//! above `2^30` and below `2^31`, which keeps products inside `u64`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::Matrix;
use super::rational::Rational;

pub const PRIME_FLOOR: u64 = 1 << 30;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `count` distinct primes in `(2^30, 2^31)` derived deterministically from
/// `seed`.
pub fn primes_from_seed(seed: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut state = seed;
    while out.len() < count {
        // splitmix64 step
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        let mut candidate = PRIME_FLOOR + 1 + (z % (PRIME_FLOOR - 1024));
        candidate |= 1;
        while !is_prime(candidate) {
            candidate += 2;
        }
        if !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    out
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

pub fn i128_mod(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}

/// Residue of a rational, or `None` when `p` divides the denominator.
pub fn rational_mod(x: &Rational, p: u64) -> Option<u64> {
    let d = bigint_mod(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(bigint_mod(x.numer(), p) * inv_mod(d, p) % p)
}

/// Rank of `m` over `F_p`; `None` when `p` divides a denominator.
pub fn rank_mod_p(m: &Matrix, p: u64) -> Option<usize> {
    let mut ech = ModularEchelon::new(m.cols(), p);
    for r in m.row_vectors() {
        let row: Option<Vec<u64>> = r.iter().map(|x| rational_mod(x, p)).collect();
        ech.insert(row?);
    }
    Some(ech.rank())
}

/// Result of a two-prime rank computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPrimeRank {
    pub primes: [u64; 2],
    pub ranks: [usize; 2],
}

impl TwoPrimeRank {
    pub fn agree(&self) -> bool {
        self.ranks[0] == self.ranks[1]
    }
}

/// Ranks over two primes chosen from `seed`, skipping primes that divide a
/// denominator of `m`.
pub fn two_prime_rank(m: &Matrix, seed: u64) -> TwoPrimeRank {
    let mut primes = Vec::new();
    let mut ranks = Vec::new();
    let mut s = seed;
    while primes.len() < 2 {
        for p in primes_from_seed(s, 2) {
            if primes.len() == 2 || primes.contains(&p) {
                continue;
            }
            if let Some(r) = rank_mod_p(m, p) {
                primes.push(p);
                ranks.push(r);
            }
        }
        s = s.wrapping_add(1);
    }
    TwoPrimeRank {
        primes: [primes[0], primes[1]],
        ranks: [ranks[0], ranks[1]],
    }
}

/// Dense echelon basis over `F_p`, grown one row at a time.
#[derive(Clone, Debug)]
pub struct ModularEchelon {
    cols: usize,
    p: u64,
    rows: Vec<Vec<u64>>,
    pivot_row: Vec<Option<usize>>,
}

impl ModularEchelon {
    pub fn new(cols: usize, p: u64) -> Self {
        ModularEchelon {
            cols,
            p,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Inserts a row of residues; returns `true` when the rank grew.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        assert_eq!(row.len(), self.cols);
        let p = self.p;
        for c in 0..self.cols {
            if row[c] == 0 {
                continue;
            }
            match self.pivot_row[c] {
                Some(i) => {
                    // pivot rows are normalized to a leading 1
                    let f = p - row[c];
                    let pr = &self.rows[i];
                    for j in c..self.cols {
                        if pr[j] != 0 {
                            row[j] = (row[j] + f * pr[j]) % p;
                        }
                    }
                }
                None => {
                    let inv = inv_mod(row[c], p);
                    for x in row[c..].iter_mut() {
                        *x = *x * inv % p;
                    }
                    self.pivot_row[c] = Some(self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
        false
    }
}

/// Sparse counterpart of [`ModularEchelon`] for very wide rows.
#[derive(Clone, Debug)]
pub struct SparseModularEchelon {
    p: u64,
    rows: Vec<Vec<(u32, u64)>>,
    pivot_of_col: Vec<u32>,
}

impl SparseModularEchelon {
    pub fn new(cols: usize, p: u64) -> Self {
        SparseModularEchelon {
            p,
            rows: Vec::new(),
            pivot_of_col: vec![u32::MAX; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Inserts a sorted row of nonzero residues; returns `true` when the rank
    /// grew.
    pub fn insert(&mut self, mut row: Vec<(u32, u64)>) -> bool {
        let p = self.p;
        let mut pos = 0;
        while pos < row.len() {
            let (c, v) = row[pos];
            let pr = self.pivot_of_col[c as usize];
            if pr == u32::MAX {
                pos += 1;
                continue;
            }
            // row -= v * pivot (pivot rows lead with 1)
            let pivot = &self.rows[pr as usize];
            let f = p - v;
            let mut out = Vec::with_capacity(row.len() + pivot.len());
            out.extend_from_slice(&row[..pos]);
            let (mut i, mut j) = (pos, 0);
            while i < row.len() || j < pivot.len() {
                let ca = row.get(i).map_or(u32::MAX, |e| e.0);
                let cb = pivot.get(j).map_or(u32::MAX, |e| e.0);
                if ca < cb {
                    out.push(row[i]);
                    i += 1;
                } else if cb < ca {
                    out.push((cb, f * pivot[j].1 % p));
                    j += 1;
                } else {
                    let x = (row[i].1 + f * pivot[j].1) % p;
                    if x != 0 {
                        out.push((ca, x));
                    }
                    i += 1;
                    j += 1;
                }
            }
            row = out;
        }
        if row.is_empty() {
            return false;
        }
        let inv = inv_mod(row[0].1, p);
        for e in row.iter_mut() {
            e.1 = e.1 * inv % p;
        }
        self.pivot_of_col[row[0].0 as usize] = self.rows.len() as u32;
        self.rows.push(row);
        true
    }
}
