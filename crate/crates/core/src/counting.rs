//! Permanents and restriction matrices.
//!
//! Entry `(i, j)` of a restriction matrix is 1 when the assignment
//! `π_i = j` is allowed, so the permanent counts the permutations obeying
//! every restriction. Indices are 1-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::perm::{Permutation, Permutations};

pub const DEFAULT_PERMANENT_CAP: usize = 24;

const NAIVE_CAP: usize = 10;
const FILTER_CAP: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<i64>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return invalid(format!("row {} has {} entries, expected {n}", i + 1, r.len()));
        }
        Ok(SquareMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                data.push(f(i, j));
            }
        }
        SquareMatrix { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        SquareMatrix::from_fn(n, |_, _| 0)
    }

    pub fn ones(n: usize) -> Self {
        SquareMatrix::from_fn(n, |_, _| 1)
    }

    pub fn identity(n: usize) -> Self {
        SquareMatrix::from_fn(n, |i, j| i64::from(i == j))
    }

    /// The permutation matrix with a 1 at `(i, π_i)`.
    pub fn permutation(pi: &Permutation) -> Self {
        let p: Vec<usize> = pi.values().collect();
        SquareMatrix::from_fn(p.len(), |i, j| i64::from(p[i - 1] == j))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n, "index ({i}, {j}) out of range");
        self.data[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        SquareMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<Self> {
        if self.n != other.n {
            return invalid("matrix orders differ");
        }
        let n = self.n;
        Ok(SquareMatrix::from_fn(n, |i, j| (1..=n).map(|m| self.get(i, m) * other.get(m, j)).sum()))
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&x| x == 0 || x == 1)
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquareMatrix(n={}, {:?})", self.n, self.data)
    }
}

impl FromStr for SquareMatrix {
    type Err = Error;

    /// Whitespace-separated integers, one row per line. Blank lines and
    /// lines starting with `#` are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad matrix entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SquareMatrix::from_rows(rows)
    }
}

/// A 0/1 square matrix read as "`i ↦ j` allowed".
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RestrictionMatrix(SquareMatrix);

impl RestrictionMatrix {
    pub fn new(m: SquareMatrix) -> Result<Self> {
        if !m.is_binary() {
            return invalid("restriction matrix entries must be 0 or 1");
        }
        Ok(RestrictionMatrix(m))
    }

    pub fn from_fn(n: usize, allowed: impl Fn(usize, usize) -> bool) -> Self {
        RestrictionMatrix(SquareMatrix::from_fn(n, |i, j| i64::from(allowed(i, j))))
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn allows(&self, i: usize, j: usize) -> bool {
        self.0.get(i, j) == 1
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn transpose(&self) -> Self {
        RestrictionMatrix(self.0.transpose())
    }

    /// Whether `pi` respects every restriction.
    pub fn admits(&self, pi: &Permutation) -> bool {
        pi.len() == self.order() && pi.values().enumerate().all(|(i, v)| self.allows(i + 1, v))
    }
}

/// `a_ij = 1` iff `i ≥ j − k + 2`; its permanent is `|Av_n(Q_k)|`.
pub fn qk_matrix(k: usize, n: usize) -> Result<RestrictionMatrix> {
    if k < 2 || n == 0 {
        return invalid(format!("qk_matrix needs k >= 2 and n >= 1, got k={k}, n={n}"));
    }
    Ok(RestrictionMatrix::from_fn(n, |i, j| i + k >= j + 2))
}

/// `a_ij = 1` iff `j − i + b ≥ 0`: landing slot `j` is reachable from beat
/// `i` with a non-negative throw.
pub fn juggling_matrix(b: usize, n: usize) -> Result<RestrictionMatrix> {
    if b == 0 || n == 0 {
        return invalid(format!("juggling_matrix needs b >= 1 and n >= 1, got b={b}, n={n}"));
    }
    Ok(RestrictionMatrix::from_fn(n, |i, j| j + b >= i))
}

pub fn permanent(m: &SquareMatrix) -> Result<BigInt> {
    permanent_with_cap(m, DEFAULT_PERMANENT_CAP)
}

/// Ryser's formula with Gray-code subset order. The subset range is split
/// into chunks that run in parallel; each chunk first tries `i128` and the
/// whole computation is redone with big integers if anything overflows.
pub fn permanent_with_cap(m: &SquareMatrix, cap: usize) -> Result<BigInt> {
    let n = m.order();
    if n > cap {
        return Err(Error::ResourceLimit { what: "permanent", n, cap });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let total: u64 = 1 << n;
    let chunks: u64 = if n >= 12 { 256 } else { 1 };
    let step = total / chunks;
    let ranges: Vec<(u64, u64)> = (0..chunks).map(|c| (c * step, (c + 1) * step)).collect();

    let fast: Option<Vec<i128>> = ranges.par_iter().map(|&(lo, hi)| ryser_chunk_i128(m, lo, hi)).collect();
    let sum = match fast.and_then(|parts| parts.into_iter().try_fold(0i128, |a, b| a.checked_add(b))) {
        Some(s) => BigInt::from(s),
        None => ranges
            .par_iter()
            .map(|&(lo, hi)| ryser_chunk_big(m, lo, hi))
            .reduce(BigInt::zero, |a, b| a + b),
    };
    Ok(if n % 2 == 1 { -sum } else { sum })
}

fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

fn row_sums_for(m: &SquareMatrix, subset: u64) -> Vec<i128> {
    let n = m.order();
    (1..=n)
        .map(|i| (1..=n).filter(|&j| subset >> (j - 1) & 1 == 1).map(|j| i128::from(m.get(i, j))).sum())
        .collect()
}

fn columns(m: &SquareMatrix) -> Vec<Vec<i64>> {
    let n = m.order();
    (1..=n).map(|j| (1..=n).map(|i| m.get(i, j)).collect()).collect()
}

/// Sum over Gray-code indices `lo..hi` of `(-1)^{|S|} Π_i rowsum_i(S)`.
fn ryser_chunk_i128(m: &SquareMatrix, lo: u64, hi: u64) -> Option<i128> {
    let cols = columns(m);
    let mut subset = gray(lo);
    let mut sums = row_sums_for(m, subset);
    let mut acc: i128 = 0;
    for k in lo..hi {
        if k > lo {
            let next = gray(k);
            let j = (next ^ subset).trailing_zeros() as usize;
            let added = next & (1 << j) != 0;
            for (s, &a) in sums.iter_mut().zip(&cols[j]) {
                let a = i128::from(a);
                *s = if added { s.checked_add(a)? } else { s.checked_sub(a)? };
            }
            subset = next;
        }
        if subset == 0 {
            continue;
        }
        let mut prod: i128 = 1;
        for &s in &sums {
            prod = prod.checked_mul(s)?;
            if prod == 0 {
                break;
            }
        }
        acc = if subset.count_ones() % 2 == 1 { acc.checked_sub(prod)? } else { acc.checked_add(prod)? };
    }
    Some(acc)
}

fn ryser_chunk_big(m: &SquareMatrix, lo: u64, hi: u64) -> BigInt {
    let cols = columns(m);
    let mut subset = gray(lo);
    let mut sums: Vec<BigInt> = row_sums_for(m, subset).into_iter().map(BigInt::from).collect();
    let mut acc = BigInt::zero();
    for k in lo..hi {
        if k > lo {
            let next = gray(k);
            let j = (next ^ subset).trailing_zeros() as usize;
            let added = next & (1 << j) != 0;
            for (s, &a) in sums.iter_mut().zip(&cols[j]) {
                let a = BigInt::from(a);
                if added {
                    *s += a;
                } else {
                    *s -= a;
                }
            }
            subset = next;
        }
        if subset == 0 {
            continue;
        }
        let prod: BigInt = sums.iter().product();
        if subset.count_ones() % 2 == 1 {
            acc -= prod;
        } else {
            acc += prod;
        }
    }
    acc
}

/// The definitional sum over all of `S_n`. Test oracle only.
pub fn permanent_naive(m: &SquareMatrix) -> Result<BigInt> {
    let n = m.order();
    if n > NAIVE_CAP {
        return Err(Error::ResourceLimit { what: "naive permanent", n, cap: NAIVE_CAP });
    }
    Ok(Permutations::new(n)
        .map(|p| p.values().enumerate().map(|(i, v)| BigInt::from(m.get(i + 1, v))).product::<BigInt>())
        .sum())
}

/// Number of permutations allowed by `m`, via its permanent.
pub fn count_by_percus(m: &RestrictionMatrix) -> Result<BigUint> {
    let p = permanent(m.matrix())?;
    Ok(p.abs().to_biguint().expect("permanent of a 0/1 matrix is non-negative"))
}

/// Number of permutations allowed by `m`, by filtering `S_n` directly.
pub fn count_by_filter(m: &RestrictionMatrix) -> Result<u64> {
    let n = m.order();
    if n > FILTER_CAP {
        return Err(Error::ResourceLimit { what: "filter count", n, cap: FILTER_CAP });
    }
    Ok(Permutations::new(n).filter(|p| m.admits(p)).count() as u64)
}

/// Fibonacci numbers with `fib(0) = 0`, `fib(1) = fib(2) = 1`.
pub fn fib(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `|Av_n(Q_k)|`: `(k−1)!·(k−1)^{n−k+1}` for `n ≥ k`, and `n!` below.
pub fn qk_closed_form(k: usize, n: usize) -> BigUint {
    assert!(k >= 2, "k must be at least 2");
    if n < k {
        return factorial(n);
    }
    factorial(k - 1) * BigUint::from(k - 1).pow((n - k + 1) as u32)
}

/// Ground-state juggling sequences of period `n` with `b` balls:
/// `(b+1)^{n−b}·b!` for `n ≥ b`, and `n!` below.
pub fn juggling_closed_form(n: usize, b: usize) -> BigUint {
    if n < b {
        return factorial(n);
    }
    BigUint::from(b + 1).pow((n - b) as u32) * factorial(b)
}
