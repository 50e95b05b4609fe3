//! Fraction-free elimination over exact rings.
//!
//! Bareiss elimination keeps every intermediate entry equal to a minor of
//! the input, so each update divides exactly by the previous pivot.
//! Pivoting is full: at step `k` the pivot is the first nonzero entry of
//! the trailing submatrix in row-major scan order.

use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::gaussian::GaussianRational;

/// Integral domain with exact division.
pub trait ExactRing: Clone + PartialEq + Zero + One {
    fn times(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / other`, where the quotient is known to be exact.
    fn exact_div(&self, other: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }
}

/// Gaussian integer `re + im·i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl Add for GaussInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Mul for GaussInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.times(&o)
    }
}

impl Zero for GaussInt {
    fn zero() -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussInt {
    fn one() -> Self {
        Self { re: BigInt::one(), im: BigInt::zero() }
    }
}

impl ExactRing for GaussInt {
    fn times(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Self { re: &self.re * &o.re, im: BigInt::zero() };
        }
        Self { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn minus(&self, o: &Self) -> Self {
        Self { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn negated(&self) -> Self {
        Self { re: -&self.re, im: -&self.im }
    }
    fn exact_div(&self, o: &Self) -> Self {
        if o.im.is_zero() {
            return Self { re: self.re.exact_div(&o.re), im: self.im.exact_div(&o.re) };
        }
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        Self { re: re.exact_div(&n), im: im.exact_div(&n) }
    }
}

fn find_pivot<R: ExactRing>(a: &[Vec<R>], k: usize) -> Option<(usize, usize)> {
    let cols = a.first().map_or(0, Vec::len);
    (k..a.len()).find_map(|i| (k..cols).find(|&j| !a[i][j].is_zero()).map(|j| (i, j)))
}

/// In-place Bareiss elimination. Returns the rank and whether an odd
/// number of row/column swaps was made.
fn eliminate<R: ExactRing>(a: &mut [Vec<R>]) -> (usize, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = R::one();
    let mut odd = false;
    for k in 0..rows.min(cols) {
        let Some((pi, pj)) = find_pivot(a, k) else {
            return (k, odd);
        };
        if pi != k {
            a.swap(pi, k);
            odd = !odd;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            odd = !odd;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..cols {
                let v = pivot_row[k].times(&row[j]).minus(&row[k].times(&pivot_row[j]));
                row[j] = v.exact_div(&prev);
            }
            row[k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    (rows.min(cols), odd)
}

/// Rank of a rectangular matrix.
pub fn rank<R: ExactRing>(mut a: Vec<Vec<R>>) -> usize {
    eliminate(&mut a).0
}

/// Determinant of a square matrix.
///
/// # Panics
/// If the matrix is not square.
pub fn det<R: ExactRing>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    if n == 0 {
        return R::one();
    }
    let (r, odd) = eliminate(&mut a);
    if r < n {
        return R::zero();
    }
    let d = a[n - 1][n - 1].clone();
    if odd {
        d.negated()
    } else {
        d
    }
}

/// Clear denominators row by row; the rank is unchanged.
pub fn to_gauss_int_rows(rows: &[Vec<GaussianRational>]) -> Vec<Vec<GaussInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
            row.iter()
                .map(|c| {
                    let re = c.re() * &l;
                    let im = c.im() * &l;
                    GaussInt { re: re.to_integer(), im: im.to_integer() }
                })
                .collect()
        })
        .collect()
}

/// Rank over the Gaussian rationals.
pub fn rank_gaussian(rows: &[Vec<GaussianRational>]) -> usize {
    rank(to_gauss_int_rows(rows))
}

const MOD_P: u64 = (1 << 61) - 1;

fn mod_p(x: i64) -> u64 {
    (i128::from(x).rem_euclid(i128::from(MOD_P))) as u64
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(MOD_P)) as u64
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, MOD_P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

/// Rank of an integer matrix reduced modulo the prime `2^61 − 1`.
///
/// Never exceeds the rank over ℚ, so a full-rank answer is exact.
pub fn rank_mod_prime(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| mod_p(x)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = inv_mod(a[rank][c]);
        for i in rank + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let f = mul_mod(a[i][c], inv);
            for j in c..cols {
                let sub = mul_mod(f, a[rank][j]);
                a[i][j] = (a[i][j] + MOD_P - sub) % MOD_P;
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank, trying the modular rank first when every entry is a small
/// integer and accepting it only when it is already maximal.
pub fn rank_gaussian_fast(rows: &[Vec<GaussianRational>]) -> usize {
    use num_traits::ToPrimitive;
    let cols = rows.first().map_or(0, Vec::len);
    let full = rows.len().min(cols);
    let ints: Option<Vec<Vec<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|c| if c.is_real() && c.re().is_integer() { c.re().numer().to_i64() } else { None }).collect())
        .collect();
    if let Some(ints) = ints {
        if rank_mod_prime(&ints) == full {
            return full;
        }
    }
    rank_gaussian(rows)
}
