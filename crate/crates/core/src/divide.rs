//! Divisibility by `(1 + ‖z‖²)^d` and `‖z‖^{2d}`, and the univariate
//! toolkit behind the term-count bound for multiples of `(1 + x)^d`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::dims::binom_big;
use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::linalg;
use crate::monomial::MultiIndex;
use crate::poly::{norm_power, pfister_base, HermPoly, HoloPoly};

/// `a = q·b + r` under lex division on the combined `(z, z̄)` exponent.
pub fn divide_single(a: &HermPoly, b: &HermPoly) -> Result<(HermPoly, HermPoly)> {
    a.div_rem(b)
}

fn divides(a: &HermPoly, divisor: &HermPoly) -> bool {
    a.is_zero() || a.div_rem(divisor).is_ok_and(|(_, r)| r.is_zero())
}

/// Whether `(1 + ‖z‖²)^d` divides `a`.
pub fn is_pfister_multiple(a: &HermPoly, d: u32) -> bool {
    divides(a, &pfister_base(a.nvars(), d))
}

/// Whether `‖z‖^{2d}` divides `a`.
pub fn is_norm_power_multiple(a: &HermPoly, d: u32) -> bool {
    divides(a, &norm_power(a.nvars(), d))
}

/// `1 + x` in one variable.
pub fn one_plus_x() -> HoloPoly {
    HoloPoly::one(1).add(&HoloPoly::var(1, 0)).expect("one variable")
}

/// `(1 + x)^d · q` for univariate `q`.
pub fn times_one_plus_x_pow(q: &HoloPoly, d: u32) -> Result<HoloPoly> {
    if q.nvars() != 1 {
        return Err(Error::InvalidArgument("expected a univariate polynomial"));
    }
    one_plus_x().pow(d).mul(q)
}

/// One descent step: returns `(d·q + (1 + x)·q′, d − 1)`, so that
/// `d/dx[(1 + x)^d q] = (1 + x)^{d−1} · q_next`.
///
/// Requires `d ≥ 1` and `q(0) ≠ 0`; strip common powers of `x` first.
pub fn descent_step(q: &HoloPoly, d: u32) -> Result<(HoloPoly, u32)> {
    if q.nvars() != 1 {
        return Err(Error::InvalidArgument("expected a univariate polynomial"));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("descent needs d >= 1"));
    }
    if q.coeff(&MultiIndex::zeros(1)).is_zero() {
        return Err(Error::InvalidArgument("descent needs q(0) != 0"));
    }
    let dq = q.scale(&GaussianRational::from(i64::from(d)));
    let shifted = one_plus_x().mul(&q.derivative(0)?)?;
    Ok((dq.add(&shifted)?, d - 1))
}

/// Unit upper-triangular matrix with `entry(j, k) = binom(k, j)`; it maps
/// coefficients in the basis `(1 + x)^k` to monomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisChangeMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl BasisChangeMatrix {
    /// Matrix of size `top_degree + 1`.
    pub fn new(top_degree: usize) -> Self {
        let n = top_degree + 1;
        let entries = (0..n).map(|j| (0..n).map(|k| binom_big(k as u64, j as u64)).collect()).collect();
        Self { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, j: usize, k: usize) -> &BigInt {
        &self.entries[j][k]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Monomial coefficients of `Σ c_k (1 + x)^k`.
    pub fn apply(&self, c: &[BigRational]) -> Vec<BigRational> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(c).map(|(l, ck)| ck * BigRational::from_integer(l.clone())).sum())
            .collect()
    }

    pub fn determinant(&self) -> BigInt {
        linalg::det(self.entries.clone())
    }

    /// `L′`: the matrix with its first `d` columns deleted.
    pub fn drop_leading_columns(&self, d: usize) -> Vec<Vec<BigInt>> {
        self.entries.iter().map(|row| row[d.min(row.len())..].to_vec()).collect()
    }
}

/// `L` for polynomials of degree at most `top_degree`.
pub fn basis_change_l(top_degree: usize) -> BasisChangeMatrix {
    BasisChangeMatrix::new(top_degree)
}

/// Advance `idx` to the next `k`-subset of `0..n` in lex order.
fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every `(m+1)`-row subset of `L′` (built from `L` of size `m + d + 1`)
/// with the determinant of the resulting square submatrix.
pub fn lprime_minors(m: usize, d: usize) -> Vec<(Vec<usize>, BigInt)> {
    let lp = basis_change_l(m + d).drop_leading_columns(d);
    let rows = lp.len();
    let k = m + 1;
    let mut idx: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    loop {
        let sub: Vec<Vec<BigInt>> = idx.iter().map(|&r| lp[r].clone()).collect();
        out.push((idx.clone(), linalg::det(sub)));
        if !next_subset(&mut idx, rows) {
            break;
        }
    }
    out
}

/// Whether every `(m+1) × (m+1)` submatrix of `L′` is invertible.
pub fn check_lprime_submatrices(m: usize, d: usize) -> bool {
    lprime_minors(m, d).iter().all(|(_, det)| !det.is_zero())
}
