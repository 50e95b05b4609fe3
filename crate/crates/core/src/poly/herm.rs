use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{check_index, check_nvars, render_terms, write_vars, DiagPoly};
use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::monomial::MultiIndex;
use crate::sparse::{self, Terms};

type Key = (MultiIndex, MultiIndex);

/// `Σ c(α, β) z^α z̄^β` over Gaussian rationals.
///
/// Terms are stored sparsely in lex order on `(α, β)` with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HermPoly {
    nvars: usize,
    terms: Terms<Key>,
}

impl HermPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: Terms::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, GaussianRational::one())
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        let z = MultiIndex::zeros(nvars);
        let mut terms = Terms::new();
        sparse::add_term(&mut terms, (z.clone(), z), &c);
        Self { nvars, terms }
    }

    /// `c·z^α z̄^β`.
    pub fn monomial(alpha: MultiIndex, beta: MultiIndex, c: GaussianRational) -> Result<Self> {
        let nvars = alpha.nvars();
        check_index(nvars, &beta)?;
        let mut terms = Terms::new();
        sparse::add_term(&mut terms, (alpha, beta), &c);
        Ok(Self { nvars, terms })
    }

    /// `|z_var|²`.
    pub fn abs_sq(nvars: usize, var: usize) -> Self {
        let e = MultiIndex::unit(nvars, var);
        Self::monomial(e.clone(), e, GaussianRational::one()).expect("same length")
    }

    /// Build from `((α, β), c)` pairs; repeated keys are summed and zero
    /// results dropped.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Key, GaussianRational)>,
    {
        let mut map = Terms::new();
        for ((a, b), c) in terms {
            check_index(nvars, &a)?;
            check_index(nvars, &b)?;
            sparse::add_term(&mut map, (a, b), &c);
        }
        Ok(Self { nvars, terms: map })
    }

    pub(crate) fn from_canonical(nvars: usize, terms: Terms<Key>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending lex order of `(α, β)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &MultiIndex, &GaussianRational)> + '_ {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &MultiIndex, beta: &MultiIndex) -> GaussianRational {
        self.terms.get(&(alpha.clone(), beta.clone())).cloned().unwrap_or_default()
    }

    /// `(max |α|, max |β|)`, or `None` for zero.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let a = self.terms.keys().map(|(a, _)| a.degree()).max()?;
        let b = self.terms.keys().map(|(_, b)| b.degree()).max()?;
        Some((a, b))
    }

    /// Maximum of `|α| + |β|`, or `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a.degree() + b.degree()).max()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_nvars(self.nvars, other.nvars)?;
        Ok(Self { nvars: self.nvars, terms: sparse::add(&self.terms, &other.terms) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_nvars(self.nvars, other.nvars)?;
        Ok(Self { nvars: self.nvars, terms: sparse::sub(&self.terms, &other.terms) })
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self { nvars: self.nvars, terms: sparse::scale(&self.terms, k) }
    }

    /// Product by convolution over `(α, β)` splits.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_nvars(self.nvars, other.nvars)?;
        Ok(Self { nvars: self.nvars, terms: sparse::mul(&self.terms, &other.terms) })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = Self { nvars: self.nvars, terms: sparse::mul(&acc.terms, &self.terms) };
        }
        acc
    }

    /// `c'(α, β) = conj(c(β, α))`.
    pub fn conjugate(&self) -> Self {
        let terms = self.terms.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.conj())).collect();
        Self { nvars: self.nvars, terms }
    }

    /// Whether the coefficient matrix is Hermitian, i.e. the polynomial is
    /// real-valued on `w = z`.
    pub fn is_hermitian(&self) -> bool {
        self.terms.iter().all(|((a, b), c)| self.terms.get(&(b.clone(), a.clone())).is_some_and(|d| *d == c.conj()))
    }

    /// Division by a single divisor in lex order on the combined exponent
    /// `(α, β)`, every `z` variable ahead of every `z̄` variable.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        check_nvars(self.nvars, divisor.nvars)?;
        let (q, r) = sparse::div_rem(&self.terms, &divisor.terms).ok_or(Error::ZeroDivisor)?;
        Ok((Self { nvars: self.nvars, terms: q }, Self { nvars: self.nvars, terms: r }))
    }

    /// Leading `(α, β)` in the division order.
    pub fn leading_key(&self) -> Option<(&MultiIndex, &MultiIndex)> {
        self.terms.last_key_value().map(|((a, b), _)| (a, b))
    }

    /// Homogenize to bidegree `(d, d)` with a new last variable:
    /// `z^α z̄^β ↦ z^α z̄^β z_{n+1}^{d−|α|} z̄_{n+1}^{d−|β|}`.
    pub fn bihomogenize(&self, d: u32) -> Result<Self> {
        let mut terms = Terms::new();
        for ((a, b), c) in &self.terms {
            let (da, db) = (a.degree(), b.degree());
            if da > d || db > d {
                return Err(Error::DegreeExceeds { degree: da.max(db), bound: d });
            }
            terms.insert((a.push(d - da), b.push(d - db)), c.clone());
        }
        Ok(Self { nvars: self.nvars + 1, terms })
    }

    /// Set `z_var = z̄_var = 1`, dropping that variable.
    pub fn dehomogenize(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange { var, nvars: self.nvars });
        }
        let mut terms = Terms::new();
        for ((a, b), c) in &self.terms {
            sparse::add_term(&mut terms, (a.remove(var), b.remove(var)), c);
        }
        Ok(Self { nvars: self.nvars - 1, terms })
    }

    /// Terms of minimal total degree `|α| + |β|`.
    pub fn lowest_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self { nvars: self.nvars, terms: sparse::lowest(&self.terms) })
    }

    /// Rewrite a diagonal Hermitian polynomial in `x_j = |z_j|²`.
    pub fn to_diagonal(&self) -> Result<DiagPoly> {
        let mut terms = Terms::new();
        for ((a, b), c) in &self.terms {
            if a != b {
                return Err(Error::NotDiagonal);
            }
            if !c.is_real() {
                return Err(Error::NotReal);
            }
            terms.insert(a.clone(), c.clone());
        }
        Ok(DiagPoly::from_canonical(self.nvars, terms))
    }


    /// Distinct row exponents `α`, sorted.
    pub fn row_exponents(&self) -> Vec<MultiIndex> {
        let mut v: Vec<_> = self.terms.keys().map(|(a, _)| a.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Distinct column exponents `β`, sorted.
    pub fn col_exponents(&self) -> Vec<MultiIndex> {
        let mut v: Vec<_> = self.terms.keys().map(|(_, b)| b.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}

/// `‖z‖² = Σ |z_j|²`.
pub fn norm_squared(nvars: usize) -> HermPoly {
    let mut terms = Terms::new();
    for j in 0..nvars {
        let e = MultiIndex::unit(nvars, j);
        terms.insert((e.clone(), e), GaussianRational::one());
    }
    HermPoly::from_canonical(nvars, terms)
}

/// `‖z‖^{2k}`.
pub fn norm_power(nvars: usize, k: u32) -> HermPoly {
    norm_squared(nvars).pow(k)
}

/// `(1 + ‖z‖²)^d`.
pub fn pfister_base(nvars: usize, d: u32) -> HermPoly {
    norm_squared(nvars).add(&HermPoly::one(nvars)).expect("same nvars").pow(d)
}

impl fmt::Display for HermPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<_> = self.terms.keys().collect();
        render_terms(f, self.terms.iter().map(|((a, b), c)| (c, a.is_zero() && b.is_zero())), |f, i| {
            let (a, b) = keys[i];
            write_vars(f, "z", a, false)?;
            write_vars(f, "zb", b, !a.is_zero())
        })
    }
}

impl fmt::Debug for HermPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HermPoly[{}]({self})", self.nvars)
    }
}
