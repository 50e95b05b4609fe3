//! Exponent vectors.

use alloc::vec::Vec;
use core::fmt;

/// Non-negative exponent vector `α`, one entry per variable.
///
/// Ordered lexicographically (first variable most significant).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zeros(nvars: usize) -> Self {
        Self(alloc::vec![0; nvars])
    }

    /// The exponent of `z_var` alone.
    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[var] = 1;
        Self(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other`, if every component stays non-negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// Componentwise minimum.
    pub fn min(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Copy with one more variable appended, carrying exponent `e`.
    pub fn push(&self, e: u32) -> Self {
        let mut v = self.0.clone();
        v.push(e);
        Self(v)
    }

    /// Copy with variable `var` removed.
    pub fn remove(&self, var: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(var);
        Self(v)
    }

    pub fn with(&self, var: usize, e: u32) -> Self {
        let mut v = self.0.clone();
        v[var] = e;
        Self(v)
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(v: [u32; N]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Signed exponent difference `δ = μ − ν` labelling a diagonal of the
/// coefficient matrix.
///
/// Every pair `(μ, ν)` splits uniquely as `μ = γ + δ⁺`, `ν = γ + δ⁻` with
/// `γ = min(μ, ν)` componentwise. Ordered lexicographically on the signed
/// entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedOffset(Vec<i64>);

impl SignedOffset {
    pub fn new(deltas: Vec<i64>) -> Self {
        Self(deltas)
    }

    pub fn zeros(nvars: usize) -> Self {
        Self(alloc::vec![0; nvars])
    }

    /// Split `(μ, ν)` into its offset and base point `γ`.
    pub fn split(mu: &MultiIndex, nu: &MultiIndex) -> (Self, MultiIndex) {
        let delta = mu
            .exponents()
            .iter()
            .zip(nu.exponents())
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect();
        (Self(delta), mu.min(nu))
    }

    pub fn deltas(&self) -> &[i64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// `δ⁺`, the holomorphic part.
    pub fn positive_part(&self) -> MultiIndex {
        MultiIndex(self.0.iter().map(|&d| d.max(0) as u32).collect())
    }

    /// `δ⁻`, the antiholomorphic part.
    pub fn negative_part(&self) -> MultiIndex {
        MultiIndex(self.0.iter().map(|&d| (-d).max(0) as u32).collect())
    }

    /// Matrix position `(γ + δ⁺, γ + δ⁻)` of base point `γ` on this diagonal.
    pub fn position(&self, gamma: &MultiIndex) -> (MultiIndex, MultiIndex) {
        (gamma.add(&self.positive_part()), gamma.add(&self.negative_part()))
    }
}

impl fmt::Debug for SignedOffset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Exponent key usable by the generic sparse engine.
pub(crate) trait Monomial: Ord + Clone {
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Option<Self>;
    fn total_degree(&self) -> u32;
}

impl Monomial for MultiIndex {
    fn mul(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn div(&self, other: &Self) -> Option<Self> {
        self.checked_sub(other)
    }

    fn total_degree(&self) -> u32 {
        self.degree()
    }
}

/// `(α, β)` for `z^α z̄^β`: lex on α first, then β, i.e. lex on the
/// combined exponent with every z-variable ahead of every z̄-variable.
impl Monomial for (MultiIndex, MultiIndex) {
    fn mul(&self, other: &Self) -> Self {
        (self.0.add(&other.0), self.1.add(&other.1))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        Some((self.0.checked_sub(&other.0)?, self.1.checked_sub(&other.1)?))
    }

    fn total_degree(&self) -> u32 {
        self.0.degree() + self.1.degree()
    }
}
