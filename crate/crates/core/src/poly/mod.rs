//! Polynomial types.
//!
//! - [`HermPoly`]: `Σ c(α, β) z^α z̄^β`, the general Hermitian-bidegree
//!   polynomial.
//! - [`HoloPoly`]: `Σ c(α) z^α`, purely holomorphic.
//! - [`DiagPoly`]: `Σ c(γ) x^γ` in the real variables `x_j = |z_j|²`.

mod diag;
mod herm;
mod holo;

use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

pub use diag::DiagPoly;
pub use herm::{norm_power, norm_squared, pfister_base, HermPoly};
pub use holo::HoloPoly;

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::monomial::MultiIndex;

fn check_nvars(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::NvarsMismatch { left, right })
    }
}

fn check_index(nvars: usize, m: &MultiIndex) -> Result<()> {
    if m.nvars() == nvars {
        Ok(())
    } else {
        Err(Error::IndexLength { expected: nvars, found: m.nvars() })
    }
}

/// Shared surface of the single-index polynomial types.
macro_rules! single_index_poly {
    ($ty:ident) => {
        impl $ty {
            pub fn zero(nvars: usize) -> Self {
                Self { nvars, terms: Terms::new() }
            }

            pub fn one(nvars: usize) -> Self {
                Self::constant(nvars, GaussianRational::one())
            }

            pub fn constant(nvars: usize, c: GaussianRational) -> Self {
                let mut terms = Terms::new();
                crate::sparse::add_term(&mut terms, MultiIndex::zeros(nvars), &c);
                Self { nvars, terms }
            }

            /// The single variable with index `var` (0-based).
            pub fn var(nvars: usize, var: usize) -> Self {
                Self::monomial(MultiIndex::unit(nvars, var), GaussianRational::one())
            }

            pub fn monomial(m: MultiIndex, c: GaussianRational) -> Self {
                let nvars = m.nvars();
                let mut terms = Terms::new();
                crate::sparse::add_term(&mut terms, m, &c);
                Self { nvars, terms }
            }

            /// Build from `(exponent, coefficient)` pairs; repeated exponents
            /// are summed and zero results dropped.
            pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
            where
                I: IntoIterator<Item = (MultiIndex, GaussianRational)>,
            {
                let mut map = Terms::new();
                for (m, c) in terms {
                    check_index(nvars, &m)?;
                    crate::sparse::add_term(&mut map, m, &c);
                }
                Ok(Self { nvars, terms: map })
            }

            pub fn nvars(&self) -> usize {
                self.nvars
            }

            /// Terms in ascending lex order of the exponent.
            pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &GaussianRational)> + '_ {
                self.terms.iter()
            }

            pub fn term_count(&self) -> usize {
                self.terms.len()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn coeff(&self, m: &MultiIndex) -> GaussianRational {
                self.terms.get(m).cloned().unwrap_or_default()
            }

            /// Maximum total degree; `None` for zero.
            pub fn degree(&self) -> Option<u32> {
                self.terms.keys().map(MultiIndex::degree).max()
            }

            pub fn is_homogeneous(&self) -> bool {
                let mut degs = self.terms.keys().map(MultiIndex::degree);
                match degs.next() {
                    None => true,
                    Some(first) => degs.all(|d| d == first),
                }
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                check_nvars(self.nvars, other.nvars)?;
                Ok(Self { nvars: self.nvars, terms: crate::sparse::add(&self.terms, &other.terms) })
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                check_nvars(self.nvars, other.nvars)?;
                Ok(Self { nvars: self.nvars, terms: crate::sparse::sub(&self.terms, &other.terms) })
            }

            pub fn mul(&self, other: &Self) -> Result<Self> {
                check_nvars(self.nvars, other.nvars)?;
                Ok(Self { nvars: self.nvars, terms: crate::sparse::mul(&self.terms, &other.terms) })
            }

            pub fn scale(&self, k: &GaussianRational) -> Self {
                Self { nvars: self.nvars, terms: crate::sparse::scale(&self.terms, k) }
            }

            pub fn neg(&self) -> Self {
                self.scale(&-GaussianRational::one())
            }

            pub fn pow(&self, e: u32) -> Self {
                let mut acc = Self::one(self.nvars);
                for _ in 0..e {
                    acc = Self { nvars: self.nvars, terms: crate::sparse::mul(&acc.terms, &self.terms) };
                }
                acc
            }

            /// Lex-order division by one divisor: `self = q·divisor + r`.
            pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
                check_nvars(self.nvars, divisor.nvars)?;
                let (q, r) = crate::sparse::div_rem(&self.terms, &divisor.terms).ok_or(Error::ZeroDivisor)?;
                Ok((Self { nvars: self.nvars, terms: q }, Self { nvars: self.nvars, terms: r }))
            }

            /// Exact quotient, or `None` if `divisor` does not divide `self`.
            pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
                let (q, r) = self.div_rem(divisor)?;
                Ok(r.is_zero().then_some(q))
            }

            /// Divide out the largest power of variable `var` common to all terms.
            pub fn strip_var_power(&self, var: usize) -> (Self, u32) {
                let k = self.terms.keys().map(|m| m.get(var)).min().unwrap_or(0);
                if k == 0 {
                    return (self.clone(), 0);
                }
                let terms = self.terms.iter().map(|(m, c)| (m.with(var, m.get(var) - k), c.clone())).collect();
                (Self { nvars: self.nvars, terms }, k)
            }
        }
    };
}

pub(crate) use single_index_poly;

/// Write a coefficient-monomial list as `a·m + b·m' − …`.
fn render_terms<'a, I, F>(f: &mut fmt::Formatter<'_>, terms: I, mut write_monomial: F) -> fmt::Result
where
    I: Iterator<Item = (&'a GaussianRational, bool)>,
    F: FnMut(&mut fmt::Formatter<'_>, usize) -> fmt::Result,
{
    let mut first = true;
    for (idx, (c, is_const)) in terms.enumerate() {
        let (negative, mag) = if c.is_real() && c.re().is_negative() {
            (true, GaussianRational::from_real(c.re().abs()))
        } else {
            (false, c.clone())
        };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let unit = mag.is_real() && mag.re() == &BigRational::one();
        if is_const {
            write!(f, "{mag}")?;
        } else {
            if !unit {
                write!(f, "{mag} ")?;
            }
            write_monomial(f, idx)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn write_vars(f: &mut fmt::Formatter<'_>, prefix: &str, m: &MultiIndex, mut sep: bool) -> fmt::Result {
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if sep {
            f.write_str(" ")?;
        }
        sep = true;
        write!(f, "{prefix}{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}
