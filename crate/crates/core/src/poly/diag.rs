use core::fmt;

use num_traits::One;

use super::{check_index, check_nvars, render_terms, single_index_poly, write_vars};
use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::monomial::MultiIndex;
use crate::poly::HermPoly;
use crate::sparse::Terms;

/// Polynomial `Σ c(γ) x^γ` in `x_j = |z_j|²`.
///
/// Coefficients are Gaussian rationals. A diagonal Hermitian matrix gives
/// real coefficients ([`HermPoly::to_diagonal`] enforces that); an
/// off-diagonal slice of a general coefficient matrix may be complex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiagPoly {
    nvars: usize,
    terms: Terms<MultiIndex>,
}

single_index_poly!(DiagPoly);

impl DiagPoly {
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    /// `x₁ + … + xₙ`.
    pub fn coordinate_sum(nvars: usize) -> Self {
        Self::from_terms(nvars, (0..nvars).map(|i| (MultiIndex::unit(nvars, i), GaussianRational::one())))
            .expect("unit indices have the right length")
    }

    /// `1 + x₁ + … + xₙ`.
    pub fn one_plus_sum(nvars: usize) -> Self {
        Self::coordinate_sum(nvars).add(&Self::one(nvars)).expect("same nvars")
    }

    /// Substitute `x_j = |z_j|²`.
    pub fn to_herm(&self) -> HermPoly {
        let terms = self.terms.iter().map(|(m, c)| ((m.clone(), m.clone()), c.clone()));
        HermPoly::from_terms(self.nvars, terms).expect("lengths checked on construction")
    }

    pub(crate) fn from_canonical(nvars: usize, terms: Terms<MultiIndex>) -> Self {
        Self { nvars, terms }
    }

}

impl fmt::Display for DiagPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: alloc::vec::Vec<_> = self.terms.keys().collect();
        render_terms(f, self.terms.iter().map(|(m, c)| (c, m.is_zero())), |f, i| write_vars(f, "x", keys[i], false))
    }
}

impl fmt::Debug for DiagPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiagPoly[{}]({self})", self.nvars)
    }
}
