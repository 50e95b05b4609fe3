use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{check_index, check_nvars, render_terms, single_index_poly, write_vars};
use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::monomial::MultiIndex;
use crate::poly::HermPoly;
use crate::sparse::Terms;

/// Holomorphic polynomial `Σ c(α) z^α`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HoloPoly {
    nvars: usize,
    terms: Terms<MultiIndex>,
}

single_index_poly!(HoloPoly);

impl HoloPoly {
    /// Partial derivative in `z_var`.
    pub fn derivative(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange { var, nvars: self.nvars });
        }
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            let e = m.get(var);
            if e > 0 {
                let k = BigRational::from_integer(BigInt::from(e));
                crate::sparse::add_term(&mut out, m.with(var, e - 1), &c.scale(&k));
            }
        }
        Ok(Self { nvars: self.nvars, terms: out })
    }

    /// `f(z)` as a Hermitian polynomial (`β = 0` column).
    pub fn to_herm(&self) -> HermPoly {
        let zero = MultiIndex::zeros(self.nvars);
        HermPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| ((m.clone(), zero.clone()), c.clone())))
            .expect("lengths checked on construction")
    }

    /// `conj(f(z))` as a Hermitian polynomial (`α = 0` row).
    pub fn conj_to_herm(&self) -> HermPoly {
        let zero = MultiIndex::zeros(self.nvars);
        HermPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| ((zero.clone(), m.clone()), c.conj())))
            .expect("lengths checked on construction")
    }

    /// `f(z)·conj(g(z))`.
    pub fn times_conj(&self, g: &HoloPoly) -> Result<HermPoly> {
        check_nvars(self.nvars, g.nvars)?;
        let mut out = Terms::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &g.terms {
                crate::sparse::add_term(&mut out, (a.clone(), b.clone()), &(ca * &cb.conj()));
            }
        }
        Ok(HermPoly::from_canonical(self.nvars, out))
    }

    /// Whether `f(0) = 0`.
    pub fn vanishes_at_origin(&self) -> bool {
        self.coeff(&MultiIndex::zeros(self.nvars)) == GaussianRational::default()
    }
}

impl fmt::Display for HoloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: alloc::vec::Vec<_> = self.terms.keys().collect();
        render_terms(f, self.terms.iter().map(|(m, c)| (c, m.is_zero())), |f, i| write_vars(f, "z", keys[i], false))
    }
}

impl fmt::Debug for HoloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HoloPoly[{}]({self})", self.nvars)
    }
}

