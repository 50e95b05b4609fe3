//! Expansion of a multiple of `(x + s)^d` in powers of `x`, with
//! `s = y₁ + … + yₙ`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::dims::n_dim;
use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::monomial::MultiIndex;
use crate::poly::DiagPoly;

/// `p = x^shift · Σ_j A_j(y) x^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XExpansion {
    pub d: u32,
    /// Power of `x` divided out so that `A_0 ≠ 0`.
    pub shift: u32,
    /// `A_j` for `j = 0..=deg_x`, each in the `n` variables `y`.
    pub coefficients: Vec<DiagPoly>,
    /// Smallest indices `0 = j_0 < j_1 < …` with `A_j ≠ 0`, at most `d + 1`.
    pub chosen: Vec<usize>,
    /// `s^{d−k}` divides `A_{j_k}`, one entry per chosen index.
    pub divisible: Vec<bool>,
}

impl XExpansion {
    pub fn nonzero_count(&self) -> usize {
        self.coefficients.iter().filter(|a| !a.is_zero()).count()
    }

    /// At least `d + 1` of the `A_j` are nonzero.
    pub fn count_holds(&self) -> bool {
        self.nonzero_count() > self.d as usize
    }

    pub fn divisibility_holds(&self) -> bool {
        self.count_holds() && self.divisible.iter().all(|&b| b)
    }

    /// `Σ_k N(n, d − k)`, the term count forced by the chosen `A_{j_k}`.
    pub fn term_lower_bound(&self, n: usize) -> u64 {
        (0..=u64::from(self.d)).map(|k| n_dim(n as u64, k)).sum()
    }
}

/// Split `p(y₁, …, yₙ, x)` into its `x`-coefficients and check the
/// structure forced by divisibility by `(x + s)^d`.
///
/// `p` must be nonzero, homogeneous, and in at least two variables; the last
/// variable plays the role of `x`.
pub fn extract_x_coefficients(p: &DiagPoly, d: u32) -> Result<XExpansion> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.nvars() < 2 {
        return Err(Error::InvalidArgument("need at least one y variable and x"));
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let total = p.nvars();
    let n = total - 1;
    let (p, shift) = p.strip_var_power(n);
    let divisor = DiagPoly::coordinate_sum(total).pow(d);
    if p.exact_div(&divisor)?.is_none() {
        return Err(Error::NotDivisible);
    }

    let mut by_power: BTreeMap<u32, Vec<(MultiIndex, GaussianRational)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        by_power.entry(m.get(n)).or_default().push((m.remove(n), c.clone()));
    }
    let top = by_power.keys().next_back().copied().unwrap_or(0);
    let coefficients: Vec<DiagPoly> = (0..=top)
        .map(|j| DiagPoly::from_terms(n, by_power.remove(&j).unwrap_or_default()).expect("lengths match"))
        .collect();

    let chosen: Vec<usize> =
        coefficients.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(j, _)| j).take(d as usize + 1).collect();
    let s = DiagPoly::coordinate_sum(n);
    let divisible = chosen
        .iter()
        .enumerate()
        .map(|(k, &j)| {
            let sp = s.pow(d - k as u32);
            matches!(coefficients[j].exact_div(&sp), Ok(Some(_)))
        })
        .collect();
    Ok(XExpansion { d, shift, coefficients, chosen, divisible })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn square_of_sum() {
        // p = (x + y)^2, one y variable.
        let p = DiagPoly::coordinate_sum(2).pow(2);
        let e = extract_x_coefficients(&p, 1).unwrap();
        assert_eq!(e.shift, 0);
        assert_eq!(e.coefficients.len(), 3);
        assert_eq!(e.coefficients[0], DiagPoly::var(1, 0).pow(2));
        assert_eq!(e.coefficients[1], DiagPoly::var(1, 0).scale(&gr(2)));
        assert_eq!(e.coefficients[2], DiagPoly::one(1));
        assert_eq!(e.chosen, alloc::vec![0, 1]);
        assert!(e.count_holds() && e.divisibility_holds());
    }

    #[test]
    fn binomial_coefficients() {
        for n in 1..=3usize {
            for d in 0..=4u32 {
                let p = DiagPoly::coordinate_sum(n + 1).pow(d);
                let e = extract_x_coefficients(&p, d).unwrap();
                let s = DiagPoly::coordinate_sum(n);
                for j in 0..=d {
                    let expect = s.pow(d - j).scale(&gr(crate::dims::binom(u64::from(d), u64::from(j)) as i64));
                    assert_eq!(e.coefficients[j as usize], expect);
                }
                assert_eq!(e.nonzero_count(), d as usize + 1);
                assert!(e.divisibility_holds());
            }
        }
    }

    #[test]
    fn strips_x_power() {
        let x = DiagPoly::var(3, 2);
        let p = DiagPoly::coordinate_sum(3).pow(2).mul(&x.pow(2)).unwrap();
        let e = extract_x_coefficients(&p, 2).unwrap();
        assert_eq!(e.shift, 2);
        assert!(!e.coefficients[0].is_zero());
        assert!(e.divisibility_holds());
    }

    #[test]
    fn errors() {
        assert_eq!(extract_x_coefficients(&DiagPoly::zero(2), 1), Err(Error::ZeroPolynomial));
        assert_eq!(extract_x_coefficients(&DiagPoly::one_plus_sum(2), 1), Err(Error::NotHomogeneous));
        assert_eq!(extract_x_coefficients(&DiagPoly::var(2, 0), 1), Err(Error::NotDivisible));
    }
}
