//! Squared-norm (Hermitian sum of squares) decisions and certificates.
//!
//! A Hermitian polynomial is a squared norm `Σ |p_j(z)|²` exactly when its
//! coefficient matrix is positive semidefinite. Both the decision and the
//! certificate come from one exact `LDL*` factorization with diagonal
//! pivoting, so no eigenvalues or square roots are needed.
//!
//! Certificates are weighted, `Σ d_j |ℓ_j|²` with rational `d_j > 0`.
//! Putting `p_j = √d_j · ℓ_j` gives the unit-weight form with the same
//! number of terms, which equals the rank of the coefficient matrix.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::matrix;
use crate::monomial::MultiIndex;
use crate::poly::{HermPoly, HoloPoly};

/// `Σ weights[j] · |polys[j]|²`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquaredNormCert {
    pub nvars: usize,
    pub weights: Vec<BigRational>,
    pub polys: Vec<HoloPoly>,
}

impl SquaredNormCert {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Expand back to a Hermitian polynomial.
    pub fn reconstruct(&self) -> HermPoly {
        let mut acc = HermPoly::zero(self.nvars);
        for (w, p) in self.weights.iter().zip(&self.polys) {
            let sq = p.times_conj(p).expect("certificate polys share nvars");
            acc = acc.add(&sq.scale(&GaussianRational::from_real(w.clone()))).expect("same nvars");
        }
        acc
    }
}

/// Pivot order: ascending degree, then z₁ before z₂ within a degree.
fn pivot_order(a: &MultiIndex, b: &MultiIndex) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
}

enum Factorization {
    Psd(Vec<(BigRational, Vec<GaussianRational>)>),
    NotPsd,
}

fn factor(index: &[MultiIndex], a: &HermPoly) -> Factorization {
    let n = index.len();
    let mut m: Vec<Vec<GaussianRational>> =
        index.iter().map(|alpha| index.iter().map(|beta| a.coeff(alpha, beta)).collect()).collect();
    let mut active = alloc::vec![true; n];
    let mut pivots = Vec::new();
    loop {
        if (0..n).any(|i| active[i] && m[i][i].re().is_negative()) {
            return Factorization::NotPsd;
        }
        let Some(p) = (0..n).find(|&i| active[i] && !m[i][i].is_zero()) else {
            let residual = (0..n).any(|i| active[i] && (0..n).any(|j| active[j] && !m[i][j].is_zero()));
            return if residual { Factorization::NotPsd } else { Factorization::Psd(pivots) };
        };
        let d = m[p][p].re().clone();
        let inv = GaussianRational::from_real(d.recip());
        let v: Vec<GaussianRational> =
            (0..n).map(|j| if active[j] { &m[j][p] * &inv } else { GaussianRational::zero() }).collect();
        let dv: Vec<GaussianRational> = v.iter().map(|x| x.scale(&d)).collect();
        for j in (0..n).filter(|&j| active[j] && !v[j].is_zero()) {
            for k in (0..n).filter(|&k| active[k] && !v[k].is_zero()) {
                let upd = &dv[j] * &v[k].conj();
                m[j][k] -= &upd;
            }
        }
        active[p] = false;
        pivots.push((d, v));
    }
}

fn hermitian_rows(a: &HermPoly) -> Result<Vec<MultiIndex>> {
    if !a.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let mut index = a.row_exponents();
    index.sort_by(pivot_order);
    Ok(index)
}

/// Whether the coefficient matrix of a Hermitian polynomial is positive
/// semidefinite. The zero polynomial is.
pub fn psd_check(a: &HermPoly) -> Result<bool> {
    let index = hermitian_rows(a)?;
    Ok(matches!(factor(&index, a), Factorization::Psd(_)))
}

/// Exact certificate `a = Σ d_j |ℓ_j|²` with as many terms as the rank.
pub fn squared_norm_decompose(a: &HermPoly) -> Result<SquaredNormCert> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let index = hermitian_rows(a)?;
    let Factorization::Psd(pivots) = factor(&index, a) else {
        return Err(Error::NotPsd);
    };
    let nvars = a.nvars();
    let mut weights = Vec::with_capacity(pivots.len());
    let mut polys = Vec::with_capacity(pivots.len());
    for (d, v) in pivots {
        let terms = index.iter().cloned().zip(v);
        polys.push(HoloPoly::from_terms(nvars, terms).expect("index length matches"));
        weights.push(d);
    }
    Ok(SquaredNormCert { nvars, weights, polys })
}

/// Minimal number of squares in a squared-norm representation, i.e. the
/// rank of the coefficient matrix.
pub fn hermitian_length(a: &HermPoly) -> Result<usize> {
    if !psd_check(a)? {
        return Err(Error::NotPsd);
    }
    Ok(matrix::rank(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{norm_power, pfister_base};
    use alloc::vec;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn z(exps: &[u32]) -> HoloPoly {
        HoloPoly::monomial(MultiIndex::new(exps.to_vec()), gr(1))
    }

    #[test]
    fn psd_examples() {
        let a = HermPoly::one(1).sub(&HermPoly::abs_sq(1, 0)).unwrap();
        assert_eq!(psd_check(&a), Ok(false));
        for n in 1..3 {
            for d in 0..4 {
                assert_eq!(psd_check(&pfister_base(n, d)), Ok(true));
            }
        }
        let e1 = MultiIndex::from([1, 0]);
        let e2 = MultiIndex::from([0, 1]);
        let swap = HermPoly::from_terms(2, [((e1.clone(), e2.clone()), gr(1)), ((e2, e1), gr(1))]).unwrap();
        assert_eq!(psd_check(&swap), Ok(false));
        assert_eq!(psd_check(&HermPoly::zero(2)), Ok(true));
        let holo = HermPoly::monomial(MultiIndex::from([1]), MultiIndex::from([0]), gr(1)).unwrap();
        assert_eq!(psd_check(&holo), Err(Error::NotHermitian));
    }

    #[test]
    fn certificate_examples() {
        let cert = squared_norm_decompose(&pfister_base(2, 1)).unwrap();
        assert_eq!(cert.weights, vec![rat(1), rat(1), rat(1)]);
        assert_eq!(cert.polys, vec![HoloPoly::one(2), z(&[1, 0]), z(&[0, 1])]);

        let cert = squared_norm_decompose(&pfister_base(1, 2)).unwrap();
        assert_eq!(cert.weights, vec![rat(1), rat(2), rat(1)]);
        assert_eq!(cert.polys, vec![HoloPoly::one(1), z(&[1]), z(&[2])]);

        let a = HermPoly::abs_sq(1, 0).mul(&pfister_base(1, 2)).unwrap();
        let cert = squared_norm_decompose(&a).unwrap();
        assert_eq!(cert.weights, vec![rat(1), rat(2), rat(1)]);
        assert_eq!(cert.polys, vec![z(&[1]), z(&[2]), z(&[3])]);
        assert_eq!(cert.reconstruct(), a);
    }

    #[test]
    fn non_diagonal_certificate() {
        // |1 + i z|² + |z|² has a full 2x2 matrix.
        let p = HoloPoly::one(1).add(&z(&[1]).scale(&GaussianRational::i())).unwrap();
        let a = p.times_conj(&p).unwrap().add(&HermPoly::abs_sq(1, 0)).unwrap();
        let cert = squared_norm_decompose(&a).unwrap();
        assert_eq!(cert.len(), 2);
        assert_eq!(cert.reconstruct(), a);
        assert!(cert.weights.iter().all(|w| w.is_positive()));
    }

    #[test]
    fn decompose_errors() {
        let a = HermPoly::one(1).sub(&HermPoly::abs_sq(1, 0)).unwrap();
        assert_eq!(squared_norm_decompose(&a), Err(Error::NotPsd));
        assert_eq!(squared_norm_decompose(&HermPoly::zero(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn lengths() {
        for d in 0..5 {
            assert_eq!(hermitian_length(&pfister_base(1, d)), Ok(d as usize + 1));
        }
        assert_eq!(hermitian_length(&HermPoly::zero(3)), Ok(0));
        for n in 1..=3u64 {
            for k in 0..=3u32 {
                let expect = crate::dims::n_dim(n, u64::from(k)) as usize;
                assert_eq!(hermitian_length(&norm_power(n as usize, k)), Ok(expect));
            }
        }
    }
}
