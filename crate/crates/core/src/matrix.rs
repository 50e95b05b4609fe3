//! Coefficient matrices, exact rank, and diagonal-offset slices.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::linalg;
use crate::monomial::{MultiIndex, SignedOffset};
use crate::poly::{DiagPoly, HermPoly};
use crate::sparse::{self, Terms};

/// Dense coefficient matrix `c(α_i, β_j)` of a nonzero [`HermPoly`].
///
/// Rows are the `α` that occur, columns the `β` that occur, both sorted
/// lex, so every row and column has a nonzero entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffMatrix {
    nvars: usize,
    row_index: Vec<MultiIndex>,
    col_index: Vec<MultiIndex>,
    entries: Vec<Vec<GaussianRational>>,
}

impl CoeffMatrix {
    pub fn build(a: &HermPoly) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let row_index = a.row_exponents();
        let col_index = a.col_exponents();
        let mut entries = alloc::vec![alloc::vec![GaussianRational::zero(); col_index.len()]; row_index.len()];
        for (alpha, beta, c) in a.terms() {
            let i = row_index.binary_search(alpha).expect("row present");
            let j = col_index.binary_search(beta).expect("column present");
            entries[i][j] = c.clone();
        }
        Ok(Self { nvars: a.nvars(), row_index, col_index, entries })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn row_index(&self) -> &[MultiIndex] {
        &self.row_index
    }

    pub fn col_index(&self) -> &[MultiIndex] {
        &self.col_index
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i][j]
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.row_index.len(), self.col_index.len())
    }

    /// The polynomial this matrix represents.
    pub fn rebuild(&self) -> HermPoly {
        let mut terms = Terms::new();
        for (alpha, row) in self.row_index.iter().zip(&self.entries) {
            for (beta, c) in self.col_index.iter().zip(row) {
                sparse::add_term(&mut terms, (alpha.clone(), beta.clone()), c);
            }
        }
        HermPoly::from_canonical(self.nvars, terms)
    }

    /// Same row and column exponents and `entry(i, j) = conj(entry(j, i))`.
    pub fn is_hermitian(&self) -> bool {
        self.row_index == self.col_index
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, row)| row.iter().enumerate().all(|(j, c)| *c == self.entries[j][i].conj()))
    }

    /// Rank over the Gaussian rationals by fraction-free elimination.
    pub fn exact_rank(&self) -> usize {
        linalg::rank_gaussian(&self.entries)
    }
}

/// Renders as a grid with monomial headers.
impl fmt::Display for CoeffMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header = |m: &MultiIndex, prefix: &str| -> String {
            let mut s = String::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(s, "{prefix}{}", i + 1).unwrap(),
                    _ => write!(s, "{prefix}{}^{e}", i + 1).unwrap(),
                }
            }
            if s.is_empty() {
                s.push('1');
            }
            s
        };
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(self.entries.len() + 1);
        let mut head = alloc::vec![String::new()];
        head.extend(self.col_index.iter().map(|b| header(b, "zb")));
        cells.push(head);
        for (alpha, row) in self.row_index.iter().zip(&self.entries) {
            let mut line = alloc::vec![header(alpha, "z")];
            line.extend(row.iter().map(|c| alloc::format!("{c}")));
            cells.push(line);
        }
        let ncols = cells[0].len();
        let widths: Vec<usize> =
            (0..ncols).map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
        for row in &cells {
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{cell:>w$}", w = widths[j])?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Exact rank of the coefficient matrix; zero for the zero polynomial.
pub fn rank(a: &HermPoly) -> usize {
    match CoeffMatrix::build(a) {
        Ok(m) => m.exact_rank(),
        Err(_) => 0,
    }
}

/// One diagonal of the coefficient matrix: `Σ_γ c(γ + δ⁺, γ + δ⁻) x^γ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Slice {
    pub offset: SignedOffset,
    pub poly: DiagPoly,
}

/// All nonzero diagonals keyed by offset.
pub fn slice_map(a: &HermPoly) -> BTreeMap<SignedOffset, DiagPoly> {
    let mut acc: BTreeMap<SignedOffset, Terms<MultiIndex>> = BTreeMap::new();
    for (mu, nu, c) in a.terms() {
        let (delta, gamma) = SignedOffset::split(mu, nu);
        acc.entry(delta).or_default().insert(gamma, c.clone());
    }
    acc.into_iter().map(|(d, t)| (d, DiagPoly::from_canonical(a.nvars(), t))).collect()
}

/// Nonzero diagonals in ascending offset order.
pub fn slices(a: &HermPoly) -> Result<Vec<Slice>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(slice_map(a).into_iter().map(|(offset, poly)| Slice { offset, poly }).collect())
}

/// Inverse of [`slices`]: `Σ_δ z^{δ⁺} z̄^{δ⁻} · slice_δ(|z₁|², …)`.
pub fn reassemble(nvars: usize, parts: &[Slice]) -> HermPoly {
    let mut terms = Terms::new();
    for s in parts {
        for (gamma, c) in s.poly.terms() {
            sparse::add_term(&mut terms, s.offset.position(gamma), c);
        }
    }
    HermPoly::from_canonical(nvars, terms)
}

/// Term count of the lex-largest nonzero slice.
///
/// On that diagonal, row `γ + δ⁺` has no nonzero entry in any column
/// lex-below `γ + δ⁻`: such an entry would sit on a lex-larger diagonal.
/// Those rows are therefore in echelon form and independent, so the count
/// never exceeds the rank.
pub fn extremal_slice_bound(a: &HermPoly) -> Result<usize> {
    slice_map(a).into_iter().next_back().map(|(_, p)| p.term_count()).ok_or(Error::ZeroPolynomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{norm_power, pfister_base};
    use alloc::vec;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn m(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    fn mono(a: &[u32], b: &[u32], c: GaussianRational) -> HermPoly {
        HermPoly::monomial(m(a), m(b), c).unwrap()
    }

    #[test]
    fn diagonal_matrix() {
        let mat = CoeffMatrix::build(&pfister_base(1, 2)).unwrap();
        assert_eq!(mat.row_index(), &[m(&[0]), m(&[1]), m(&[2])]);
        assert_eq!(mat.rows(), &[vec![gr(1), gr(0), gr(0)], vec![gr(0), gr(2), gr(0)], vec![gr(0), gr(0), gr(1)]]);
        assert!(mat.is_hermitian());
    }

    #[test]
    fn swap_matrix() {
        let a = mono(&[1, 0], &[0, 1], gr(1)).add(&mono(&[0, 1], &[1, 0], gr(1))).unwrap();
        let mat = CoeffMatrix::build(&a).unwrap();
        // Rows sorted lex: z2 = [0,1] before z1 = [1,0].
        assert_eq!(mat.row_index(), &[m(&[0, 1]), m(&[1, 0])]);
        assert_eq!(mat.rows(), &[vec![gr(0), gr(1)], vec![gr(1), gr(0)]]);
        assert_eq!(mat.exact_rank(), 2);
    }

    #[test]
    fn norm_fourth_power_matrix() {
        // Multinomial expansion: |z1|^4 + 2|z1 z2|^2 + |z2|^4.
        let mat = CoeffMatrix::build(&norm_power(2, 2)).unwrap();
        assert_eq!(mat.row_index(), &[m(&[0, 2]), m(&[1, 1]), m(&[2, 0])]);
        assert_eq!(mat.rows(), &[vec![gr(1), gr(0), gr(0)], vec![gr(0), gr(2), gr(0)], vec![gr(0), gr(0), gr(1)]]);
        assert_eq!(mat.exact_rank(), 3);
    }

    #[test]
    fn hermitian_detection() {
        assert!(!CoeffMatrix::build(&mono(&[1, 0], &[0, 0], gr(1))).unwrap().is_hermitian());
        let i = GaussianRational::i();
        let a = mono(&[1, 0], &[0, 1], i.clone()).sub(&mono(&[0, 1], &[1, 0], i)).unwrap();
        assert!(CoeffMatrix::build(&a).unwrap().is_hermitian());
    }

    #[test]
    fn ranks() {
        for d in 0..5 {
            assert_eq!(rank(&pfister_base(1, d)), d as usize + 1);
        }
        let a = HermPoly::abs_sq(1, 0).mul(&pfister_base(1, 2)).unwrap();
        assert_eq!(rank(&a), 3);
        assert_eq!(rank(&HermPoly::zero(2)), 0);
        assert_eq!(CoeffMatrix::build(&HermPoly::zero(2)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn slices_examples() {
        let a = HermPoly::abs_sq(1, 0).add(&mono(&[2], &[1], gr(2))).unwrap();
        let s = slices(&a).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].offset, SignedOffset::new(vec![0]));
        assert_eq!(s[0].poly, DiagPoly::var(1, 0));
        assert_eq!(s[1].offset, SignedOffset::new(vec![1]));
        assert_eq!(s[1].poly, DiagPoly::var(1, 0).scale(&gr(2)));
        assert_eq!(reassemble(1, &s), a);

        let s = slices(&pfister_base(1, 2)).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].poly, DiagPoly::one_plus_sum(1).pow(2));

        let s = slices(&mono(&[1, 0], &[0, 1], gr(1))).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].offset, SignedOffset::new(vec![1, -1]));
        assert_eq!(s[0].poly, DiagPoly::one(2));
        assert_eq!(slices(&HermPoly::zero(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn extremal_bound_examples() {
        assert_eq!(extremal_slice_bound(&pfister_base(1, 2)).unwrap(), 3);
        assert_eq!(extremal_slice_bound(&mono(&[1, 0], &[0, 1], gr(1))).unwrap(), 1);
        assert_eq!(extremal_slice_bound(&HermPoly::zero(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn grid_render() {
        let s = alloc::format!("{}", CoeffMatrix::build(&pfister_base(1, 1)).unwrap());
        assert_eq!(s, "    1  zb1\n 1  1    0\nz1  0    1\n");
    }
}
