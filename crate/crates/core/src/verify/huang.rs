//! Search for nonzero sums `Σ_{j<k} f_j(z)·conj(g_j(z))` divisible by
//! `‖z‖²` with fewer terms than variables.
//!
//! For fixed `g_j` the admissible `f_j` form a linear space, so each
//! `g`-tuple is decided exactly over all complex `f_j` of bounded degree
//! rather than over a coefficient grid. Write `Φ(F) = Σ f_j ḡ_j` and
//! `Ψ(h) = ‖z‖²·h`. A nonzero divisible `Φ(F)` exists iff
//! `rank Φ + dim h > rank [Φ | Ψ]`, since `Ψ` is injective.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::Rng;

use crate::gaussian::GaussianRational;
use crate::linalg::{rank_gaussian_fast, rank_mod_prime};
use crate::monomial::MultiIndex;
use crate::poly::{norm_squared, HermPoly, HoloPoly};

use super::random::RandomSpec;

/// Monomials in `n` variables with degree in `lo..=hi`, sorted lex.
pub fn monomials(n: usize, lo: u32, hi: u32) -> Vec<MultiIndex> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, hi, &mut Vec::new(), &mut out);
    let mut v: Vec<MultiIndex> =
        out.into_iter().map(MultiIndex::new).filter(|m| (lo..=hi).contains(&m.degree())).collect();
    v.sort();
    v
}

type Key = (MultiIndex, MultiIndex);

/// The part of the linear system that does not depend on the `g_j`:
/// row positions of every `z^α z̄^β` in range and the columns of `Ψ`.
struct HuangSystem {
    n: usize,
    f_basis: Vec<MultiIndex>,
    g_basis: Vec<MultiIndex>,
    rows: BTreeMap<Key, usize>,
    /// `positions[i][j]`: row of `z^{f_basis[i]} z̄^{g_basis[j]}`.
    positions: Vec<Vec<usize>>,
    psi: Vec<Vec<(usize, GaussianRational)>>,
}

impl HuangSystem {
    fn new(n: usize, f_degree: u32, g_degree: u32) -> Self {
        let mut rows = BTreeMap::new();
        for a in monomials(n, 0, f_degree) {
            for b in monomials(n, 0, g_degree) {
                let next = rows.len();
                rows.insert((a.clone(), b), next);
            }
        }
        let norm = norm_squared(n);
        let mut psi = Vec::new();
        for a in monomials(n, 0, f_degree - 1) {
            for b in monomials(n, 0, g_degree - 1) {
                let h = HermPoly::monomial(a.clone(), b, GaussianRational::from_int(1)).expect("same length");
                let col = norm.mul(&h).expect("same nvars");
                psi.push(col.terms().map(|(a, b, c)| (rows[&(a.clone(), b.clone())], c.clone())).collect());
            }
        }
        let f_basis = monomials(n, 1, f_degree);
        let g_basis = monomials(n, 1, g_degree);
        let positions =
            f_basis.iter().map(|a| g_basis.iter().map(|b| rows[&(a.clone(), b.clone())]).collect()).collect();
        Self { n, f_basis, g_basis, rows, positions, psi }
    }

    /// Fast path for integer `g_j` given as coefficient vectors on the
    /// degree-`1..` monomials: modular ranks decide exactly when both are
    /// maximal, which is the no-witness case.
    fn witness_exists_int(&self, gs: &[&[i64]]) -> bool {
        let ncols = gs.len() * self.f_basis.len() + self.psi.len();
        let mut m = alloc::vec![alloc::vec![0i64; ncols]; self.rows.len()];
        let mut col = 0;
        for g in gs {
            for pos in &self.positions {
                for (&c, &row) in g.iter().zip(pos) {
                    m[row][col] = c;
                }
                col += 1;
            }
        }
        let phi_cols = col;
        for p in &self.psi {
            for (row, c) in p {
                m[*row][col] = c.re().to_integer().try_into().expect("small integer");
            }
            col += 1;
        }
        let phi: Vec<Vec<i64>> = m.iter().map(|r| r[..phi_cols].to_vec()).collect();
        if rank_mod_prime(&phi) == phi_cols && rank_mod_prime(&m) == ncols {
            return false;
        }
        let polys: Vec<HoloPoly> = gs
            .iter()
            .map(|g| {
                let terms = self.g_basis.iter().cloned().zip(g.iter().map(|&c| GaussianRational::from_int(c)));
                HoloPoly::from_terms(self.n, terms).expect("lengths match")
            })
            .collect();
        self.witness_exists(&polys)
    }

    fn dense(&self, cols: &[Vec<(usize, GaussianRational)>]) -> Vec<Vec<GaussianRational>> {
        let mut m = alloc::vec![alloc::vec![GaussianRational::zero(); cols.len()]; self.rows.len()];
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col {
                m[*i][j] = c.clone();
            }
        }
        m.retain(|row| row.iter().any(|c| !c.is_zero()));
        m
    }

    fn witness_exists(&self, gs: &[HoloPoly]) -> bool {
        let mut phi = Vec::with_capacity(gs.len() * self.f_basis.len());
        for g in gs {
            for m in &self.f_basis {
                phi.push(g.terms().map(|(b, c)| (self.rows[&(m.clone(), b.clone())], c.conj())).collect());
            }
        }
        let rank_phi = rank_gaussian_fast(&self.dense(&phi));
        let mut all = phi;
        all.extend(self.psi.iter().cloned());
        let rank_all = rank_gaussian_fast(&self.dense(&all));
        rank_phi + self.psi.len() > rank_all
    }
}

/// Whether some `f_j` vanishing at the origin with degree at most
/// `f_degree` make `Σ f_j ḡ_j` nonzero and divisible by `‖z‖²`.
pub fn divisible_sum_exists(gs: &[HoloPoly], f_degree: u32) -> bool {
    let Some(first) = gs.first() else {
        return false;
    };
    let g_degree = gs.iter().filter_map(HoloPoly::degree).max().unwrap_or(0);
    if g_degree == 0 || f_degree == 0 {
        // Every product has α or β of degree zero; no multiple of ‖z‖² does.
        return false;
    }
    HuangSystem::new(first.nvars(), f_degree, g_degree).witness_exists(gs)
}

/// Outcome of a `g`-tuple enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSearch {
    pub n: usize,
    pub k: usize,
    pub g_degree: u32,
    pub f_degree: u32,
    pub tuples: u64,
    pub witnesses: u64,
}

/// Nonzero vectors over `{−1, 0, 1}` whose first nonzero entry is `+1`.
fn sign_normalized_grid(len: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let total = 3usize.pow(len as u32);
    for code in 0..total {
        let mut v = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            v.push((c % 3) as i64 - 1);
            c /= 3;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// Every unordered `k`-tuple of distinct `g_j` with coefficients in
/// `{−1, 0, 1}` on the monomials of degree `1..=g_degree`, up to the sign of
/// each `g_j` (which can be moved into `f_j`). The `f_j` range over all
/// complex polynomials vanishing at the origin of degree at most
/// `f_degree`.
pub fn huang_grid_search(n: usize, k: usize, g_degree: u32, f_degree: u32) -> GridSearch {
    let basis = monomials(n, 1, g_degree);
    let grid = sign_normalized_grid(basis.len());
    let mut out = GridSearch { n, k, g_degree, f_degree, tuples: 0, witnesses: 0 };
    if k == 0 || k > grid.len() || f_degree == 0 {
        return out;
    }
    let system = HuangSystem::new(n, f_degree, g_degree);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let gs: Vec<&[i64]> = idx.iter().map(|&i| grid[i].as_slice()).collect();
        out.tuples += 1;
        if system.witness_exists_int(&gs) {
            out.witnesses += 1;
        }
        if !advance(&mut idx, grid.len()) {
            break;
        }
    }
    out
}

fn advance(idx: &mut [usize], n: usize) -> bool {
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

/// Like [`huang_grid_search`] but over `samples` random `g`-tuples drawn
/// from the same grid.
pub fn huang_sampled_search(n: usize, k: usize, g_degree: u32, f_degree: u32, samples: u64, seed: u64) -> GridSearch {
    let basis = monomials(n, 1, g_degree);
    let mut out = GridSearch { n, k, g_degree, f_degree, tuples: 0, witnesses: 0 };
    if k == 0 || g_degree == 0 || f_degree == 0 {
        return out;
    }
    let system = HuangSystem::new(n, f_degree, g_degree);
    let mut rng = RandomSpec::new(seed, n, g_degree).rng();
    while out.tuples < samples {
        let gs: Vec<Vec<i64>> =
            (0..k).map(|_| (0..basis.len()).map(|_| rng.gen_range(-1..=1)).collect()).collect();
        if gs.iter().any(|g| g.iter().all(|&c| c == 0)) {
            continue;
        }
        out.tuples += 1;
        let refs: Vec<&[i64]> = gs.iter().map(Vec::as_slice).collect();
        if system.witness_exists_int(&refs) {
            out.witnesses += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(2, 1, 2).len(), 5);
        assert_eq!(monomials(3, 1, 2).len(), 9);
        assert_eq!(monomials(3, 0, 0), alloc::vec![MultiIndex::zeros(3)]);
    }

    #[test]
    fn grid_size() {
        assert_eq!(sign_normalized_grid(2).len(), 4);
        assert_eq!(sign_normalized_grid(5).len(), (243 - 1) / 2);
    }

    #[test]
    fn full_dimension_admits_witness() {
        // k = n: ‖z‖² = Σ z_j conj(z_j) is itself a witness.
        let gs: Vec<HoloPoly> = (0..2).map(|j| HoloPoly::var(2, j)).collect();
        assert!(divisible_sum_exists(&gs, 1));
    }

    #[test]
    fn grid_finds_witnesses_when_k_equals_n() {
        let r = huang_grid_search(2, 2, 1, 1);
        assert_eq!(r.tuples, 6);
        assert!(r.witnesses > 0);
        assert_eq!(huang_grid_search(2, 1, 1, 1).witnesses, 0);
    }

    #[test]
    fn single_term_has_no_witness() {
        let g = HoloPoly::var(2, 0).add(&HoloPoly::var(2, 1)).unwrap();
        assert!(!divisible_sum_exists(&[g], 2));
    }
}
