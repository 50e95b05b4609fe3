#![allow(dead_code)]

use hermsos_core::{GaussianRational, HermPoly, HoloPoly, MultiIndex};
use num_traits::Zero;
use proptest::prelude::*;

pub fn gr(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_parts(re, 1, im, 2)
}

/// Hermitian-bidegree polynomial in `n` variables, exponents ≤ `max_exp`.
pub fn herm(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = HermPoly> {
    let term = (
        prop::collection::vec(0..=max_exp, n),
        prop::collection::vec(0..=max_exp, n),
        -3i64..=3,
        -3i64..=3,
    );
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        HermPoly::from_terms(
            n,
            terms.into_iter().map(|(a, b, re, im)| ((MultiIndex::new(a), MultiIndex::new(b)), gr(re, im))),
        )
        .unwrap()
    })
}

pub fn nonzero_herm(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = HermPoly> {
    herm(n, max_exp, max_terms).prop_filter("nonzero", |a| !a.is_zero())
}

pub fn holo(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = HoloPoly> {
    let term = (prop::collection::vec(0..=max_exp, n), -3i64..=3, -3i64..=3);
    prop::collection::vec(term, 1..=max_terms).prop_map(move |terms| {
        HoloPoly::from_terms(n, terms.into_iter().map(|(a, re, im)| (MultiIndex::new(a), gr(re, im)))).unwrap()
    })
}

/// Rank by textbook Gauss-Jordan elimination over the Gaussian rationals.
pub fn naive_rank(rows: &[Vec<GaussianRational>]) -> usize {
    let mut a: Vec<Vec<GaussianRational>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in 0..a.len() {
            if i == rank || a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in 0..cols {
                let v = &f * &a[rank][j];
                a[i][j] = &a[i][j] - &v;
            }
        }
        rank += 1;
    }
    rank
}
