//! Seeded instance generators.

use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gaussian::GaussianRational;
use crate::monomial::MultiIndex;
use crate::poly::{DiagPoly, HermPoly, HoloPoly};

/// Small Gaussian rationals: numerators in `[−max_abs_num, max_abs_num]`,
/// denominators from `denominators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffPool {
    pub max_abs_num: i64,
    pub denominators: Vec<i64>,
    /// Draw an imaginary part too.
    pub complex: bool,
}

impl Default for CoeffPool {
    fn default() -> Self {
        Self { max_abs_num: 3, denominators: alloc::vec![1, 2], complex: true }
    }
}

impl CoeffPool {
    /// Integer grid `{−k, …, k}` with no imaginary part.
    pub fn integer_grid(k: i64) -> Self {
        Self { max_abs_num: k, denominators: alloc::vec![1], complex: false }
    }

    pub fn draw<R: Rng>(&self, rng: &mut R) -> GaussianRational {
        let part = |rng: &mut R| {
            let num = rng.gen_range(-self.max_abs_num..=self.max_abs_num);
            let den = self.denominators[rng.gen_range(0..self.denominators.len())];
            (num, den)
        };
        let (rn, rd) = part(rng);
        let (inum, iden) = if self.complex { part(rng) } else { (0, 1) };
        GaussianRational::from_parts(rn, rd, inum, iden)
    }
}

/// Everything that determines a random instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub seed: u64,
    pub nvars: usize,
    pub max_degree: u32,
    /// Upper bound on the number of terms drawn.
    pub max_terms: usize,
    pub pool: CoeffPool,
}

impl RandomSpec {
    pub fn new(seed: u64, nvars: usize, max_degree: u32) -> Self {
        Self { seed, nvars, max_degree, max_terms: 6, pool: CoeffPool::default() }
    }

    /// Parameters for trial `index`: seed `base + index`.
    pub fn trial(&self, index: u64) -> Self {
        Self { seed: self.seed.wrapping_add(index), ..self.clone() }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Exponent vector of total degree exactly `total` spread over `slots`.
fn spread<R: Rng>(rng: &mut R, slots: usize, total: u32) -> Vec<u32> {
    let mut e = alloc::vec![0u32; slots];
    for _ in 0..total {
        e[rng.gen_range(0..slots)] += 1;
    }
    e
}

/// Hermitian-bidegree polynomial with `|α| + |β| ≤ max_degree`; may be zero.
pub fn random_herm<R: Rng>(spec: &RandomSpec, rng: &mut R) -> HermPoly {
    let n = spec.nvars;
    let count = rng.gen_range(0..=spec.max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let total = rng.gen_range(0..=spec.max_degree);
            let e = spread(rng, 2 * n, total);
            let key = (MultiIndex::new(e[..n].to_vec()), MultiIndex::new(e[n..].to_vec()));
            (key, spec.pool.draw(rng))
        })
        .collect();
    HermPoly::from_terms(n, terms).expect("lengths match")
}

/// Holomorphic polynomial with terms of degree in `min_degree..=max_degree`.
pub fn random_holo<R: Rng>(spec: &RandomSpec, min_degree: u32, rng: &mut R) -> HoloPoly {
    let n = spec.nvars;
    let count = rng.gen_range(1..=spec.max_terms.max(1));
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let total = rng.gen_range(min_degree..=spec.max_degree.max(min_degree));
            (MultiIndex::new(spread(rng, n, total)), spec.pool.draw(rng))
        })
        .collect();
    HoloPoly::from_terms(n, terms).expect("lengths match")
}

/// Homogeneous polynomial in `x` of the given degree; may be zero.
pub fn random_homogeneous<R: Rng>(spec: &RandomSpec, degree: u32, rng: &mut R) -> DiagPoly {
    let n = spec.nvars;
    let count = rng.gen_range(0..=spec.max_terms);
    let terms: Vec<_> =
        (0..count).map(|_| (MultiIndex::new(spread(rng, n, degree)), spec.pool.draw(rng))).collect();
    DiagPoly::from_terms(n, terms).expect("lengths match")
}

/// Univariate polynomial of degree at most `spec.max_degree`; may be zero.
pub fn random_univariate<R: Rng>(spec: &RandomSpec, rng: &mut R) -> HoloPoly {
    let count = rng.gen_range(0..=spec.max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| (MultiIndex::new(alloc::vec![rng.gen_range(0..=spec.max_degree)]), spec.pool.draw(rng)))
        .collect();
    HoloPoly::from_terms(1, terms).expect("lengths match")
}

/// `Σ_j |p_j|²` for one to three random holomorphic `p_j`.
pub fn random_squared_norm<R: Rng>(spec: &RandomSpec, rng: &mut R) -> HermPoly {
    let k = rng.gen_range(1..=3);
    let mut acc = HermPoly::zero(spec.nvars);
    for _ in 0..k {
        let p = random_holo(spec, 0, rng);
        acc = acc.add(&p.times_conj(&p).expect("same nvars")).expect("same nvars");
    }
    acc
}
