//! Seeded and exhaustive desk-scale checks of the rank and term-count
//! lower bounds.
//!
//! Each check comes in two forms: a `*_trial` function taking an explicit
//! instance, and a `check_*` function drawing that instance from a
//! [`RandomSpec`]. Zero instances are reported as skipped because every
//! bound is stated for nonzero polynomials.

mod expansion;
mod huang;
mod random;

use alloc::vec::Vec;
use core::fmt;

pub use expansion::{extract_x_coefficients, XExpansion};
pub use huang::{divisible_sum_exists, huang_grid_search, huang_sampled_search, monomials, GridSearch};
pub use random::{
    random_herm, random_holo, random_homogeneous, random_squared_norm, random_univariate, CoeffPool, RandomSpec,
};

use rand::Rng;

use crate::dims::{m_dim, n_dim};
use crate::divide::{self, check_lprime_submatrices, descent_step, times_one_plus_x_pow};
use crate::matrix::{self, extremal_slice_bound, slice_map};
use crate::poly::{norm_power, pfister_base, DiagPoly, HermPoly, HoloPoly};

/// Which bound a trial exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// `rank(s·(1 + ‖z‖²)^d) ≥ M(n, d)`.
    PfisterMultiple,
    /// `#terms((x₁ + … + xₙ)^d q) ≥ N(n, d)`, plus the `x`-expansion checks.
    DiagonalTermCount,
    /// `#terms((1 + x)^d q) ≥ d + 1`.
    UnivariateTermCount,
    /// `rank(‖z‖^{2d} u) ≥ N(n, d)`.
    NormPowerMultiple,
    /// Nonzero `Σ_{j<n} f_j ḡ_j` is never divisible by `‖z‖²`.
    Huang,
    /// `slice_δ(a·(1 + ‖z‖²)^d) = slice_δ(a)·(1 + Σx)^d`.
    SliceInvariance,
    /// Descent identity and term-count drop.
    Descent,
    /// Every square `(m+1)`-minor of `L′` is nonzero.
    LPrimeMinors,
    /// Extremal slice term count is at most the rank.
    ExtremalSlice,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::PfisterMultiple => "pfister_multiple",
            Check::DiagonalTermCount => "diagonal_term_count",
            Check::UnivariateTermCount => "univariate_term_count",
            Check::NormPowerMultiple => "norm_power_multiple",
            Check::Huang => "huang",
            Check::SliceInvariance => "slice_invariance",
            Check::Descent => "descent",
            Check::LPrimeMinors => "lprime_minors",
            Check::ExtremalSlice => "extremal_slice",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Instance descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Instance {
    pub n: usize,
    pub d: u32,
    pub seed: Option<u64>,
    /// Degree of the drawn multiplier, `None` when zero or not applicable.
    pub multiplier_degree: Option<u32>,
}

/// Outcome of one trial: `pass ⇔ skipped ∨ observed ≥ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialReport {
    pub check: Check,
    pub instance: Instance,
    pub observed: u64,
    pub bound: u64,
    pub skipped: bool,
    pub pass: bool,
}

impl TrialReport {
    fn measured(check: Check, instance: Instance, observed: u64, bound: u64) -> Self {
        Self { check, instance, observed, bound, skipped: false, pass: observed >= bound }
    }

    fn skipped(check: Check, instance: Instance) -> Self {
        Self { check, instance, observed: 0, bound: 0, skipped: true, pass: true }
    }

    /// Force a failure regardless of the counts.
    fn failed(mut self) -> Self {
        self.pass = false;
        self
    }

    fn with_seed(mut self, seed: u64) -> Self {
        self.instance.seed = Some(seed);
        self
    }
}

fn instance(n: usize, d: u32, multiplier_degree: Option<u32>) -> Instance {
    Instance { n, d, seed: None, multiplier_degree }
}

/// `rank(s·(1 + ‖z‖²)^d) ≥ M(n, d)` for a given multiplier `s`.
pub fn pfister_multiple_trial(s: &HermPoly, d: u32) -> TrialReport {
    let n = s.nvars();
    let inst = instance(n, d, s.total_degree());
    if s.is_zero() {
        return TrialReport::skipped(Check::PfisterMultiple, inst);
    }
    let g = s.mul(&pfister_base(n, d)).expect("same nvars");
    TrialReport::measured(Check::PfisterMultiple, inst, matrix::rank(&g) as u64, m_dim(n as u64, u64::from(d)))
}

/// Random multiplier `s` of total degree at most `spec.max_degree`.
pub fn check_pfister_multiple(d: u32, spec: &RandomSpec) -> TrialReport {
    let s = random_herm(spec, &mut spec.rng());
    pfister_multiple_trial(&s, d).with_seed(spec.seed)
}

/// Term count of `(x₁ + … + xₙ)^d q` against `N(n, d)`; when `n ≥ 2` also
/// checks the `x`-expansion structure of the product.
pub fn diagonal_term_count_trial(q: &DiagPoly, d: u32) -> TrialReport {
    let n = q.nvars();
    let inst = instance(n, d, q.degree());
    if q.is_zero() {
        return TrialReport::skipped(Check::DiagonalTermCount, inst);
    }
    let p = DiagPoly::coordinate_sum(n).pow(d).mul(q).expect("same nvars");
    let report =
        TrialReport::measured(Check::DiagonalTermCount, inst, p.term_count() as u64, n_dim(n as u64, u64::from(d)));
    if n < 2 || !q.is_homogeneous() {
        return report;
    }
    match extract_x_coefficients(&p, d) {
        Ok(e) if e.divisibility_holds() => report,
        _ => report.failed(),
    }
}

/// Random homogeneous `q` of degree at most `spec.max_degree`.
pub fn check_diagonal_term_count(d: u32, spec: &RandomSpec) -> TrialReport {
    let mut rng = spec.rng();
    let degree = rng.gen_range(0..=spec.max_degree);
    let q = random_homogeneous(spec, degree, &mut rng);
    diagonal_term_count_trial(&q, d).with_seed(spec.seed)
}

/// `#terms((1 + x)^d q) ≥ d + 1`.
pub fn univariate_term_count_trial(q: &HoloPoly, d: u32) -> TrialReport {
    let inst = instance(1, d, q.degree());
    if q.is_zero() {
        return TrialReport::skipped(Check::UnivariateTermCount, inst);
    }
    let p = times_one_plus_x_pow(q, d).expect("univariate");
    TrialReport::measured(Check::UnivariateTermCount, inst, p.term_count() as u64, u64::from(d) + 1)
}

pub fn check_univariate_term_count(d: u32, spec: &RandomSpec) -> TrialReport {
    let q = random_univariate(spec, &mut spec.rng());
    univariate_term_count_trial(&q, d).with_seed(spec.seed)
}

/// `rank(‖z‖^{2d} u) ≥ N(n, d)`, and the same for the lowest-order part.
pub fn norm_power_multiple_trial(u: &HermPoly, d: u32) -> TrialReport {
    let n = u.nvars();
    let inst = instance(n, d, u.total_degree());
    if u.is_zero() {
        return TrialReport::skipped(Check::NormPowerMultiple, inst);
    }
    let r = norm_power(n, d).mul(u).expect("same nvars");
    let bound = n_dim(n as u64, u64::from(d));
    let report = TrialReport::measured(Check::NormPowerMultiple, inst, matrix::rank(&r) as u64, bound);
    let low = r.lowest_part().expect("nonzero");
    let low_rank = matrix::rank(&low) as u64;
    if low_rank < bound || low_rank > report.observed || !divide::is_norm_power_multiple(&low, d) {
        report.failed()
    } else {
        report
    }
}

pub fn check_norm_power_multiple(d: u32, spec: &RandomSpec) -> TrialReport {
    let u = random_herm(spec, &mut spec.rng());
    norm_power_multiple_trial(&u, d).with_seed(spec.seed)
}

/// `R = Σ f_j ḡ_j` with fewer pairs than variables. Skipped unless `R` is
/// nonzero and divisible by `‖z‖²`; then `rank(R) ≤ k < n` fails the bound.
pub fn huang_sum_trial(fs: &[HoloPoly], gs: &[HoloPoly]) -> TrialReport {
    let n = fs.first().or(gs.first()).map_or(1, HoloPoly::nvars);
    let inst = instance(n, 1, None);
    let mut r = HermPoly::zero(n);
    for (f, g) in fs.iter().zip(gs) {
        r = r.add(&f.times_conj(g).expect("same nvars")).expect("same nvars");
    }
    if r.is_zero() || !divide::is_norm_power_multiple(&r, 1) {
        return TrialReport::skipped(Check::Huang, inst);
    }
    TrialReport::measured(Check::Huang, inst, matrix::rank(&r) as u64, n as u64)
}

/// Draws `k < n` pairs vanishing at the origin. A divisible nonzero sum
/// is reported (and fails); otherwise the trial measures the rank of the
/// constructed multiple `‖z‖²·u` for a random nonzero `u`.
pub fn check_huang(spec: &RandomSpec) -> TrialReport {
    let n = spec.nvars;
    let mut rng = spec.rng();
    if n >= 2 {
        let k = rng.gen_range(1..n);
        let fs: Vec<HoloPoly> = (0..k).map(|_| random_holo(spec, 1, &mut rng)).collect();
        let gs: Vec<HoloPoly> = (0..k).map(|_| random_holo(spec, 1, &mut rng)).collect();
        let report = huang_sum_trial(&fs, &gs);
        if !report.skipped {
            return report.with_seed(spec.seed);
        }
    }
    let u = random_herm(spec, &mut rng);
    let mut report = norm_power_multiple_trial(&u, 1);
    report.check = Check::Huang;
    report.with_seed(spec.seed)
}

/// Compares every slice of `a·(1 + ‖z‖²)^d` with `slice(a)·(1 + Σx)^d`;
/// `observed` counts matching offsets out of `bound`.
pub fn slice_invariance_trial(a: &HermPoly, d: u32) -> TrialReport {
    let n = a.nvars();
    let inst = instance(n, d, a.total_degree());
    if a.is_zero() {
        return TrialReport::skipped(Check::SliceInvariance, inst);
    }
    let factor = DiagPoly::one_plus_sum(n).pow(d);
    let before = slice_map(a);
    let after = slice_map(&a.mul(&pfister_base(n, d)).expect("same nvars"));
    let mut offsets: Vec<_> = before.keys().chain(after.keys()).cloned().collect();
    offsets.sort();
    offsets.dedup();
    let matching = offsets
        .iter()
        .filter(|delta| {
            let lhs = after.get(*delta).cloned().unwrap_or_else(|| DiagPoly::zero(n));
            let rhs = before.get(*delta).map_or_else(|| DiagPoly::zero(n), |s| s.mul(&factor).expect("same nvars"));
            lhs == rhs
        })
        .count();
    TrialReport::measured(Check::SliceInvariance, inst, matching as u64, offsets.len() as u64)
}

pub fn check_slice_invariance(d: u32, spec: &RandomSpec) -> TrialReport {
    let a = random_herm(spec, &mut spec.rng());
    slice_invariance_trial(&a, d).with_seed(spec.seed)
}

/// For `r = (1 + x)^d q` with `q(0) ≠ 0`: `r′ = (1 + x)^{d−1} q_next` and
/// `#terms(r′) ≤ #terms(r) − 1`. Reports `observed = #terms(r) − #terms(r′)`
/// against `bound = 1`.
pub fn descent_trial(q: &HoloPoly, d: u32) -> TrialReport {
    let inst = instance(1, d, q.degree());
    let (q, _) = q.strip_var_power(0);
    if q.is_zero() || d == 0 {
        return TrialReport::skipped(Check::Descent, inst);
    }
    let r = times_one_plus_x_pow(&q, d).expect("univariate");
    let dr = r.derivative(0).expect("variable 0");
    let (next, e) = descent_step(&q, d).expect("preconditions hold");
    let identity = times_one_plus_x_pow(&next, e).expect("univariate") == dr;
    let drop = r.term_count().saturating_sub(dr.term_count()) as u64;
    let report = TrialReport::measured(Check::Descent, inst, drop, 1);
    if identity {
        report
    } else {
        report.failed()
    }
}

pub fn check_descent(d: u32, spec: &RandomSpec) -> TrialReport {
    let q = random_univariate(spec, &mut spec.rng());
    descent_trial(&q, d).with_seed(spec.seed)
}

/// Exhaustive minor check of `L′` for one `(m, d)`.
pub fn lprime_trial(m: usize, d: u32) -> TrialReport {
    let minors = divide::lprime_minors(m, d as usize);
    let nonzero = minors.iter().filter(|(_, det)| !num_traits::Zero::is_zero(det)).count();
    let inst = Instance { n: m, d, seed: None, multiplier_degree: None };
    let report = TrialReport::measured(Check::LPrimeMinors, inst, nonzero as u64, minors.len() as u64);
    debug_assert_eq!(report.pass, check_lprime_submatrices(m, d as usize));
    report
}

/// `observed = rank`, `bound = extremal slice term count`.
pub fn extremal_slice_trial(a: &HermPoly) -> TrialReport {
    let inst = instance(a.nvars(), 0, a.total_degree());
    match extremal_slice_bound(a) {
        Ok(bound) => TrialReport::measured(Check::ExtremalSlice, inst, matrix::rank(a) as u64, bound as u64),
        Err(_) => TrialReport::skipped(Check::ExtremalSlice, inst),
    }
}

pub fn check_extremal_slice(spec: &RandomSpec) -> TrialReport {
    let a = random_herm(spec, &mut spec.rng());
    extremal_slice_trial(&a).with_seed(spec.seed)
}
