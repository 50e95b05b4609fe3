//! Seeded verification suites.
//!
//! Trial `i` always uses seed `base + i`, and results are merged by trial
//! index, so the report does not depend on the thread count.

use core::fmt;
use core::str::FromStr;
use std::thread;

use hermsos_core::dims::binom;
use hermsos_core::verify::{self, huang_grid_search, huang_sampled_search, monomials, GridSearch, RandomSpec, TrialReport};

use crate::report::ReportLine;

/// Environment variable capping suite parallelism.
pub const THREADS_VAR: &str = "HERMSOS_THREADS";

/// Grid searches with more `g`-tuples than this are sampled instead.
pub const GRID_LIMIT: u64 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Ranks of random multiples of `(1 + ‖z‖²)^d`.
    Pfister,
    /// Term counts of random multiples of `(x₁ + … + xₙ)^d`.
    Prop21,
    /// Divisibility of short sums `Σ f_j ḡ_j` by `‖z‖²`.
    Huang,
    /// Slice invariance under multiplication by `(1 + ‖z‖²)^d`.
    Slices,
    /// Square minors of the truncated basis-change matrix.
    Lprime,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Pfister, Suite::Prop21, Suite::Huang, Suite::Slices, Suite::Lprime];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pfister => "pfister",
            Suite::Prop21 => "prop21",
            Suite::Huang => "huang",
            Suite::Slices => "slices",
            Suite::Lprime => "lprime",
        }
    }

    pub fn has_exhaustive_mode(self) -> bool {
        matches!(self, Suite::Huang | Suite::Lprime)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!("unknown suite '{s}' (expected one of: {})", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub n: usize,
    pub d: u32,
    pub trials: u64,
    pub seed: u64,
    pub exhaustive: bool,
    /// Largest `m + d` for the minor enumeration.
    pub max: usize,
    pub threads: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { n: 2, d: 1, trials: 200, seed: 0, exhaustive: false, max: 9, threads: 1 }
    }
}

/// `HERMSOS_THREADS`, defaulting to 1 when unset or invalid.
pub fn threads_from_env() -> usize {
    std::env::var(THREADS_VAR).ok().and_then(|v| v.trim().parse().ok()).filter(|&t| t > 0).unwrap_or(1)
}

/// Runs `trial(i)` for `i in 0..count` on up to `threads` workers and
/// returns the results in index order.
pub fn run_indexed<T, F>(count: u64, threads: usize, trial: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync,
{
    let threads = threads.clamp(1, count.max(1) as usize);
    if threads == 1 {
        return (0..count).map(&trial).collect();
    }
    let mut slots: Vec<Option<T>> = (0..count).map(|_| None).collect();
    thread::scope(|scope| {
        let workers: Vec<_> = (0..threads as u64)
            .map(|w| {
                let trial = &trial;
                scope.spawn(move || {
                    (w..count).step_by(threads).map(|i| (i, trial(i))).collect::<Vec<_>>()
                })
            })
            .collect();
        for worker in workers {
            for (i, r) in worker.join().expect("trial panicked") {
                slots[i as usize] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every index ran")).collect()
}

fn seeded(opts: &SuiteOptions, max_degree: u32, check: impl Fn(&RandomSpec) -> TrialReport + Sync) -> Vec<ReportLine> {
    let base = RandomSpec::new(opts.seed, opts.n, max_degree);
    run_indexed(opts.trials, opts.threads, |i| ReportLine::from_trial(i, &check(&base.trial(i))))
}

fn grid_line(trial: u64, g: &GridSearch, sampled: bool) -> ReportLine {
    let kind = if sampled { "sampled" } else { "grid" };
    ReportLine {
        trial,
        check: "huang".to_string(),
        n: g.n,
        d: g.g_degree,
        seed: None,
        multiplier_degree: None,
        observed: g.tuples - g.witnesses,
        bound: g.tuples,
        skipped: false,
        pass: g.witnesses == 0,
        detail: Some(format!(
            "{kind} k={} g_degree={} f_degree={} tuples={} witnesses={}",
            g.k, g.g_degree, g.f_degree, g.tuples, g.witnesses
        )),
    }
}

/// Number of unordered distinct `k`-tuples of sign-normalized grid vectors.
fn grid_size(n: usize, k: usize, g_degree: u32) -> u64 {
    let len = monomials(n, 1, g_degree).len() as u32;
    let vectors = 3u64.checked_pow(len).map_or(u64::MAX, |t| (t - 1) / 2);
    binom(vectors, k as u64)
}

/// Every `k < n` over the `{−1, 0, 1}` grid of `g` with degree at most `d`;
/// oversized grids fall back to `trials` seeded samples.
fn huang_grids(opts: &SuiteOptions, first_trial: u64) -> Vec<ReportLine> {
    let g_degree = opts.d.max(1);
    let f_degree = g_degree.max(2);
    let ks: Vec<usize> = (1..opts.n).collect();
    let searches = run_indexed(ks.len() as u64, opts.threads, |i| {
        let k = ks[i as usize];
        if grid_size(opts.n, k, g_degree) <= GRID_LIMIT {
            (huang_grid_search(opts.n, k, g_degree, f_degree), false)
        } else {
            (huang_sampled_search(opts.n, k, g_degree, f_degree, opts.trials, opts.seed), true)
        }
    });
    searches.iter().enumerate().map(|(i, (g, sampled))| grid_line(first_trial + i as u64, g, *sampled)).collect()
}

fn lprime(opts: &SuiteOptions) -> Vec<ReportLine> {
    let pairs: Vec<(usize, u32)> =
        (1..=opts.max).flat_map(|total| (1..=total).map(move |d| (total - d, d as u32))).collect();
    run_indexed(pairs.len() as u64, opts.threads, |i| {
        let (m, d) = pairs[i as usize];
        ReportLine::from_trial(i, &verify::lprime_trial(m, d))
    })
}

/// Runs a suite. Fails only on option combinations the suite cannot honor.
pub fn run(suite: Suite, opts: &SuiteOptions) -> Result<Vec<ReportLine>, String> {
    if opts.exhaustive && !suite.has_exhaustive_mode() {
        return Err(format!("suite '{suite}' has no exhaustive mode"));
    }
    if suite != Suite::Lprime && opts.n == 0 {
        return Err("--n must be at least 1".to_string());
    }
    let d = opts.d;
    Ok(match suite {
        Suite::Pfister => seeded(opts, 4, |s| verify::check_pfister_multiple(d, s)),
        Suite::Prop21 => seeded(opts, 4, |s| verify::check_diagonal_term_count(d, s)),
        Suite::Slices => seeded(opts, 3, |s| verify::check_slice_invariance(d, s)),
        Suite::Huang => {
            let mut lines = seeded(opts, d.max(1), verify::check_huang);
            if opts.exhaustive {
                let grids = huang_grids(opts, opts.trials);
                lines.extend(grids);
            }
            lines
        }
        Suite::Lprime => lprime(opts),
    })
}
