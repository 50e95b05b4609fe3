//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p hermsos-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hermsos_core::dims::{binom, m_dim, n_dim};
use hermsos_core::divide::check_lprime_submatrices;
use hermsos_core::matrix::{self, extremal_slice_bound};
use hermsos_core::poly::{norm_power, pfister_base};
use hermsos_core::sos::squared_norm_decompose;
use hermsos_core::verify::{
    self, huang_grid_search, huang_sampled_search, random_homogeneous, random_squared_norm, RandomSpec, TrialReport,
};
use hermsos_core::{DiagPoly, GaussianRational};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Run `check` on successive trial seeds until `count` non-skipped trials.
fn nonzero_trials(count: usize, base: &RandomSpec, check: impl Fn(&RandomSpec) -> TrialReport) -> (usize, usize) {
    let (mut done, mut violations, mut index) = (0, 0, 0u64);
    while done < count {
        let r = check(&base.trial(index));
        index += 1;
        if r.skipped {
            continue;
        }
        done += 1;
        if !r.pass {
            violations += 1;
        }
    }
    (done, violations)
}

fn ac1_equality_cases() -> Outcome {
    let start = Instant::now();
    let mut mismatches = 0;
    for n in 1..=3usize {
        for d in 0..=4u32 {
            if matrix::rank(&pfister_base(n, d)) as u64 != binom(n as u64 + u64::from(d), u64::from(d)) {
                mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(mismatches == 0 && elapsed < Duration::from_secs(10), format!("15 cases, {mismatches} mismatches, {elapsed:.2?} (limit 10 s)"))
}

fn ac2_pfister_lower_bound() -> Outcome {
    let mut parts = Vec::new();
    let mut total_violations = 0;
    for (n, d, seed) in [(1usize, 4u32, 1_000u64), (2, 3, 2_000)] {
        let base = RandomSpec::new(seed, n, 4);
        let (trials, violations) = nonzero_trials(200, &base, |s| verify::check_pfister_multiple(d, s));
        total_violations += violations;
        parts.push(format!("n={n} d={d}: {trials} trials, {violations} violations, bound {}", m_dim(n as u64, d.into())));
    }
    outcome(total_violations == 0, parts.join("; "))
}

fn ac3_term_counts() -> Outcome {
    let mut violations = 0;
    let mut trials = 0;
    for n in 2..=3usize {
        for d in 1..=3u32 {
            let base = RandomSpec::new(3_000 + 10 * n as u64 + u64::from(d), n, 4);
            let (t, v) = nonzero_trials(200, &base, |s| verify::check_diagonal_term_count(d, s));
            trials += t;
            violations += v;
        }
    }
    let mut uni_trials = 0;
    let mut uni_violations = 0;
    let base = RandomSpec::new(4_000, 1, 6);
    let mut index = 0u64;
    while uni_trials < 1000 {
        let spec = base.trial(index);
        index += 1;
        let q = verify::random_univariate(&spec, &mut spec.rng());
        if q.is_zero() {
            continue;
        }
        uni_trials += 1;
        if (0..=4).any(|d| !verify::univariate_term_count_trial(&q, d).pass) {
            uni_violations += 1;
        }
    }
    outcome(
        violations == 0 && uni_violations == 0,
        format!(
            "multivariate: {trials} trials, {violations} violations; univariate: {uni_trials} q x d=0..4, {uni_violations} violations"
        ),
    )
}

fn ac4_lprime() -> Outcome {
    let mut cases = 0;
    let mut failures = Vec::new();
    for total in 1..=9usize {
        for d in 1..=total {
            let m = total - d;
            cases += 1;
            if !check_lprime_submatrices(m, d) {
                failures.push((m, d));
            }
        }
    }
    outcome(failures.is_empty(), format!("{cases} (m, d) pairs with m+d <= 9, failures {failures:?}"))
}

fn ac5_descent() -> Outcome {
    let base = RandomSpec::new(5_000, 1, 6);
    let (mut trials, mut violations, mut index) = (0, 0, 0u64);
    while trials < 500 {
        let d = 1 + (index % 4) as u32;
        let r = verify::check_descent(d, &base.trial(index));
        index += 1;
        if r.skipped {
            continue;
        }
        trials += 1;
        if !r.pass {
            violations += 1;
        }
    }
    outcome(violations == 0, format!("{trials} (q, d) pairs, {violations} identity/term-drop failures"))
}

fn ac6_slice_invariance() -> Outcome {
    let (mut trials, mut violations, mut index) = (0, 0, 0u64);
    while trials < 500 {
        let n = 1 + (index % 3) as usize;
        let d = (index % 3) as u32;
        let spec = RandomSpec::new(6_000 + index, n, 3);
        index += 1;
        let r = verify::check_slice_invariance(d, &spec);
        if r.skipped {
            continue;
        }
        trials += 1;
        if !r.pass {
            violations += 1;
        }
    }
    outcome(violations == 0, format!("{trials} random a (n<=3, deg<=3, d<=2), {violations} mismatching"))
}

fn ac7_sos_roundtrip() -> Outcome {
    let mut failures = 0;
    for i in 0..500u64 {
        let n = 1 + (i % 3) as usize;
        let spec = RandomSpec::new(7_000 + i, n, 3);
        let a = random_squared_norm(&spec, &mut spec.rng());
        if a.is_zero() {
            // Σ|p_j|² with nonzero p_j is nonzero.
            failures += 1;
            continue;
        }
        match squared_norm_decompose(&a) {
            Ok(cert) if cert.reconstruct() == a && cert.len() == matrix::rank(&a) => {}
            _ => failures += 1,
        }
    }
    outcome(failures == 0, format!("500 random squared norms, {failures} failures"))
}

fn ac8_huang() -> Outcome {
    let mut rank_violations = 0;
    let mut trials = 0;
    for n in 2..=3usize {
        let base = RandomSpec::new(8_000 + n as u64, n, 3);
        let mut index = 0u64;
        let mut done = 0;
        while done < 200 {
            let spec = base.trial(index);
            index += 1;
            let u = verify::random_herm(&spec, &mut spec.rng());
            let r = verify::norm_power_multiple_trial(&u, 1);
            if r.skipped {
                continue;
            }
            done += 1;
            if !r.pass || r.bound != n as u64 {
                rank_violations += 1;
            }
        }
        trials += done;
    }
    let searches = [
        huang_grid_search(2, 1, 2, 2),
        huang_grid_search(3, 1, 2, 2),
        huang_grid_search(3, 2, 1, 2),
        huang_sampled_search(3, 2, 2, 2, 2000, 8_888),
    ];
    let witnesses: u64 = searches.iter().map(|s| s.witnesses).sum();
    let tuples: Vec<String> =
        searches.iter().map(|s| format!("n={} k={} deg g<={}: {} tuples", s.n, s.k, s.g_degree, s.tuples)).collect();
    outcome(
        rank_violations == 0 && witnesses == 0,
        format!(
            "{trials} multiples of |z|^2, {rank_violations} with rank < n; grid {} ; {witnesses} divisible sums with k < n",
            tuples.join(", ")
        ),
    )
}

fn ac9_bihomogenization() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=3usize {
        for d in 0..=4u32 {
            if pfister_base(n, d).bihomogenize(d).ok() != Some(norm_power(n + 1, d)) {
                failures.push(format!("bihom n={n} d={d}"));
            }
        }
    }
    for n in 1..=8u64 {
        for d in 0..=8u64 {
            let sum: u64 = (0..=d).map(|k| n_dim(n, k)).sum();
            if m_dim(n, d) != sum || sum != n_dim(n + 1, d) {
                failures.push(format!("dims n={n} d={d}"));
            }
        }
    }
    for n in 1..=3usize {
        for k in 0..=4u32 {
            if matrix::rank(&norm_power(n, k)) as u64 != n_dim(n as u64, k.into()) {
                failures.push(format!("rank n={n} k={k}"));
            }
        }
    }
    outcome(failures.is_empty(), format!("15 bihomogenizations, 72 dim identities, 15 norm-power ranks; failures {failures:?}"))
}

fn ac10_extremal_slice() -> Outcome {
    let base = RandomSpec::new(10_000, 2, 4);
    let (trials, violations) = nonzero_trials(500, &base, |s| {
        let spec = RandomSpec { nvars: 1 + (s.seed % 3) as usize, ..s.clone() };
        verify::check_extremal_slice(&spec)
    });
    let mut diagonal = 0;
    let mut unequal = 0;
    for i in 0..300u64 {
        let n = 1 + (i % 3) as usize;
        let spec = RandomSpec::new(11_000 + i, n, 4);
        let q = random_homogeneous(&spec, (i % 5) as u32, &mut spec.rng());
        let q = DiagPoly::from_terms(n, q.terms().map(|(m, c)| (m.clone(), GaussianRational::from(c.re().clone()))))
            .expect("same nvars");
        if q.is_zero() {
            continue;
        }
        diagonal += 1;
        let a = q.to_herm();
        if extremal_slice_bound(&a).ok() != Some(matrix::rank(&a)) {
            unequal += 1;
        }
    }
    outcome(
        violations == 0 && unequal == 0,
        format!("{trials} random inputs, {violations} with bound > rank; {diagonal} diagonal inputs, {unequal} without equality"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 rank((1+|z|^2)^d) = binom(n+d, d)", ac1_equality_cases),
        ("AC2 rank of multiples of (1+|z|^2)^d >= M(n, d)", ac2_pfister_lower_bound),
        ("AC3 term counts of multiples of (sum x)^d and (1+x)^d", ac3_term_counts),
        ("AC4 square submatrices of L' invertible", ac4_lprime),
        ("AC5 descent identity and term drop", ac5_descent),
        ("AC6 slice invariance under (1+|z|^2)^d", ac6_slice_invariance),
        ("AC7 squared-norm certificate roundtrip", ac7_sos_roundtrip),
        ("AC8 multiples of |z|^2 need rank >= n", ac8_huang),
        ("AC9 bihomogenization and dimension identities", ac9_bihomogenization),
        ("AC10 extremal slice bound <= rank", ac10_extremal_slice),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        if !o.pass {
            failed += 1;
        }
        println!("[{}] {name} :: {} ({elapsed:.2?})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
