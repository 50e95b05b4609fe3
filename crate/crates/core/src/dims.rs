//! Binomial coefficients and the dimension counts `M(n, d)`, `N(n, d)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `binom(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `binom(n, k)` without overflow.
pub fn binom_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `M(n, d) = binom(n + d, d)`: dimension of polynomials of degree at most
/// `d` in `n` variables.
pub fn m_dim(n: u64, d: u64) -> u64 {
    binom(n + d, d)
}

/// `N(n, d) = binom(n + d − 1, d)`: dimension of homogeneous polynomials of
/// degree `d` in `n` variables. `N(0, 0) = 1`, `N(0, d) = 0` otherwise.
pub fn n_dim(n: u64, d: u64) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    binom(n + d - 1, d)
}

/// `(M(n, d), N(n, d))`.
pub fn dims(n: u64, d: u64) -> (u64, u64) {
    (m_dim(n, d), n_dim(n, d))
}
