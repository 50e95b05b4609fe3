//! Exact arithmetic for Hermitian symmetric polynomials.
//!
//! A Hermitian-bidegree polynomial is a finite sum
//! `Σ c(α, β) z^α z̄^β` with Gaussian-rational coefficients. This crate
//! computes the rank of its coefficient matrix (the Hermitian length when
//! the polynomial is a squared norm), exact squared-norm certificates,
//! divisibility by `(1 + ‖z‖²)^d` and `‖z‖^{2d}`, and runs seeded
//! verification trials for the rank lower bounds on multiples of those
//! divisors.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line front end live in the `hermsos` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dims;
pub mod divide;
mod error;
pub mod gaussian;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod poly;
mod sparse;
pub mod sos;
pub mod verify;

pub use error::{Error, Result};
pub use gaussian::GaussianRational;
pub use matrix::{CoeffMatrix, Slice};
pub use monomial::{MultiIndex, SignedOffset};
pub use poly::{DiagPoly, HermPoly, HoloPoly};
pub use sos::SquaredNormCert;
