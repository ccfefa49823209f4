//! Exact scalar arithmetic.
//!
//! Everything downstream computes over the fraction field of sparse Laurent
//! polynomials with rational coefficients in a small set of group-like
//! symbols: a global `T`, a per-strand `B_k` and a per-strand `𝒜_j`.
//! Half-integer exponents are required throughout (the Conway-normalized
//! Alexander polynomial and the spinner `(AB)^{1/2}` both force them), so all
//! exponents are stored *doubled*: the stored exponent `1` means `T^{1/2}`.

pub mod rational;
pub mod symbols;
pub mod laurent;
pub mod scalar;
pub mod qseries;

pub use rational::{factorial, pow_i, rat, ratio, Rational};
pub use symbols::{Strand, SymMono, SymbolId};
pub use laurent::LaurentPoly;
pub use scalar::Scalar;
pub use qseries::QSeries;
