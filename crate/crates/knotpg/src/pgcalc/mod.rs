//! Perturbed-Gaussian morphisms and the contraction/composition engine.
//!
//! A morphism is `P·e^G` where `G` is a quadratic exponent in body variables
//! (with scalar coefficients) and `P` is an ε-truncated perturbation series.
//! Composition `f // g` contracts the shared strand variables: group-like
//! pairs `(t,τ)` and `(a,α)` first (by exact substitution into the group-like
//! symbols plus derivative corrections), then the `xy`-block pairs
//! `(y,η)`, `(x,ξ)` (by the one-variable Gaussian contraction rule, iterated;
//! exact determinant prefactors accumulate in the perturbation's scalars).

pub mod pgelem;
pub mod contract;
pub mod compose;
pub mod validate;

pub use compose::{compose, tensor};
pub use contract::{contract_pair, formal_bracket};
pub(crate) use contract::split_by_symbol;
pub use pgelem::PGElem;
pub use validate::{validate_pg_class, Flavor};
