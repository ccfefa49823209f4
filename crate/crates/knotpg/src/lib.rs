//! An exact-arithmetic engine for perturbed-Gaussian generating-function
//! calculus over a ribbon Hopf algebra.
//!
//! The crate computes a universal knot invariant truncated at a configurable
//! ε-order, extracts the (Conway-normalized) Alexander polynomial and the
//! higher loop coefficients ρ_{k,j}, and verifies the algebraic and
//! topological identities the construction rests on.
//!
//! Module map:
//! - [`exact`]: big rationals, sparse Laurent polynomials with half-integer
//!   exponents, and their fraction field.
//! - [`symseries`]: indexed body variables, polynomials over the scalar
//!   field, ε-truncated series, weight gradings.
//! - [`pgcalc`]: the perturbed-Gaussian morphism type and the
//!   contraction/composition engine.
//! - [`heisenberg`]: the Heisenberg-algebra backend computing 1/Δ_K directly.
//! - [`doublealg`]: the Drinfeld-double backend — closed forms,
//!   order-by-order solvers, Hopf/ribbon axiom verification.
//! - [`tangles`]: the tangle program DSL, braid frontend, and satellite
//!   operators.
//! - [`invariant`]: end-to-end evaluation, center extraction, topological
//!   reports.
//! - [`oracle`]: independent test oracles (Seifert-matrix Alexander, v₂).
//! - [`knots`]: curated knot presentations with reference data.

pub mod exact;
pub mod symseries;
pub mod pgcalc;
pub mod heisenberg;
pub mod doublealg;
pub mod tangles;
pub mod invariant;
pub mod oracle;
pub mod knots;
