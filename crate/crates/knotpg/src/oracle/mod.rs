//! Independent test oracles: Alexander polynomials from braid words and a
//! brute-force monomial contraction path for randomized engine checks.

pub mod alexander;
pub mod braid;
pub mod brute;

pub use alexander::{
    alexander_degree, alexander_from_braid, alexander_from_seifert, burau_alexander,
    det_scalar, determinant_from_alexander, seifert_matrix, v2_from_alexander,
};
pub use braid::BraidWord;
pub use brute::run_contraction_oracle;
