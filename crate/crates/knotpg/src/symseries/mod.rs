//! Indexed body variables, sparse polynomials over the scalar field, and
//! ε-truncated series, together with the weight gradings that police them.

pub mod bodyvar;
pub mod bodypoly;
pub mod epsseries;
pub mod grading;

pub use bodyvar::{BodyMono, BodyVar, VarClass};
pub use bodypoly::BodyPoly;
pub use epsseries::EpsSeries;
