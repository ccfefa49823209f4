//! Indexed body variables and their monomials.
//!
//! Latin classes `y, t, a, x` live on codomain strands; their Greek duals
//! `η, τ, α, ξ` live on domain strands. Composition contracts a Latin
//! variable against the Greek dual of the same class on the same strand.
//!
//! The Heisenberg backend reuses the `y/η` and `x/ξ` pairs for its `p/π`
//! and `x/ξ` generators — the contraction calculus is identical and no
//! group-like symbols are attached to those classes.

use super::super::exact::Strand;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Variable class. The discriminant order fixes the canonical term order
/// (`y < t < a < x < η < τ < α < ξ`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum VarClass {
    Y = 0,
    T = 1,
    A = 2,
    X = 3,
    Eta = 4,
    Tau = 5,
    Alpha = 6,
    Xi = 7,
}

impl VarClass {
    pub fn is_latin(self) -> bool {
        matches!(self, VarClass::Y | VarClass::T | VarClass::A | VarClass::X)
    }

    pub fn is_greek(self) -> bool {
        !self.is_latin()
    }

    /// The contraction partner class (`y ↔ η`, `t ↔ τ`, `a ↔ α`, `x ↔ ξ`).
    pub fn dual(self) -> VarClass {
        match self {
            VarClass::Y => VarClass::Eta,
            VarClass::T => VarClass::Tau,
            VarClass::A => VarClass::Alpha,
            VarClass::X => VarClass::Xi,
            VarClass::Eta => VarClass::Y,
            VarClass::Tau => VarClass::T,
            VarClass::Alpha => VarClass::A,
            VarClass::Xi => VarClass::X,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VarClass::Y => "y",
            VarClass::T => "t",
            VarClass::A => "a",
            VarClass::X => "x",
            VarClass::Eta => "eta",
            VarClass::Tau => "tau",
            VarClass::Alpha => "alpha",
            VarClass::Xi => "xi",
        }
    }
}

/// A body variable: a class on a strand.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BodyVar {
    pub strand: Strand,
    pub class: VarClass,
}

impl BodyVar {
    pub fn new(class: VarClass, strand: Strand) -> Self {
        BodyVar { strand, class }
    }

    pub fn dual(self) -> BodyVar {
        BodyVar { strand: self.strand, class: self.class.dual() }
    }
}

impl PartialOrd for BodyVar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BodyVar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.strand, self.class).cmp(&(other.strand, other.class))
    }
}

impl fmt::Display for BodyVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.class.name(), self.strand)
    }
}

/// A monomial in body variables: sorted `(variable, exponent)` pairs with
/// positive exponents. Ordered graded-lexicographically (total degree first).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct BodyMono(Vec<(BodyVar, u32)>);

impl BodyMono {
    pub fn one() -> Self {
        BodyMono(Vec::new())
    }

    pub fn var(v: BodyVar) -> Self {
        BodyMono(vec![(v, 1)])
    }

    pub fn var_pow(v: BodyVar, e: u32) -> Self {
        if e == 0 {
            BodyMono::one()
        } else {
            BodyMono(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (BodyVar, u32)>) -> Self {
        let mut v: Vec<(BodyVar, u32)> = Vec::new();
        for (var, e) in pairs {
            if e == 0 {
                continue;
            }
            match v.binary_search_by(|(w, _)| w.cmp(&var)) {
                Ok(i) => v[i].1 += e,
                Err(i) => v.insert(i, (var, e)),
            }
        }
        BodyMono(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(BodyVar, u32)> {
        self.0.iter()
    }

    pub fn exponent(&self, v: BodyVar) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &BodyMono) -> BodyMono {
        BodyMono::from_pairs(self.iter().chain(other.iter()).cloned())
    }

    /// Remove `v^e` from the monomial; panics if not present with at least
    /// that exponent. Removing `v^0` is a no-op.
    pub fn without(&self, v: BodyVar, e: u32) -> BodyMono {
        if e == 0 {
            return self.clone();
        }
        let mut out = self.0.clone();
        let i = out
            .binary_search_by(|(w, _)| w.cmp(&v))
            .expect("variable not present in monomial");
        assert!(out[i].1 >= e);
        out[i].1 -= e;
        if out[i].1 == 0 {
            out.remove(i);
        }
        BodyMono(out)
    }

    /// All distinct variables in the monomial.
    pub fn vars(&self) -> impl Iterator<Item = BodyVar> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }
}

impl PartialOrd for BodyMono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BodyMono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for BodyMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let y0 = BodyMono::var(BodyVar::new(VarClass::Y, 0));
        let x0 = BodyMono::var(BodyVar::new(VarClass::X, 0));
        let yx = y0.mul(&x0);
        assert!(yx > y0); // higher total degree wins
        assert!(y0 < x0); // y before x within a strand
    }

    #[test]
    fn without_removes_powers() {
        let y = BodyVar::new(VarClass::Y, 3);
        let m = BodyMono::var_pow(y, 3);
        assert_eq!(m.without(y, 2), BodyMono::var(y));
        assert!(m.without(y, 3).is_one());
    }
}
