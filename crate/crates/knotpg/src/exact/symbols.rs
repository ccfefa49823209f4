//! Group-like scalar symbols and their monomials.
//!
//! Three symbol kinds exist:
//! - `T`: the single global variable of the Alexander polynomial and of the
//!   Heisenberg backend,
//! - `B(k)`: the group-like exponential attached to the codomain-side
//!   group-like variable of strand `k`,
//! - `CalA(j)` (written `𝒜_j`): the group-like exponential attached to the
//!   domain-side group-like variable of strand `j`.
//!
//! All exponents are *doubled* integers so that half powers are exact: the
//! pair `(T, 1)` denotes `T^{1/2}`.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Opaque strand label used throughout the engine.
pub type Strand = u32;

/// A scalar symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum SymbolId {
    /// The global variable `T`.
    T,
    /// `𝒜_j`, attached to domain strand `j`.
    CalA(Strand),
    /// `B_k`, attached to codomain strand `k`.
    B(Strand),
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolId::T => write!(f, "T"),
            SymbolId::CalA(s) => write!(f, "A_{s}"),
            SymbolId::B(s) => write!(f, "B_{s}"),
        }
    }
}

/// A monomial in the symbols: a sorted, duplicate-free list of
/// `(symbol, doubled exponent)` pairs with all exponents nonzero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct SymMono(Vec<(SymbolId, i64)>);

impl SymMono {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        SymMono(Vec::new())
    }

    /// A single symbol raised to a doubled exponent (`half2 = 1` ⇒ square root).
    pub fn var(sym: SymbolId, half2: i64) -> Self {
        if half2 == 0 {
            SymMono::one()
        } else {
            SymMono(vec![(sym, half2)])
        }
    }

    /// Build from arbitrary pairs, combining duplicates and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (SymbolId, i64)>) -> Self {
        let mut v: Vec<(SymbolId, i64)> = Vec::new();
        for (s, e) in pairs {
            if e == 0 {
                continue;
            }
            match v.binary_search_by(|(t, _)| t.cmp(&s)) {
                Ok(i) => {
                    v[i].1 += e;
                    if v[i].1 == 0 {
                        v.remove(i);
                    }
                }
                Err(i) => v.insert(i, (s, e)),
            }
        }
        SymMono(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(SymbolId, i64)> {
        self.0.iter()
    }

    /// Doubled exponent of `sym` in this monomial (0 if absent).
    pub fn exponent(&self, sym: SymbolId) -> i64 {
        self.0
            .binary_search_by(|(t, _)| t.cmp(&sym))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &SymMono) -> SymMono {
        SymMono::from_pairs(self.iter().chain(other.iter()).cloned())
    }

    /// This monomial raised to the doubled power `half2` (i.e. to `half2 / 2`).
    /// Errors if any resulting exponent would not be a half integer.
    pub fn pow_half2(&self, half2: i64) -> Result<SymMono, String> {
        let mut out = Vec::with_capacity(self.0.len());
        for &(s, e) in &self.0 {
            let prod = e.checked_mul(half2).ok_or("symbol exponent overflow")?;
            if prod % 2 != 0 {
                return Err(format!(
                    "substitution would require a quarter power of {s} (exponents {e}/2 and {half2}/2)"
                ));
            }
            let ne = prod / 2;
            if ne != 0 {
                out.push((s, ne));
            }
        }
        Ok(SymMono(out))
    }

    pub fn inverse(&self) -> SymMono {
        SymMono(self.0.iter().map(|&(s, e)| (s, -e)).collect())
    }

    /// Total doubled degree in the given symbol.
    pub fn degree_in(&self, sym: SymbolId) -> i64 {
        self.exponent(sym)
    }

    /// All symbols occurring in this monomial.
    pub fn symbols(&self) -> impl Iterator<Item = SymbolId> + '_ {
        self.0.iter().map(|&(s, _)| s)
    }
}

impl fmt::Display for SymMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(s, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 2 {
                write!(f, "{s}")?;
            } else if e % 2 == 0 {
                write!(f, "{s}^{}", e / 2)?;
            } else {
                write!(f, "{s}^({e}/2)")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_combination() {
        let m = SymMono::from_pairs([(SymbolId::T, 1), (SymbolId::T, 1), (SymbolId::B(2), -2)]);
        assert_eq!(m.exponent(SymbolId::T), 2);
        assert_eq!(m.exponent(SymbolId::B(2)), -2);
        let n = SymMono::from_pairs([(SymbolId::T, -2), (SymbolId::B(2), 2)]);
        assert!(m.mul(&n).is_one());
    }

    #[test]
    fn half_power_rules() {
        let m = SymMono::var(SymbolId::T, 2); // T
        assert_eq!(m.pow_half2(1).unwrap(), SymMono::var(SymbolId::T, 1)); // T^{1/2}
        let h = SymMono::var(SymbolId::T, 1); // T^{1/2}
        assert!(h.pow_half2(1).is_err()); // T^{1/4} is not representable
    }
}
