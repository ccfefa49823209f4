//! Sparse multivariate polynomials in body variables over the scalar field.

use super::super::exact::{Rational, Scalar};
use super::bodyvar::{BodyMono, BodyVar};
use std::collections::BTreeMap;
use std::fmt;

/// A finite sum of `Scalar · monomial` terms; zero coefficients are never
/// stored. Multiplication is commutative — this is the generating-function
/// world, not the algebra itself.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BodyPoly {
    terms: BTreeMap<BodyMono, Scalar>,
}

impl BodyPoly {
    pub fn zero() -> Self {
        BodyPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        BodyPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = BodyPoly::zero();
        if !c.is_zero() {
            p.terms.insert(BodyMono::one(), c);
        }
        p
    }

    pub fn var(v: BodyVar) -> Self {
        BodyPoly::monomial(Scalar::one(), BodyMono::var(v))
    }

    pub fn monomial(c: Scalar, m: BodyMono) -> Self {
        let mut p = BodyPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BodyMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &BodyMono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&BodyMono::one())
    }

    pub fn add_term(&mut self, m: BodyMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(entry) => {
                let sum = entry.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *entry = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BodyPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return BodyPoly::zero();
        }
        BodyPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.scale(&Scalar::from_rational(c.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BodyPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = BodyPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// All distinct body variables occurring in the polynomial.
    pub fn vars(&self) -> Vec<BodyVar> {
        let mut v: Vec<BodyVar> = Vec::new();
        for m in self.terms.keys() {
            for var in m.vars() {
                if !v.contains(&var) {
                    v.push(var);
                }
            }
        }
        v.sort();
        v
    }

    pub fn contains_var(&self, v: BodyVar) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn degree_in(&self, v: BodyVar) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Substitute a variable by a polynomial (exact, expands powers).
    pub fn substitute_var(&self, v: BodyVar, image: &BodyPoly) -> Self {
        let mut out = BodyPoly::zero();
        let mut image_pows: Vec<BodyPoly> = vec![BodyPoly::one()];
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            while image_pows.len() <= e as usize {
                let next = image_pows.last().unwrap().mul(image);
                image_pows.push(next);
            }
            let rest = m.without(v, e);
            let piece = image_pows[e as usize].scale(c);
            for (pm, pc) in piece.iter() {
                out.add_term(rest.mul(pm), pc.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to a body variable.
    pub fn derivative(&self, v: BodyVar) -> Self {
        let mut out = BodyPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            out.add_term(m.without(v, 1), c.scale(&super::super::exact::rat(e as i64)));
        }
        out
    }

    /// The part of the polynomial whose monomials contain `v`.
    pub fn part_containing(&self, v: BodyVar) -> Self {
        BodyPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) > 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Set a variable to zero (drop all terms containing it).
    pub fn set_var_zero(&self, v: BodyVar) -> Self {
        BodyPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Map every scalar coefficient through `f`; drops vanished terms.
    pub fn map_scalars<F: Fn(&Scalar) -> Result<Scalar, String>>(
        &self,
        f: F,
    ) -> Result<Self, String> {
        let mut out = BodyPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for BodyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c}) {m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symseries::bodyvar::VarClass;

    fn v(class: VarClass, s: u32) -> BodyVar {
        BodyVar::new(class, s)
    }

    #[test]
    fn ring_basics() {
        let y = BodyPoly::var(v(VarClass::Y, 0));
        let x = BodyPoly::var(v(VarClass::X, 0));
        let p = y.add(&x);
        let sq = p.mul(&p);
        // (y+x)² = y² + 2yx + x²
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(
            sq.coefficient(&BodyMono::var(v(VarClass::Y, 0)).mul(&BodyMono::var(v(VarClass::X, 0)))),
            Scalar::from_int(2)
        );
    }

    #[test]
    fn substitution_expands() {
        let y = v(VarClass::Y, 0);
        let x = v(VarClass::X, 0);
        let p = BodyPoly::monomial(Scalar::one(), BodyMono::var_pow(y, 2));
        let image = BodyPoly::var(x).add(&BodyPoly::one());
        let q = p.substitute_var(y, &image);
        // (x+1)² = x² + 2x + 1
        assert_eq!(q.num_terms(), 3);
        assert_eq!(q.constant_term(), Scalar::one());
    }

    #[test]
    fn derivative_rule() {
        let y = v(VarClass::Y, 1);
        let p = BodyPoly::monomial(Scalar::from_int(3), BodyMono::var_pow(y, 4));
        let d = p.derivative(y);
        assert_eq!(d.coefficient(&BodyMono::var_pow(y, 3)), Scalar::from_int(12));
    }
}
