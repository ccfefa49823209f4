//! The coefficient field: fractions of sparse Laurent polynomials in the
//! group-like symbols, kept in a normalized form.
//!
//! Normalization rules:
//! - the denominator is never zero and never carries a removable monomial
//!   factor (each symbol's minimum exponent in the denominator is 0);
//! - when at most one symbol occurs in the fraction, numerator and
//!   denominator are reduced by their univariate gcd and the denominator is
//!   made monic;
//! - otherwise the denominator is made integer-primitive with positive
//!   leading coefficient (rational content reduction).
//!
//! Equality always falls back to exact cross-multiplication, so the partial
//! canonicalization in the multivariate case is a performance matter only.

use super::laurent::{dense_div_exact, dense_gcd, LaurentPoly};
use super::rational::Rational;
use super::symbols::{SymMono, SymbolId};
use num::traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An exact rational function in the group-like symbols.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Scalar { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(super::rational::rat(n))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar { num: p, den: LaurentPoly::one() }
    }

    /// A symbol raised to a doubled power (`half2 = 1` ⇒ square root).
    pub fn var_pow(sym: SymbolId, half2: i64) -> Self {
        Scalar::from_poly(LaurentPoly::var_pow(sym, half2))
    }

    /// Build `num/den`, normalizing. Panics if `den = 0` — use [`Scalar::try_new`]
    /// where the denominator is data-dependent.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        Scalar::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, String> {
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        let mut s = Scalar { num, den };
        s.reduce();
        Ok(s)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// If the scalar is a polynomial (denominator 1), return it.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den == LaurentPoly::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// If the scalar is a plain rational number, return it.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.symbols().is_empty() {
            return None;
        }
        let n = self.num.coefficient(&SymMono::one());
        let d = self.den.coefficient(&SymMono::one());
        if d.is_zero() {
            return None;
        }
        Some(n / d)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // strip the denominator's common monomial factor
        let dm = self.den.common_monomial();
        if !dm.is_one() {
            let inv = dm.inverse();
            self.den = self.den.mul_monomial(&Rational::one(), &inv);
            self.num = self.num.mul_monomial(&Rational::one(), &inv);
        }
        // a monomial denominator reduces to 1
        if self.den.num_terms() == 1 {
            let (m, c) = self.den.leading().unwrap();
            debug_assert!(m.is_one());
            let inv = c.clone().recip();
            let _ = m;
            self.num = self.num.scale(&inv);
            self.den = LaurentPoly::one();
            return;
        }
        // univariate gcd reduction when at most one symbol occurs in total
        let mut syms = self.num.symbols();
        for s in self.den.symbols() {
            if !syms.contains(&s) {
                syms.push(s);
            }
        }
        if syms.len() <= 1 {
            // factor out the numerator's monomial part so both sides are
            // honest polynomials in half powers of the symbol
            let nm = self.num.common_monomial();
            let shifted = self.num.mul_monomial(&Rational::one(), &nm.inverse());
            let (s1, lo1, a) = shifted.as_univariate().unwrap();
            let (s2, lo2, b) = self.den.as_univariate().unwrap();
            debug_assert_eq!(lo1, 0);
            debug_assert_eq!(lo2, 0);
            let sym = s1.or(s2);
            let g = dense_gcd(&a, &b);
            if g.len() > 1 {
                let qa = dense_div_exact(&a, &g);
                let qb = dense_div_exact(&b, &g);
                self.num =
                    LaurentPoly::from_univariate(sym, 0, &qa).mul_monomial(&Rational::one(), &nm);
                self.den = LaurentPoly::from_univariate(sym, 0, &qb);
            }
            // make the denominator monic
            if let Some((_, lead)) = self.den.leading() {
                if !lead.is_one() {
                    let inv = lead.clone().recip();
                    self.num = self.num.scale(&inv);
                    self.den = self.den.scale(&inv);
                }
            }
            if self.den == LaurentPoly::one() {
                return;
            }
        } else {
            // multivariate: integer-primitive positive-leading denominator
            if let Some(content) = self.den.content() {
                if !content.is_one() && !content.is_zero() {
                    let inv = content.recip();
                    self.num = self.num.scale(&inv);
                    self.den = self.den.scale(&inv);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Scalar::new(self.num.add(&other.num), self.den.clone());
        }
        Scalar::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        Scalar::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self, String> {
        if other.is_zero() {
            return Err("division by zero scalar".into());
        }
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        Scalar::try_new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn recip(&self) -> Result<Self, String> {
        if self.is_zero() {
            return Err("inverse of zero scalar".into());
        }
        Scalar::try_new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, n: i64) -> Result<Self, String> {
        if n == 0 {
            return Ok(Scalar::one());
        }
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Group-like substitution: replace symbols by monomial images in both
    /// numerator and denominator. Errors if the denominator collapses to zero
    /// or if a quarter power would be required.
    pub fn substitute(&self, rule: &BTreeMap<SymbolId, SymMono>) -> Result<Self, String> {
        let num = self.num.substitute(rule)?;
        let den = self.den.substitute(rule)?;
        Scalar::try_new(num, den)
    }

    /// Split off a group-like symbol occurring as a pure monomial factor:
    /// returns `(doubled exponent, remainder)` with the remainder free of the
    /// symbol. Errors if the symbol enters non-monomially (e.g. `1/(1−B)`),
    /// which signals a structurally illegal contraction.
    pub fn extract_symbol_monomial(&self, sym: SymbolId) -> Result<(i64, Scalar), String> {
        fn uniform_exponent(p: &LaurentPoly, sym: SymbolId) -> Result<i64, String> {
            let mut exp: Option<i64> = None;
            for (m, _) in p.iter() {
                let e = m.exponent(sym);
                match exp {
                    None => exp = Some(e),
                    Some(prev) if prev != e => {
                        return Err(format!(
                            "symbol {sym} occurs non-monomially (mixed exponents {prev}/2 and {e}/2)"
                        ))
                    }
                    _ => {}
                }
            }
            Ok(exp.unwrap_or(0))
        }
        if self.is_zero() {
            return Ok((0, Scalar::zero()));
        }
        let en = uniform_exponent(&self.num, sym)?;
        let ed = uniform_exponent(&self.den, sym)?;
        let strip = SymMono::var(sym, -en);
        let strip_d = SymMono::var(sym, -ed);
        let num = self.num.mul_monomial(&Rational::one(), &strip);
        let den = self.den.mul_monomial(&Rational::one(), &strip_d);
        Ok((en - ed, Scalar { num, den }))
    }

    /// The set of distinct symbols in the fraction.
    pub fn symbols(&self) -> Vec<SymbolId> {
        let mut v = self.num.symbols();
        for s in self.den.symbols() {
            if !v.contains(&s) {
                v.push(s);
            }
        }
        v.sort();
        v
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    fn t(half2: i64) -> LaurentPoly {
        LaurentPoly::var_pow(SymbolId::T, half2)
    }

    #[test]
    fn common_factor_cancellation() {
        // (T² − 1)/(T − 1) → T + 1
        let num = t(4).sub(&LaurentPoly::one());
        let den = t(2).sub(&LaurentPoly::one());
        let s = Scalar::new(num, den);
        let expect = Scalar::from_poly(t(2).add(&LaurentPoly::one()));
        assert_eq!(s, expect);
        assert_eq!(s.denominator(), &LaurentPoly::one());
    }

    #[test]
    fn additive_inverse_of_reversed_denominator() {
        // 1/(1−T) + 1/(T−1) = 0
        let a = Scalar::new(LaurentPoly::one(), LaurentPoly::one().sub(&t(2)));
        let b = Scalar::new(LaurentPoly::one(), t(2).sub(&LaurentPoly::one()));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn laurent_normalization() {
        // T − 1 + T⁻¹ stays a polynomial numerator over denominator 1... but
        // dividing 1 by it gives denominator T² − T + 1 after clearing T⁻¹.
        let p = t(2).sub(&LaurentPoly::one()).add(&t(-2));
        let inv = Scalar::from_poly(p).recip().unwrap();
        // num = T, den = T² − T + 1
        let expect_den = t(4).sub(&t(2)).add(&LaurentPoly::one());
        assert_eq!(inv.denominator(), &expect_den);
        assert_eq!(inv.numerator(), &t(2));
    }

    #[test]
    fn substitution_monomial_images() {
        // B_2 ↦ T·A_2, applied to B_2^{1/2} → T^{1/2} A_2^{1/2}
        let b = Scalar::var_pow(SymbolId::B(2), 1);
        let mut rule = BTreeMap::new();
        rule.insert(
            SymbolId::B(2),
            SymMono::from_pairs([(SymbolId::T, 2), (SymbolId::CalA(2), 2)]),
        );
        let out = b.substitute(&rule).unwrap();
        let expect = Scalar::from_poly(LaurentPoly::monomial(
            rat(1),
            SymMono::from_pairs([(SymbolId::T, 1), (SymbolId::CalA(2), 1)]),
        ));
        assert_eq!(out, expect);
    }

    #[test]
    fn field_arithmetic_round_trip() {
        let a = Scalar::new(t(2).add(&LaurentPoly::constant(ratio(1, 3))), t(6).sub(&t(2)));
        let b = Scalar::new(t(-2).sub(&LaurentPoly::constant(rat(5))), t(2).add(&LaurentPoly::one()));
        let prod = a.mul(&b);
        let back = prod.div(&b).unwrap();
        assert_eq!(a, back);
        assert_eq!(a.sub(&a), Scalar::zero());
    }
}
