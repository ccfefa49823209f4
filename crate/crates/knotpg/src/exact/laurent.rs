//! Sparse Laurent polynomials with rational coefficients in the group-like
//! symbols, allowing half-integer exponents (stored doubled).

use super::rational::{pow_i, ratio, Rational};
use super::symbols::{SymMono, SymbolId};
use num::traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A sparse Laurent polynomial: monomial → nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<SymMono, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = LaurentPoly::zero();
        if !c.is_zero() {
            p.terms.insert(SymMono::one(), c);
        }
        p
    }

    /// The monomial `c · m`.
    pub fn monomial(c: Rational, m: SymMono) -> Self {
        let mut p = LaurentPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// A single symbol to a doubled power.
    pub fn var_pow(sym: SymbolId, half2: i64) -> Self {
        LaurentPoly::monomial(Rational::one(), SymMono::var(sym, half2))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SymMono, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &SymMono) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: SymMono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&m);
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
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Rational, m: &SymMono) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, v)| (t.mul(m), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The set of distinct symbols appearing in the polynomial.
    pub fn symbols(&self) -> Vec<SymbolId> {
        let mut v: Vec<SymbolId> = Vec::new();
        for m in self.terms.keys() {
            for s in m.symbols() {
                if !v.contains(&s) {
                    v.push(s);
                }
            }
        }
        v.sort();
        v
    }

    /// Rational content: gcd of the coefficients' numerators over lcm of the
    /// denominators, with the sign of the leading (largest-monomial) term.
    /// Returns `None` for the zero polynomial.
    pub fn content(&self) -> Option<Rational> {
        use num::bigint::BigInt;
        use num::Integer;
        if self.terms.is_empty() {
            return None;
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        // carry the leading coefficient's sign so dividing by the content
        // leaves a positive leading term
        let leading = self.terms.iter().next_back().unwrap().1;
        if leading.is_negative() {
            content = -content;
        }
        Some(content)
    }

    /// Leading (largest) monomial under the canonical monomial ordering.
    pub fn leading(&self) -> Option<(&SymMono, &Rational)> {
        self.terms.iter().next_back()
    }

    /// The common monomial factor of all terms (each symbol to its minimum
    /// exponent across terms, counting absence as exponent 0). `1` for the
    /// zero polynomial.
    pub fn common_monomial(&self) -> SymMono {
        let syms = self.symbols();
        let mut mins: BTreeMap<SymbolId, i64> = BTreeMap::new();
        for m in self.terms.keys() {
            for &s in &syms {
                let e = m.exponent(s);
                mins.entry(s).and_modify(|v| *v = (*v).min(e)).or_insert(e);
            }
        }
        SymMono::from_pairs(mins.into_iter().filter(|&(_, e)| e != 0))
    }

    /// Substitute symbols by monomial images (group-like substitution).
    /// Each image is a pure symbol monomial; half powers are taken exactly and
    /// an error is raised if a quarter power would be needed.
    pub fn substitute(&self, rule: &BTreeMap<SymbolId, SymMono>) -> Result<Self, String> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut nm = SymMono::one();
            for &(s, e) in m.iter() {
                match rule.get(&s) {
                    Some(img) => nm = nm.mul(&img.pow_half2(e)?),
                    None => nm = nm.mul(&SymMono::var(s, e)),
                }
            }
            out.add_term(nm, c.clone());
        }
        Ok(out)
    }

    /// Formal derivative with respect to a symbol's *whole* power
    /// (d/dS of `S^{e2/2}` is `(e2/2)·S^{e2/2 − 1}`).
    pub fn derivative(&self, sym: SymbolId) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let e2 = m.exponent(sym);
            if e2 == 0 {
                continue;
            }
            let nm = m.mul(&SymMono::var(sym, -2));
            out.add_term(nm, c * ratio(e2, 2));
        }
        out
    }

    /// Dense univariate view when at most one symbol occurs: returns
    /// `(symbol, minimum doubled exponent, coefficients)` where the
    /// coefficient vector steps by half powers of the symbol.
    /// Constants are reported with an arbitrary `None` symbol slot.
    pub fn as_univariate(&self) -> Option<(Option<SymbolId>, i64, Vec<Rational>)> {
        let syms = self.symbols();
        if syms.len() > 1 {
            return None;
        }
        if self.terms.is_empty() {
            return Some((syms.first().cloned(), 0, vec![]));
        }
        let sym = syms.first().cloned();
        let (mut lo, mut hi) = (i64::MAX, i64::MIN);
        for m in self.terms.keys() {
            let e = sym.map(|s| m.exponent(s)).unwrap_or(0);
            lo = lo.min(e);
            hi = hi.max(e);
        }
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (m, c) in &self.terms {
            let e = sym.map(|s| m.exponent(s)).unwrap_or(0);
            coeffs[(e - lo) as usize] = c.clone();
        }
        Some((sym, lo, coeffs))
    }

    /// Rebuild from a dense univariate view.
    pub fn from_univariate(sym: Option<SymbolId>, lo: i64, coeffs: &[Rational]) -> Self {
        let mut p = LaurentPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = lo + i as i64;
            let m = match sym {
                Some(s) if e != 0 => SymMono::var(s, e),
                _ => SymMono::one(),
            };
            p.add_term(m, c.clone());
        }
        p
    }

    /// Evaluate a univariate polynomial at a rational point, treating the
    /// symbol's *half* power as `value^{1/2}`; therefore requires all doubled
    /// exponents to be even (no genuine half powers). Errors otherwise.
    pub fn eval_univariate(&self, value: &Rational) -> Result<Rational, String> {
        let (_, lo, coeffs) = self
            .as_univariate()
            .ok_or("eval_univariate: more than one symbol present")?;
        let mut acc = Rational::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e2 = lo + i as i64;
            if e2 % 2 != 0 {
                return Err("eval_univariate: genuine half power present".into());
            }
            acc += c * pow_i(value, e2 / 2);
        }
        Ok(acc)
    }
}

/// Monic gcd of two dense univariate coefficient vectors (no Laurent offsets;
/// index 0 is the constant term). Zero polynomials are handled.
pub fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }
    fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let factor = &r[dr] / lb;
            if !factor.is_zero() {
                for i in 0..=db {
                    let idx = dr - db + i;
                    let delta = &factor * &b[i];
                    r[idx] -= delta;
                }
            }
            r = trim(r);
            if r.len() <= db {
                break;
            }
        }
        r
    }
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = trim(r);
    }
    if x.is_empty() {
        return x;
    }
    let lead = x.last().unwrap().clone();
    x.iter().map(|c| c / &lead).collect()
}

/// Exact division of dense univariate polynomials; panics if not divisible
/// (used only after a gcd computation, where divisibility is guaranteed).
pub fn dense_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let trim = |mut v: Vec<Rational>| {
        while v.last().is_some_and(|c: &Rational| c.is_zero()) {
            v.pop();
        }
        v
    };
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return vec![];
    }
    assert!(a.len() >= b.len(), "exact division with smaller dividend");
    let mut r = a.clone();
    let mut q = vec![Rational::zero(); a.len() - b.len() + 1];
    let db = b.len() - 1;
    let lb = &b[db];
    for qi in (0..q.len()).rev() {
        let idx = qi + db;
        if idx >= r.len() {
            continue;
        }
        let factor = &r[idx] / lb;
        q[qi] = factor.clone();
        if !factor.is_zero() {
            for i in 0..=db {
                let delta = &factor * &b[i];
                r[qi + i] -= delta;
            }
        }
    }
    assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    q
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                first = false;
                if m.is_one() {
                    write!(f, "{c}")?;
                } else if c.is_one() {
                    write!(f, "{m}")?;
                } else if *c == -Rational::one() {
                    write!(f, "-{m}")?;
                } else {
                    write!(f, "{c}*{m}")?;
                }
            } else {
                let (sign, mag) = if c.is_negative() {
                    ("-", -c.clone())
                } else {
                    ("+", c.clone())
                };
                if m.is_one() {
                    write!(f, " {sign} {mag}")?;
                } else if mag.is_one() {
                    write!(f, " {sign} {m}")?;
                } else {
                    write!(f, " {sign} {mag}*{m}")?;
                }
            }
        }
        Ok(())
    }
}
