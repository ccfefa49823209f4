//! ε-truncated power series with polynomial coefficients.

use super::super::exact::{factorial, QSeries, Rational, Scalar};
use super::bodypoly::BodyPoly;
use super::bodyvar::BodyVar;
use std::fmt;

/// `coeffs[k]` is the coefficient of ε^k; the vector always has length κ+1
/// and arithmetic discards orders above κ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsSeries {
    pub coeffs: Vec<BodyPoly>,
}

impl EpsSeries {
    pub fn zero(kappa: usize) -> Self {
        EpsSeries { coeffs: vec![BodyPoly::zero(); kappa + 1] }
    }

    pub fn one(kappa: usize) -> Self {
        EpsSeries::from_poly(BodyPoly::one(), kappa)
    }

    pub fn from_poly(p: BodyPoly, kappa: usize) -> Self {
        let mut s = EpsSeries::zero(kappa);
        s.coeffs[0] = p;
        s
    }

    pub fn from_qseries(q: &QSeries, kappa: usize) -> Self {
        let mut s = EpsSeries::zero(kappa);
        for (k, c) in q.coeffs.iter().take(kappa + 1).enumerate() {
            s.coeffs[k] = BodyPoly::constant(Scalar::from_rational(c.clone()));
        }
        s
    }

    pub fn kappa(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|p| p.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == BodyPoly::one() && self.coeffs[1..].iter().all(|p| p.is_zero())
    }

    fn check_kappa(&self, other: &Self) {
        assert_eq!(
            self.kappa(),
            other.kappa(),
            "ε-series truncation orders differ"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_kappa(other);
        EpsSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        EpsSeries { coeffs: self.coeffs.iter().map(|p| p.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product truncated at κ.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_kappa(other);
        let k = self.kappa();
        let mut out = EpsSeries::zero(k);
        for i in 0..=k {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(k - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        EpsSeries { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        EpsSeries { coeffs: self.coeffs.iter().map(|p| p.scale_rat(c)).collect() }
    }

    /// Multiply by ε^k (shifting up, discarding overflow).
    pub fn shift_eps(&self, k: usize) -> Self {
        let kap = self.kappa();
        let mut out = EpsSeries::zero(kap);
        for i in 0..=kap {
            if i + k <= kap {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// `exp` of a series whose ε⁰ part vanishes (otherwise the exponential
    /// would not truncate); exact to order κ.
    pub fn exp(&self) -> Result<Self, String> {
        if !self.coeffs[0].is_zero() {
            return Err("exp of an ε-series with nonzero constant order".into());
        }
        let k = self.kappa();
        let mut out = EpsSeries::one(k);
        let mut power = EpsSeries::one(k);
        for n in 1..=k {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            out = out.add(&power.scale_rat(&factorial(n as u32).recip()));
        }
        Ok(out)
    }

    /// Multiplicative inverse when the ε⁰ part is the constant 1 — the only
    /// case the engine needs (perturbations are 1 + O(ε)).
    pub fn inverse(&self) -> Result<Self, String> {
        if self.coeffs[0] != BodyPoly::one() {
            return Err("inverse of an ε-series whose constant order is not 1".into());
        }
        let k = self.kappa();
        // (1 + u)⁻¹ = Σ (−u)^n with u = self − 1, u = O(ε)
        let u = self.sub(&EpsSeries::one(k));
        let mut out = EpsSeries::one(k);
        let mut power = EpsSeries::one(k);
        for _ in 1..=k {
            power = power.mul(&u).neg();
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }

    /// `log` of a series with constant ε⁰ part 1; exact to order κ.
    pub fn log(&self) -> Result<Self, String> {
        if self.coeffs[0] != BodyPoly::one() {
            return Err("log of an ε-series whose constant order is not 1".into());
        }
        let k = self.kappa();
        let u = self.sub(&EpsSeries::one(k));
        let mut out = EpsSeries::zero(k);
        let mut power = EpsSeries::one(k);
        for n in 1..=k {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if n % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale_rat(&crate::exact::ratio(sign, n as i64)));
        }
        Ok(out)
    }

    /// Change the truncation order (raising pads with zeros; lowering drops).
    pub fn with_kappa(&self, kappa: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(kappa + 1, BodyPoly::zero());
        coeffs.truncate(kappa + 1);
        EpsSeries { coeffs }
    }

    pub fn substitute_var(&self, v: BodyVar, image: &BodyPoly) -> Self {
        EpsSeries {
            coeffs: self.coeffs.iter().map(|p| p.substitute_var(v, image)).collect(),
        }
    }

    pub fn map_polys<F: Fn(&BodyPoly) -> Result<BodyPoly, String>>(
        &self,
        f: F,
    ) -> Result<Self, String> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for p in &self.coeffs {
            coeffs.push(f(p)?);
        }
        Ok(EpsSeries { coeffs })
    }

    pub fn vars(&self) -> Vec<BodyVar> {
        let mut out: Vec<BodyVar> = Vec::new();
        for p in &self.coeffs {
            for v in p.vars() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for EpsSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{p}")?;
            } else if k == 1 {
                write!(f, "eps*[{p}]")?;
            } else {
                write!(f, "eps^{k}*[{p}]")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symseries::bodyvar::{BodyVar, VarClass};

    #[test]
    fn truncation_kills_high_orders() {
        // (1 + εP)(1 − εP) = 1 at κ = 1
        let p = BodyPoly::var(BodyVar::new(VarClass::Y, 0));
        let mut a = EpsSeries::one(1);
        a.coeffs[1] = p.clone();
        let mut b = EpsSeries::one(1);
        b.coeffs[1] = p.neg();
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn unit_multiplication() {
        let p = BodyPoly::var(BodyVar::new(VarClass::X, 2));
        let mut s = EpsSeries::one(2);
        s.coeffs[2] = p;
        assert_eq!(EpsSeries::one(2).mul(&s), s);
    }

    #[test]
    fn exp_log_inverse_round_trip() {
        let p = BodyPoly::var(BodyVar::new(VarClass::A, 0));
        let mut arg = EpsSeries::zero(3);
        arg.coeffs[1] = p;
        let e = arg.exp().unwrap();
        assert_eq!(e.log().unwrap(), arg);
        assert!(e.mul(&e.inverse().unwrap()).is_one());
    }
}
