//! Truncated power series in a single deformation parameter over ℚ.
//!
//! Used to expand scalar-valued deformation factors such as
//! `(1−q)ⁿ/((1−qⁿ)n)` with `q = e^{ε}` exactly to the working order.

use super::rational::{factorial, rat, Rational};
use num::traits::{One, Zero};

/// Coefficients `c[0] + c[1]ε + … + c[κ]ε^κ`; the vector always has length κ+1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    pub coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(kappa: usize) -> Self {
        QSeries { coeffs: vec![Rational::zero(); kappa + 1] }
    }

    pub fn constant(c: Rational, kappa: usize) -> Self {
        let mut s = QSeries::zero(kappa);
        s.coeffs[0] = c;
        s
    }

    pub fn one(kappa: usize) -> Self {
        QSeries::constant(Rational::one(), kappa)
    }

    /// The series ε itself (zero when κ = 0).
    pub fn eps(kappa: usize) -> Self {
        let mut s = QSeries::zero(kappa);
        if kappa >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// `e^{cε}` truncated.
    pub fn exp_linear(c: Rational, kappa: usize) -> Self {
        let mut s = QSeries::zero(kappa);
        for k in 0..=kappa {
            s.coeffs[k] = num::pow::pow(c.clone(), k) / factorial(k as u32);
        }
        s
    }

    pub fn kappa(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.kappa(), other.kappa());
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.kappa(), other.kappa());
        let k = self.kappa();
        let mut out = QSeries::zero(k);
        for i in 0..=k {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(k - i) {
                let prod = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] += prod;
            }
        }
        out
    }

    /// Division, allowing a common zero of finite order at ε = 0: both series
    /// are shifted down by the denominator's valuation. Errors if the
    /// numerator's valuation is smaller or the denominator is zero.
    ///
    /// Truncation caveat: shifting by the valuation `v` loses the top `v`
    /// coefficients, so callers needing order κ must supply inputs at order
    /// κ + v.
    pub fn div(&self, other: &Self) -> Result<Self, String> {
        assert_eq!(self.kappa(), other.kappa());
        let k = self.kappa();
        let v = other
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or("division by zero series")?;
        if self.coeffs.iter().take(v).any(|c| !c.is_zero()) {
            return Err("series division with a genuine pole".into());
        }
        let num: Vec<Rational> = self.coeffs[v..].to_vec();
        let den: Vec<Rational> = other.coeffs[v..].to_vec();
        let mut out = vec![Rational::zero(); k + 1 - v];
        for i in 0..out.len() {
            let mut acc = num[i].clone();
            for j in 0..i {
                acc -= &out[j] * &den[i - j];
            }
            out[i] = acc / &den[0];
        }
        out.resize(k + 1, Rational::zero());
        Ok(QSeries { coeffs: out })
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = QSeries::one(self.kappa());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }
}

/// `(1−q)ⁿ / ((1−qⁿ)·n)` with `q = e^{ε}`, truncated at order κ — the
/// coefficient of `zⁿ` in the logarithm of the deformed exponential.
/// The common `(1−q)` zero of order one is divided out exactly.
pub fn deformed_exp_log_coefficient(n: usize, kappa: usize) -> QSeries {
    assert!(n >= 2);
    // work one order higher so the valuation shift loses nothing
    let k = kappa + 1;
    let q = QSeries::exp_linear(Rational::one(), k);
    let one = QSeries::one(k);
    let num = one.sub(&q).pow(n);
    let qn = QSeries::exp_linear(rat(n as i64), k);
    let den = one.sub(&qn).scale(&rat(n as i64));
    let mut out = num.div(&den).expect("deformed exponential coefficient");
    out.coeffs.truncate(kappa + 1);
    QSeries { coeffs: out.coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    #[test]
    fn geometric_division() {
        // 1/(1−ε) = 1 + ε + ε² + …
        let k = 5;
        let one = QSeries::one(k);
        let den = one.sub(&QSeries::eps(k));
        let inv = one.div(&den).unwrap();
        assert!(inv.coeffs.iter().all(|c| c.is_one()));
    }

    #[test]
    fn faddeev_lowest_coefficient() {
        // n = 2 term: (1−q)²/(2(1−q²)) = −ε/4 + O(ε²): the coefficient of ε
        // is −1/4, matching the independently derived first-order value.
        let c = deformed_exp_log_coefficient(2, 3);
        assert!(c.coeffs[0].is_zero());
        assert_eq!(c.coeffs[1], ratio(-1, 4));
    }

    #[test]
    fn faddeev_n3_vanishes_to_second_order() {
        // n = 3 term has a double zero at ε = 0.
        let c = deformed_exp_log_coefficient(3, 4);
        assert!(c.coeffs[0].is_zero());
        assert!(c.coeffs[1].is_zero());
        assert!(!c.coeffs[2].is_zero());
    }
}
