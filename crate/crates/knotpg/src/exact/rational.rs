//! Arbitrary-precision rational numbers.
//!
//! Thin convenience layer over `num::BigRational`; all arithmetic in the
//! engine is exact.

use num::bigint::BigInt;
pub use num::rational::BigRational as Rational;
use num::traits::{One, Zero};

/// The rational number `n/1`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational number `n/d` (reduced). Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a rational number.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// `base^exp` for integer `exp` (negative exponents invert; 0^negative panics).
pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    if base.is_zero() {
        assert!(exp > 0, "0 raised to a negative power");
        return Rational::zero();
    }
    let mag = base.pow(i32::try_from(exp.unsigned_abs()).expect("exponent too large"));
    if exp < 0 {
        mag.recip()
    } else {
        mag
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow_i(&ratio(2, 3), -2), ratio(9, 4));
        assert_eq!(pow_i(&rat(7), 0), rat(1));
    }
}
