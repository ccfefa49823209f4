//! The two weight gradings on body monomials.
//!
//! Weight table (per generator; additive on products):
//!
//! |      | y | η  | t | τ  | a | α | x | ξ | ε  |
//! |------|---|----|---|----|---|---|---|---|----|
//! | wh   | 1 | −1 | 1 | −1 | 0 | 0 | 0 | 0 | 1  |
//! | wt   | 1 | 1  | 0 | 2  | 2 | 0 | 1 | 1 | −4 |
//!
//! The eliminated parameter ħ has wh = −1 (and wt 0; in the extended flavor
//! wt(ħ⁻¹) = 1), so the ħ-power needed to rebalance a monomial to wh = 0
//! equals its total wh. The scalar symbols B = e^{−ħt}, 𝒜 = e^{α} and T are
//! wh- and wt-neutral.

use super::bodyvar::{BodyMono, VarClass};

/// `(wt, wh)` of a single variable class.
pub fn class_weights(c: VarClass) -> (i64, i64) {
    match c {
        VarClass::Y => (1, 1),
        VarClass::Eta => (1, -1),
        VarClass::T => (0, 1),
        VarClass::Tau => (2, -1),
        VarClass::A => (2, 0),
        VarClass::Alpha => (0, 0),
        VarClass::X => (1, 0),
        VarClass::Xi => (1, 0),
    }
}

/// `(wt, wh)` of a body monomial sitting at ε-order `eps_order`.
pub fn monomial_weights(m: &BodyMono, eps_order: usize) -> (i64, i64) {
    let mut wt = -4 * eps_order as i64;
    let mut wh = eps_order as i64;
    for &(v, e) in m.iter() {
        let (t, h) = class_weights(v.class);
        wt += t * e as i64;
        wh += h * e as i64;
    }
    (wt, wh)
}

/// The ħ-power that restores wh = 0 for a monomial at the given ε-order.
/// Positive means a factor ħ^n was suppressed when ħ was set to 1.
pub fn hbar_power(m: &BodyMono, eps_order: usize) -> i64 {
    monomial_weights(m, eps_order).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symseries::bodyvar::{BodyMono, BodyVar, VarClass};

    fn v(c: VarClass, s: u32) -> BodyVar {
        BodyVar::new(c, s)
    }

    #[test]
    fn r_matrix_exponent_has_weight_two() {
        // y_i x_j: wt = 1 + 1 = 2, wh = 1 ⇒ one suppressed ħ
        let m = BodyMono::var(v(VarClass::Y, 1)).mul(&BodyMono::var(v(VarClass::X, 2)));
        assert_eq!(monomial_weights(&m, 0), (2, 1));
        assert_eq!(hbar_power(&m, 0), 1);
        // t_i a_j: wt = 0 + 2 = 2, wh = 1
        let m2 = BodyMono::var(v(VarClass::T, 1)).mul(&BodyMono::var(v(VarClass::A, 2)));
        assert_eq!(monomial_weights(&m2, 0), (2, 1));
    }

    #[test]
    fn empty_monomial_is_neutral() {
        assert_eq!(monomial_weights(&BodyMono::one(), 0), (0, 0));
    }

    #[test]
    fn faddeev_first_order_weights() {
        // ε·y²x² (one strand pair): wt = −4 + 2 + 2 = 0, wh = 1 + 2 ⇒ balanced
        // by ħ⁻¹·ħ⁴... the raw wh is 1 + 2·1 + 0 = 3, so three suppressed ħ.
        let m = BodyMono::var_pow(v(VarClass::Y, 1), 2).mul(&BodyMono::var_pow(v(VarClass::X, 2), 2));
        assert_eq!(monomial_weights(&m, 1), (0, 3));
    }
}
