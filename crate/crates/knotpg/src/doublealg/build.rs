//! Closed-form structural elements of the double.
//!
//! These are the pieces the paper-level calculus gives in explicit
//! exponential form: the two half multiplications, the universal R-matrix
//! with its deformed-exponential perturbation, the spinner `C^{±1}`, the
//! group-like `AB`, and the central element `w`. Everything else (the
//! inverse R-matrix, the pairing, coproducts, antipodes and the assembled
//! double operations) is derived from these by composition or by the
//! order-by-order solvers in [`super::solve`].
//!
//! Conventions, fixed once here and relied on everywhere:
//! - ħ = 1 throughout;
//! - the group-like generator of the `𝔹` half is stored via the central
//!   split `b = t + εa`, so an exponent written in `b` contributes its
//!   `t`-part to the Gaussian (or the `B` symbol) and its `εa`-part to the
//!   perturbation;
//! - the symbol `B(s)` is `e^{−t_s}` and `𝒜(s)` is `e^{α_s}`, both stored
//!   with doubled (half-integer-capable) exponents.

use crate::exact::qseries::deformed_exp_log_coefficient;
use crate::exact::{factorial, rat, Scalar, Strand, SymbolId};
use crate::pgcalc::PGElem;
use crate::symseries::{BodyMono, BodyPoly, BodyVar, EpsSeries, VarClass};
use std::collections::BTreeSet;

/// The body variable `class_s` as a polynomial.
pub(crate) fn v(class: VarClass, s: Strand) -> BodyPoly {
    BodyPoly::var(BodyVar::new(class, s))
}

/// The quadratic monomial `class1_s1 · class2_s2`.
pub(crate) fn q2(c1: VarClass, s1: Strand, c2: VarClass, s2: Strand) -> BodyPoly {
    v(c1, s1).mul(&v(c2, s2))
}

/// Multiplication in the `𝔹` half, `(i,j) → k`:
/// `exp((τ_i+τ_j)b_k + (η_i + e^{−ετ_i}η_j)y_k)` with `b_k = t_k + εa_k`
/// and the deformation factor expanded to order κ. The twist on `η_j`
/// records the reordering of the first factor's group-likes past the
/// second factor's `y`-content.
pub fn build_mb(i: Strand, j: Strand, k: Strand, kappa: usize) -> Result<PGElem, String> {
    let mut log = EpsSeries::zero(kappa);
    log.coeffs[0] = q2(VarClass::Tau, i, VarClass::T, k)
        .add(&q2(VarClass::Tau, j, VarClass::T, k))
        .add(&q2(VarClass::Eta, i, VarClass::Y, k))
        .add(&q2(VarClass::Eta, j, VarClass::Y, k));
    if kappa >= 1 {
        log.coeffs[1] = q2(VarClass::Tau, i, VarClass::A, k).add(&q2(VarClass::Tau, j, VarClass::A, k));
    }
    let eta_y = q2(VarClass::Eta, j, VarClass::Y, k);
    for m in 1..=kappa {
        // the ε^m term of (e^{−ετ_i} − 1)η_j y_k
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let term = v(VarClass::Tau, i)
            .pow(m as u32)
            .mul(&eta_y)
            .scale_rat(&(rat(sign) / factorial(m as u32)));
        log.coeffs[m] = log.coeffs[m].add(&term);
    }
    PGElem::from_exponent([i, j], [k], &log)
}

/// Multiplication in the `𝔸` half, `(i,j) → k`:
/// `exp((α_i+α_j)a_k + (𝒜_j^{−1}ξ_i + ξ_j)x_k)`, exact at every order.
pub fn build_ma(i: Strand, j: Strand, k: Strand, kappa: usize) -> PGElem {
    let mut g = q2(VarClass::Alpha, i, VarClass::A, k)
        .add(&q2(VarClass::Alpha, j, VarClass::A, k))
        .add(&q2(VarClass::Xi, j, VarClass::X, k));
    g.add_term(
        BodyMono::from_pairs([
            (BodyVar::new(VarClass::Xi, i), 1),
            (BodyVar::new(VarClass::X, k), 1),
        ]),
        Scalar::var_pow(SymbolId::CalA(j), -2),
    );
    PGElem {
        domain: BTreeSet::from([i, j]),
        codomain: BTreeSet::from([k]),
        gauss: g,
        pert: EpsSeries::one(kappa),
    }
}

/// The universal R-matrix on codomain strands `(i,j)`:
/// `exp(b_i a_j + y_i x_j + Σ_{n≥2} c_n(ε)(y_i x_j)^n)` where `c_n` is the
/// deformed-exponential logarithm coefficient `(1−q)^n/((1−q^n)n)`, `q=e^ε`.
pub fn build_r(i: Strand, j: Strand, kappa: usize) -> Result<PGElem, String> {
    let mut log = EpsSeries::zero(kappa);
    let yx = q2(VarClass::Y, i, VarClass::X, j);
    log.coeffs[0] = q2(VarClass::T, i, VarClass::A, j).add(&yx);
    if kappa >= 1 {
        // the εa_i-part of b_i a_j
        log.coeffs[1] = q2(VarClass::A, i, VarClass::A, j);
    }
    // each c_n has ε-valuation n−1, so orders up to κ need n ≤ κ+1
    for n in 2..=(kappa + 1) {
        let c = deformed_exp_log_coefficient(n, kappa);
        let p = yx.pow(n as u32);
        for m in 0..=kappa {
            if !c.coeffs[m].eq(&rat(0)) {
                log.coeffs[m] = log.coeffs[m].add(&p.scale_rat(&c.coeffs[m]));
            }
        }
    }
    PGElem::from_exponent([], [i, j], &log)
}

/// The spinner `C_i = (AB)^{1/2} = e^{−t_i/2 − εa_i}` (`invert` gives
/// `C_i^{−1}`). The `t`-half-power is carried by the symbol `B(i)^{1/2}`.
pub fn build_c(i: Strand, kappa: usize, invert: bool) -> Result<PGElem, String> {
    let sign = if invert { 1 } else { -1 };
    let mut log = EpsSeries::zero(kappa);
    log.coeffs[0] = v(VarClass::T, i).scale_rat(&(rat(sign) / rat(2)));
    if kappa >= 1 {
        log.coeffs[1] = v(VarClass::A, i).scale_rat(&rat(sign));
    }
    PGElem::from_exponent([], [i], &log)
}

/// The group-like element `AB = e^{−t_i − 2εa_i}` on strand `i`.
pub fn build_ab(i: Strand, kappa: usize) -> Result<PGElem, String> {
    let mut log = EpsSeries::zero(kappa);
    log.coeffs[0] = v(VarClass::T, i).neg();
    if kappa >= 1 {
        log.coeffs[1] = v(VarClass::A, i).scale_rat(&rat(-2));
    }
    PGElem::from_exponent([], [i], &log)
}

/// The counit as a morphism: `{i} → ∅` with trivial kernel.
pub fn build_counit(i: Strand, kappa: usize) -> PGElem {
    PGElem {
        domain: BTreeSet::from([i]),
        codomain: BTreeSet::new(),
        gauss: BodyPoly::zero(),
        pert: EpsSeries::one(kappa),
    }
}

/// A single algebra element on strand `i` given by an ordered polynomial
/// `p` in the strand's Latin variables.
pub fn poly_element(i: Strand, p: BodyPoly, kappa: usize) -> PGElem {
    PGElem {
        domain: BTreeSet::new(),
        codomain: BTreeSet::from([i]),
        gauss: BodyPoly::zero(),
        pert: EpsSeries::from_poly(p, kappa),
    }
}

/// The central element
/// `w = y e^{εa} x + (q e^{εa} + e^{−εa}T − ½(1+T)(q+1)) / (q−1)`
/// on strand `i`, with `q = e^ε` and `T` the symbol `B(i)`. The numerator
/// of the scalar part has ε-valuation 1, so the quotient is a genuine
/// ε-series; at ε = 0 it degenerates to `yx + (a+½)(1−T)`.
pub fn build_w(i: Strand, kappa: usize) -> Result<PGElem, String> {
    let kk = kappa + 1;
    let b_sym = Scalar::var_pow(SymbolId::B(i), 2);
    let a = v(VarClass::A, i);
    let a_plus_1 = a.add(&BodyPoly::one());
    let one_plus_b = Scalar::one().add(&b_sym);
    // numerator q e^{εa} + e^{−εa}B − ½(1+B)(q+1), one order higher
    let mut num = EpsSeries::zero(kk);
    for m in 0..=kk {
        let inv_fact = rat(1) / factorial(m as u32);
        let mut c = a_plus_1.pow(m as u32).scale_rat(&inv_fact);
        c = c.add(&a.neg().pow(m as u32).scale_rat(&inv_fact).scale(&b_sym));
        let q_plus_1 = if m == 0 { rat(2) } else { inv_fact.clone() };
        c = c.sub(&BodyPoly::constant(one_plus_b.clone()).scale_rat(&(q_plus_1 / rat(2))));
        num.coeffs[m] = c;
    }
    if !num.coeffs[0].is_zero() {
        return Err("central element numerator does not vanish at ε = 0".into());
    }
    // divide by q − 1 = ε · Σ ε^m/(m+1)!
    let mut shifted = EpsSeries::zero(kappa);
    let mut unit = EpsSeries::zero(kappa);
    for m in 0..=kappa {
        shifted.coeffs[m] = num.coeffs[m + 1].clone();
        unit.coeffs[m] =
            BodyPoly::constant(Scalar::from_rational(rat(1) / factorial(m as u32 + 1)));
    }
    let scalar_part = shifted.mul(&unit.inverse()?);
    // y e^{εa} x ordered as y a^m x
    let yx = q2(VarClass::Y, i, VarClass::X, i);
    let mut pert = EpsSeries::zero(kappa);
    for m in 0..=kappa {
        pert.coeffs[m] = yx
            .mul(&a.pow(m as u32))
            .scale_rat(&(rat(1) / factorial(m as u32)));
    }
    Ok(PGElem {
        domain: BTreeSet::new(),
        codomain: BTreeSet::from([i]),
        gauss: BodyPoly::zero(),
        pert: pert.add(&scalar_part),
    })
}
