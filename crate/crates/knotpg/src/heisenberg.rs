//! The Heisenberg-algebra backend: a two-generator warm-up invariant whose
//! value on a knot is the reciprocal Alexander polynomial up to a unit ±T^k.
//!
//! The algebra has generators `p, x` with `[p, x] = 1`; ordered monomials
//! `p^k x^ℓ` give a basis and every operation becomes a Gaussian generating
//! function. We reuse the engine's `y/η` classes for `p/π` and `x/ξ` for
//! `x/ξ`; no group-like symbols attach to these classes and no ε-perturbation
//! arises (κ = 0 throughout), so this module doubles as an independent
//! exerciser of the pure contraction machinery.

use crate::exact::{LaurentPoly, Scalar, Strand, SymbolId};
use crate::pgcalc::{compose, tensor, PGElem};
use crate::symseries::{BodyPoly, BodyVar, EpsSeries, VarClass};

fn pvar(s: Strand) -> BodyPoly {
    BodyPoly::var(BodyVar::new(VarClass::Y, s))
}

fn xvar(s: Strand) -> BodyPoly {
    BodyPoly::var(BodyVar::new(VarClass::X, s))
}

fn pivar(s: Strand) -> BodyPoly {
    BodyPoly::var(BodyVar::new(VarClass::Eta, s))
}

fn xivar(s: Strand) -> BodyPoly {
    BodyPoly::var(BodyVar::new(VarClass::Xi, s))
}

/// `T^{half2/2}` as a scalar.
pub fn t_pow(half2: i64) -> Scalar {
    Scalar::var_pow(SymbolId::T, half2)
}

/// The multiplication generating function `m^{ij}_k`:
/// `e^{(π_i+π_j)p_k + (ξ_i+ξ_j)x_k − ξ_i π_j}`.
pub fn heis_mul(i: Strand, j: Strand, k: Strand) -> PGElem {
    assert_ne!(i, j, "merge needs distinct input strands");
    let g = pivar(i)
        .add(&pivar(j))
        .mul(&pvar(k))
        .add(&xivar(i).add(&xivar(j)).mul(&xvar(k)))
        .sub(&xivar(i).mul(&pivar(j)));
    PGElem {
        domain: [i, j].into(),
        codomain: [k].into(),
        gauss: g,
        pert: EpsSeries::one(0),
    }
}

/// The crossing element `R^{±1}_{ij} = e^{(T^{±1}−1)(p_i−p_j)x_j}` with `i`
/// the over-strand.
pub fn heis_r(i: Strand, j: Strand, positive: bool) -> PGElem {
    assert_ne!(i, j, "crossing needs distinct strands");
    let c = t_pow(if positive { 2 } else { -2 }).sub(&Scalar::one());
    let g = pvar(i).sub(&pvar(j)).mul(&xvar(j)).scale(&c);
    PGElem {
        domain: [].into(),
        codomain: [i, j].into(),
        gauss: g,
        pert: EpsSeries::one(0),
    }
}

/// One step of a crossings-and-merges program.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HeisOp {
    /// Positive crossing on fresh strands `(over, under)`.
    X(Strand, Strand),
    /// Negative crossing on fresh strands `(over, under)`.
    XBar(Strand, Strand),
    /// A trivial (unknotted, uncrossed) strand.
    One(Strand),
    /// Merge strand `i` followed by strand `j` into strand `k`.
    M(Strand, Strand, Strand),
}

/// Evaluate a crossings-and-merges program left to right. Crossings and
/// trivial strands enter by disjoint union; merges contract.
pub fn heis_evaluate(program: &[HeisOp]) -> Result<PGElem, String> {
    let mut state = PGElem::scalar_one(0);
    for op in program {
        state = match *op {
            HeisOp::X(i, j) => tensor(&state, &heis_r(i, j, true))?,
            HeisOp::XBar(i, j) => tensor(&state, &heis_r(i, j, false))?,
            HeisOp::One(i) => tensor(&state, &PGElem::unit(i, 0))?,
            HeisOp::M(i, j, k) => compose(&state, &heis_mul(i, j, k))?,
        };
    }
    Ok(state)
}

/// The writhe of a program (signed crossing count).
pub fn writhe(program: &[HeisOp]) -> i64 {
    program
        .iter()
        .map(|op| match op {
            HeisOp::X(_, _) => 1,
            HeisOp::XBar(_, _) => -1,
            _ => 0,
        })
        .sum()
}

/// Extract the scalar value of a fully merged knot program (codomain of at
/// most one strand whose Gaussian exponent and variable content vanished).
pub fn heis_value(elem: &PGElem) -> Result<Scalar, String> {
    if !elem.domain.is_empty() {
        return Err("program value has open inputs".into());
    }
    if !elem.gauss.is_zero() {
        return Err(format!("program value has residual exponent {}", elem.gauss));
    }
    let p = &elem.pert.coeffs[0];
    if p.vars().is_empty() {
        Ok(p.constant_term())
    } else {
        Err(format!("program value is not scalar: {p}"))
    }
}

/// Test whether two scalars agree up to a unit `±T^{k/2}`; returns the unit
/// `u` with `a = u·b` when they do.
pub fn unit_ratio(a: &Scalar, b: &Scalar) -> Option<Scalar> {
    let q = a.div(b).ok()?;
    let (num, den) = (q.numerator(), q.denominator());
    if den != &LaurentPoly::one() || num.num_terms() != 1 {
        return None;
    }
    let (m, c) = num.leading().unwrap();
    let ok = c.denom() == &num::BigInt::from(1)
        && (c.numer() == &num::BigInt::from(1) || c.numer() == &num::BigInt::from(-1))
        && m.symbols().all(|s| s == SymbolId::T);
    ok.then(|| q.clone())
}

/// The two-strand braid generators as a program fragment: the `n`-crossing
/// positive 2-braid of the paper-style trefoil build, closed into a knot.
/// Returns the crossings-and-merges program for the torus knot T(2,n) as a
/// long knot on strand 0 (n odd).
pub fn twist_knot_program(n: u32) -> Vec<HeisOp> {
    // The 2-strand positive braid with n crossings, strands a and b:
    // start from the explicit 2-crossing braid X₁₂X₃₄ // m^{23}_a // m^{14}_b,
    // then stack one crossing at a time below via X₁₂ // m^{1a}_a // m^{2b}_b,
    // and finally close the braid with m^{ab}_0.
    assert!(n >= 3 && n % 2 == 1, "odd crossing number ≥ 3");
    let (a, b) = (90, 91);
    let mut prog = vec![
        HeisOp::X(1, 2),
        HeisOp::X(3, 4),
        HeisOp::M(2, 3, a),
        HeisOp::M(1, 4, b),
    ];
    for _ in 2..n {
        prog.push(HeisOp::X(1, 2));
        prog.push(HeisOp::M(1, a, a));
        prog.push(HeisOp::M(2, b, b));
    }
    prog.push(HeisOp::M(a, b, 0));
    prog
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn coeff_t(positive: bool) -> Scalar {
        t_pow(if positive { 2 } else { -2 }).sub(&Scalar::one())
    }

    #[test]
    fn multiplication_is_associative() {
        // m¹²_k // m^{k3}_ℓ = m²³_k // m^{1k}_ℓ
        let lhs = compose(&heis_mul(1, 2, 7), &heis_mul(7, 3, 9)).unwrap();
        let rhs = compose(&heis_mul(2, 3, 7), &heis_mul(1, 7, 9)).unwrap();
        assert!(lhs.pg_equal(&rhs));
        // and the closed form e^{(π₁+π₂+π₃)p_ℓ+(ξ₁+ξ₂+ξ₃)x_ℓ−ξ₁π₂−(ξ₁+ξ₂)π₃}
        let expect = pivar(1)
            .add(&pivar(2))
            .add(&pivar(3))
            .mul(&pvar(9))
            .add(&xivar(1).add(&xivar(2)).add(&xivar(3)).mul(&xvar(9)))
            .sub(&xivar(1).mul(&pivar(2)))
            .sub(&xivar(1).add(&xivar(2)).mul(&pivar(3)));
        assert_eq!(lhs.gauss, expect);
        assert!(lhs.pert.is_one());
    }

    #[test]
    fn two_r_matrices_merge_to_f() {
        // R_{a1}R_{b2} // m^{ab}_i = e^{(T−1)((p_i−p_1)x_1+(p_i−p_2)x_2)}
        let (a, b, i) = (10, 11, 12);
        let d = tensor(&heis_r(a, 1, true), &heis_r(b, 2, true)).unwrap();
        let f = compose(&d, &heis_mul(a, b, i)).unwrap();
        let expect = pvar(i)
            .sub(&pvar(1))
            .mul(&xvar(1))
            .add(&pvar(i).sub(&pvar(2)).mul(&xvar(2)))
            .scale(&coeff_t(true));
        assert_eq!(f.gauss, expect);
        assert!(f.pert.is_one());
    }

    #[test]
    fn reidemeister_one_defect() {
        // R₁₂ // m²¹_0 = 1/T
        let z = compose(&heis_r(1, 2, true), &heis_mul(2, 1, 0)).unwrap();
        assert_eq!(heis_value(&z).unwrap(), t_pow(-2));
        // and the negative crossing gives T
        let z = compose(&heis_r(1, 2, false), &heis_mul(2, 1, 0)).unwrap();
        assert_eq!(heis_value(&z).unwrap(), t_pow(2));
    }

    #[test]
    fn reidemeister_two() {
        // A crossing followed by its inverse cancels: in R₁₂·R̄₃₄ the strand
        // that goes over first continues under, giving the strands 1∘3 and
        // 2∘4; the merged value is the trivial two-strand element.
        let d = tensor(&heis_r(1, 2, true), &heis_r(3, 4, false)).unwrap();
        let z = compose(
            &compose(&d, &heis_mul(1, 3, 8)).unwrap(),
            &heis_mul(2, 4, 9),
        )
        .unwrap();
        assert!(z.gauss.is_zero(), "residual exponent {}", z.gauss);
        assert!(z.pert.is_one());
    }

    #[test]
    fn reidemeister_three() {
        // F_{i12}·R₃₄ // m^{13}_j // m^{24}_k = F_{i12}·R₃₄ // m^{32}_j // m^{41}_k
        let (a, b, i) = (10, 11, 12);
        let f = compose(
            &tensor(&heis_r(a, 1, true), &heis_r(b, 2, true)).unwrap(),
            &heis_mul(a, b, i),
        )
        .unwrap();
        let fr = tensor(&f, &heis_r(3, 4, true)).unwrap();
        let lhs = compose(
            &compose(&fr, &heis_mul(1, 3, 20)).unwrap(),
            &heis_mul(2, 4, 21),
        )
        .unwrap();
        let rhs = compose(
            &compose(&fr, &heis_mul(3, 2, 20)).unwrap(),
            &heis_mul(4, 1, 21),
        )
        .unwrap();
        assert!(lhs.pg_equal(&rhs));
    }

    #[test]
    fn two_crossing_braid_closed_form() {
        // The two-crossing positive 2-braid R₁₂R₃₄ // m^{23}_i // m^{14}_j is
        // again a pure Gaussian: e^{(T−1)(p_j−p_i)(x_i−Tx_j)}, where i is the
        // strand ending on an over-pass.
        let (i, j) = (90, 91);
        let d = tensor(&heis_r(1, 2, true), &heis_r(3, 4, true)).unwrap();
        let d2 = compose(
            &compose(&d, &heis_mul(2, 3, i)).unwrap(),
            &heis_mul(1, 4, j),
        )
        .unwrap();
        let expect = pvar(j)
            .sub(&pvar(i))
            .mul(&xvar(i).sub(&xvar(j).scale(&t_pow(2))))
            .scale(&coeff_t(true));
        assert_eq!(d2.gauss, expect);
        assert!(d2.pert.is_one());
    }

    #[test]
    fn trefoil_value() {
        // The positive trefoil evaluates to exactly 1/(1−T+T²).
        let z = heis_evaluate(&twist_knot_program(3)).unwrap();
        let v = heis_value(&z).unwrap();
        let den = Scalar::from_poly(
            LaurentPoly::one()
                .sub(&LaurentPoly::var_pow(SymbolId::T, 2))
                .add(&LaurentPoly::var_pow(SymbolId::T, 4)),
        );
        assert_eq!(v, Scalar::one().div(&den).unwrap());
    }

    #[test]
    fn unknot_value() {
        let z = heis_evaluate(&[HeisOp::One(0)]).unwrap();
        assert_eq!(heis_value(&z).unwrap(), Scalar::one());
    }

    #[test]
    fn unit_ratio_detects_units() {
        let x = Scalar::from_poly(LaurentPoly::var_pow(SymbolId::T, 2).add(&LaurentPoly::one()));
        let y = x.mul(&t_pow(-6)).neg();
        let u = unit_ratio(&x, &y).unwrap();
        assert_eq!(u, t_pow(6).neg());
        assert!(unit_ratio(&x, &x.add(&Scalar::one())).is_none());
    }
}
