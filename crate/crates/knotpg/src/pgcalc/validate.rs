//! Structural validation of perturbed-Gaussian elements.

use super::pgelem::PGElem;
use crate::exact::{Scalar, SymbolId};
use crate::symseries::grading::hbar_power;
use crate::symseries::{BodyPoly, VarClass};

/// The admissible scalar/grading regimes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    /// Rational-function scalars; ħ appears only to nonnegative powers.
    Rational,
    /// Laurent-polynomial scalars; ħ may appear to negative powers.
    Laurent,
    /// Laurent-polynomial scalars with only nonnegative ħ powers.
    LaurentNonNegative,
}

/// The unordered class pairs that may couple in a Gaussian exponent: the
/// group block `{τ,a}·{t,α}` and the `xy` block `{y,ξ}·{η,x}`.
fn allowed_coupling(a: VarClass, b: VarClass) -> bool {
    use VarClass::*;
    let group = |c: VarClass| matches!(c, Tau | A);
    let group_co = |c: VarClass| matches!(c, T | Alpha);
    let xy = |c: VarClass| matches!(c, Y | Xi);
    let xy_co = |c: VarClass| matches!(c, Eta | X);
    (group(a) && group_co(b))
        || (group(b) && group_co(a))
        || (xy(a) && xy_co(b))
        || (xy(b) && xy_co(a))
}

fn check_sides(elem: &PGElem, p: &BodyPoly, where_: &str) -> Result<(), String> {
    for (m, c) in p.iter() {
        for v in m.vars() {
            let ok = if v.class.is_greek() {
                elem.domain.contains(&v.strand)
            } else {
                elem.codomain.contains(&v.strand)
            };
            if !ok {
                return Err(format!("{where_}: variable {v} is on the wrong side"));
            }
        }
        for sym in c.symbols() {
            let ok = match sym {
                SymbolId::T => true,
                SymbolId::CalA(s) => elem.domain.contains(&s),
                SymbolId::B(s) => elem.codomain.contains(&s),
            };
            if !ok {
                return Err(format!("{where_}: symbol {sym} is on the wrong side"));
            }
        }
    }
    Ok(())
}

/// Check the structural invariants of an element under the given flavor:
/// sided variables and symbols, admissible Gaussian couplings, polynomial
/// scalars for the Laurent flavors, and nonnegative ħ-degree where required.
pub fn validate_pg_class(elem: &PGElem, flavor: Flavor) -> Result<(), String> {
    check_sides(elem, &elem.gauss, "Gaussian exponent")?;
    for (k, p) in elem.pert.coeffs.iter().enumerate() {
        check_sides(elem, p, &format!("perturbation order ε^{k}"))?;
    }

    for (m, _) in elem.gauss.iter() {
        if m.total_degree() != 2 {
            return Err(format!("Gaussian exponent term {m} is not quadratic"));
        }
        let classes: Vec<VarClass> = m
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat(v.class).take(e as usize))
            .collect();
        if !allowed_coupling(classes[0], classes[1]) {
            return Err(format!("Gaussian exponent term {m} couples incompatible classes"));
        }
    }

    let wants_polynomial = matches!(flavor, Flavor::Laurent | Flavor::LaurentNonNegative);
    let wants_nonneg_h = matches!(flavor, Flavor::Rational | Flavor::LaurentNonNegative);
    let scalar_ok = |c: &Scalar| !wants_polynomial || c.as_poly().is_some();
    for (k, p) in elem.pert.coeffs.iter().enumerate() {
        for (m, c) in p.iter() {
            if !scalar_ok(c) {
                return Err(format!(
                    "perturbation coefficient ({c}) of {m} at ε^{k} is not Laurent-polynomial"
                ));
            }
            if wants_nonneg_h && hbar_power(m, k) < 0 {
                return Err(format!(
                    "perturbation term {m} at ε^{k} has negative ħ-degree {}",
                    hbar_power(m, k)
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symseries::{BodyVar, EpsSeries};
    use std::collections::BTreeSet;

    #[test]
    fn identity_is_valid_everywhere() {
        let id = PGElem::identity(0, 1, 1);
        for fl in [Flavor::Rational, Flavor::Laurent, Flavor::LaurentNonNegative] {
            validate_pg_class(&id, fl).unwrap();
        }
    }

    #[test]
    fn rejects_wrong_side_and_bad_coupling() {
        // η on a codomain-only strand
        let mut bad = PGElem::unit(0, 0);
        bad.pert = EpsSeries::from_poly(
            BodyPoly::var(BodyVar::new(VarClass::Eta, 0)),
            0,
        );
        assert!(validate_pg_class(&bad, Flavor::Rational).is_err());
        // y·t coupling is not an admissible block
        let mut bad2 = PGElem::unit(0, 0);
        bad2.domain = BTreeSet::new();
        bad2.gauss = BodyPoly::var(BodyVar::new(VarClass::Y, 0))
            .mul(&BodyPoly::var(BodyVar::new(VarClass::T, 0)));
        assert!(validate_pg_class(&bad2, Flavor::Rational).is_err());
    }

    #[test]
    fn hbar_degree_gate() {
        // η at ε⁰ has wh = −1: fine in the Laurent flavor, rejected otherwise.
        let mut e = PGElem::identity(0, 1, 0);
        e.pert = EpsSeries::from_poly(BodyPoly::var(BodyVar::new(VarClass::Eta, 0)), 0);
        assert!(validate_pg_class(&e, Flavor::Laurent).is_ok());
        assert!(validate_pg_class(&e, Flavor::Rational).is_err());
    }
}
