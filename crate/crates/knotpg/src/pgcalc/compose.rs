//! Composition and tensor product of perturbed-Gaussian morphisms.

use super::contract::contract_pair;
use super::pgelem::PGElem;
use crate::exact::{Strand, SymbolId};
use crate::symseries::VarClass;
use std::collections::{BTreeMap, BTreeSet};

/// Disjoint union of two morphisms (side-wise disjoint strand labels).
pub fn tensor(f: &PGElem, g: &PGElem) -> Result<PGElem, String> {
    if f.kappa() != g.kappa() {
        return Err("tensor of elements with different ε-truncation orders".into());
    }
    if f.domain.intersection(&g.domain).next().is_some()
        || f.codomain.intersection(&g.codomain).next().is_some()
    {
        return Err("tensor factors share a strand label".into());
    }
    Ok(PGElem {
        domain: f.domain.union(&g.domain).cloned().collect(),
        codomain: f.codomain.union(&g.codomain).cloned().collect(),
        gauss: f.gauss.add(&g.gauss),
        pert: f.pert.mul(&g.pert),
    })
}

/// Composition `f // g` (first `f`, then `g`): the strands shared between
/// `f`'s codomain and `g`'s domain are contracted away; unmatched strands on
/// either side pass through (implicit identities on both factors).
///
/// Contraction proceeds class by class — the group-like pairs `(t,τ)` and
/// `(a,α)` first, then the `xy`-block pairs — so that the group-like symbol
/// links are consumed before any couplings created by earlier steps reach the
/// `xy` block.
pub fn compose(f: &PGElem, g: &PGElem) -> Result<PGElem, String> {
    if f.kappa() != g.kappa() {
        return Err("composition of elements with different ε-truncation orders".into());
    }
    let shared: BTreeSet<Strand> = f.codomain.intersection(&g.domain).cloned().collect();
    let open_inputs: BTreeSet<Strand> = g.domain.difference(&shared).cloned().collect();
    if open_inputs.intersection(&f.domain).next().is_some() {
        return Err("open input strand collides with an existing input label".into());
    }
    let pass_through: BTreeSet<Strand> = f.codomain.difference(&shared).cloned().collect();
    if pass_through.intersection(&g.codomain).next().is_some() {
        return Err("pass-through strand collides with an output strand label".into());
    }

    // Move the contracted strands to fresh internal labels so that equal
    // labels on the outer boundary (legal) cannot clash with them.
    let base = f.max_strand().unwrap_or(0).max(g.max_strand().unwrap_or(0)) + 1;
    let fresh: BTreeMap<Strand, Strand> = shared
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, base + i as Strand))
        .collect();
    let f2 = f.rename_sided(&BTreeMap::new(), &fresh);
    let g2 = g.rename_sided(&fresh, &BTreeMap::new());

    let mut gauss = f2.gauss.add(&g2.gauss);
    let mut pert = f2.pert.mul(&g2.pert);
    for class in [VarClass::T, VarClass::A, VarClass::Y, VarClass::X] {
        for &h in fresh.values() {
            let (ng, np) = contract_pair(&gauss, &pert, h, class)?;
            gauss = ng;
            pert = np;
        }
    }

    // Nothing of the internal strands may survive.
    let leftover_var = |s: Strand| {
        gauss.vars().iter().any(|v| v.strand == s)
            || pert.vars().iter().any(|v| v.strand == s)
    };
    let scalar_mentions = |c: &crate::exact::Scalar, s: Strand| {
        c.symbols()
            .iter()
            .any(|sym| matches!(sym, SymbolId::CalA(t) | SymbolId::B(t) if *t == s))
    };
    let leftover_sym = |s: Strand| {
        gauss.iter().any(|(_, c)| scalar_mentions(c, s))
            || pert
                .coeffs
                .iter()
                .any(|p| p.iter().any(|(_, c)| scalar_mentions(c, s)))
    };
    for &h in fresh.values() {
        if leftover_var(h) || leftover_sym(h) {
            return Err("contracted strand survived composition".into());
        }
    }

    Ok(PGElem {
        domain: f.domain.union(&open_inputs).cloned().collect(),
        codomain: pass_through.union(&g.codomain).cloned().collect(),
        gauss,
        pert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        // id: 3 → 3 composed with id: 3 → 3 is id again.
        let id = PGElem::identity(3, 3, 2);
        let out = compose(&id, &id).unwrap();
        assert!(out.pg_equal(&id));
    }

    #[test]
    fn identity_relabels() {
        // id: 1 → 2 // id: 2 → 5 = id: 1 → 5.
        let a = PGElem::identity(1, 2, 1);
        let b = PGElem::identity(2, 5, 1);
        let out = compose(&a, &b).unwrap();
        assert!(out.pg_equal(&PGElem::identity(1, 5, 1)));
    }

    #[test]
    fn unit_through_identity() {
        let u = PGElem::unit(4, 1);
        let id = PGElem::identity(4, 9, 1);
        let out = compose(&u, &id).unwrap();
        assert!(out.pg_equal(&PGElem::unit(9, 1)));
    }

    #[test]
    fn tensor_then_partial_composition() {
        // (id: 1→3 ⊗ id: 2→4) // (id: 3→1 ⊗ id: 4→2) = id⊗id on {1,2}.
        let lhs = tensor(&PGElem::identity(1, 3, 0), &PGElem::identity(2, 4, 0)).unwrap();
        let rhs = tensor(&PGElem::identity(3, 1, 0), &PGElem::identity(4, 2, 0)).unwrap();
        let out = compose(&lhs, &rhs).unwrap();
        let expect = tensor(&PGElem::identity(1, 1, 0), &PGElem::identity(2, 2, 0)).unwrap();
        assert!(out.pg_equal(&expect));
    }
}
