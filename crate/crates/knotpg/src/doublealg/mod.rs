//! The Drinfel'd-double backend: structural elements, Hopf operations and
//! distinguished elements of the algebra 𝔻 = 𝔹 ⊗ 𝔸, all as perturbed
//! Gaussians truncated at a fixed ε-order κ.
//!
//! [`AlgebraContext::new`] builds everything once, in dependency order:
//!
//! 1. closed forms (`m_𝔹`, `m_𝔸`, `R`, `C^{±1}`, `AB`, `w`) from
//!    [`build`];
//! 2. implicitly-defined elements (`π`, `R⁻¹`, inverse antipodes, the
//!    ribbon element `v`) from the order-by-order solvers in [`solve`];
//! 3. the full-double operations (`m_𝔻`, `Δ_𝔻`, `S_𝔻`, `ε_𝔻`) by the
//!    composition chains that define the double, and the distinguished
//!    elements `u`, `v^{±1}` derived from them.
//!
//! Every solver re-verifies its defining equation before the context is
//! returned, and [`axioms::verify_axioms`] checks the complete ribbon-Hopf
//! axiom suite on a finished context. The context is immutable after
//! construction and safe to share between threads.
//!
//! Strand-label conventions: cached elements live on canonical labels
//! (inputs `1,2`, output `3` for products; input `1`, outputs `2,3` for
//! coproducts; strand `1` for single-strand elements) and the accessor
//! methods rename to caller labels.

pub mod axioms;
pub mod build;
pub mod solve;

pub use axioms::{verify_axioms, AxiomReport};

use crate::exact::Strand;
use crate::pgcalc::{compose, tensor, PGElem};
use crate::symseries::{BodyPoly, VarClass};
use std::collections::BTreeMap;

/// Build a strand-rename map from label pairs.
pub(crate) fn smap(pairs: &[(Strand, Strand)]) -> BTreeMap<Strand, Strand> {
    pairs.iter().cloned().collect()
}

/// All structural data of the double at a fixed truncation order. Fields
/// are public for inspection (and deliberate corruption in mutation
/// tests) but are treated as read-only by the rest of the crate.
#[derive(Clone, Debug)]
pub struct AlgebraContext {
    pub kappa: usize,
    /// `𝔹`-half multiplication, `({1,2},{3})`.
    pub m_b: PGElem,
    /// `𝔸`-half multiplication, `({1,2},{3})`.
    pub m_a: PGElem,
    /// Full double multiplication, `({1,2},{3})`.
    pub m_d: PGElem,
    /// Universal R-matrix `(∅,{1,2})`; strand 1 is the `𝔹`-leg.
    pub r: PGElem,
    /// Inverse R-matrix `(∅,{1,2})`.
    pub r_inv: PGElem,
    /// The half-pairing `({1,2},∅)`; strand 1 carries α/ξ, strand 2 τ/η.
    pub pairing: PGElem,
    /// Coproducts `({1},{2,3})` for the `𝔸`-half, `𝔹`-half and double.
    pub delta_a: PGElem,
    pub delta_b: PGElem,
    pub delta_d: PGElem,
    /// Antipodes and their inverses, `({1},{2})`.
    pub s_a: PGElem,
    pub s_b: PGElem,
    pub sbar_a: PGElem,
    pub sbar_b: PGElem,
    pub s_d: PGElem,
    pub sbar_d: PGElem,
    /// Counit of the double, `({1},∅)`.
    pub counit: PGElem,
    /// Spinner `C = (AB)^{1/2}` and its inverse, `(∅,{1})`.
    pub c: PGElem,
    pub c_inv: PGElem,
    /// The group-like `AB`, `(∅,{1})`.
    pub ab: PGElem,
    /// Drinfel'd element `u`, ribbon element `v` and its inverse, `(∅,{1})`.
    pub u: PGElem,
    pub v: PGElem,
    pub v_inv: PGElem,
    /// The central element `w`, `(∅,{1})`.
    pub w: PGElem,
}

impl AlgebraContext {
    /// Build the complete context at truncation order `kappa`. Fails (with
    /// the offending equation named) if any defining equation does not
    /// hold, so a successful build is itself a correctness certificate for
    /// the solver outputs.
    pub fn new(kappa: usize) -> Result<Self, String> {
        let m_b = build::build_mb(1, 2, 3, kappa)?;
        let m_a = build::build_ma(1, 2, 3, kappa);
        let r = build::build_r(1, 2, kappa)?;
        let pairing = solve::solve_pairing(kappa)?;
        let r_inv = solve::solve_r_inverse(kappa, &r)?;
        let none = smap(&[]);

        // antipodes of the halves: contract one R⁻¹-leg with the pairing
        let s_b = compose(
            &r_inv.rename_sided(&none, &smap(&[(1, 2), (2, 11)])),
            &pairing.rename_sided(&smap(&[(1, 11), (2, 1)]), &none),
        )?;
        let s_a = compose(
            &r_inv.rename_sided(&none, &smap(&[(1, 11)])),
            &pairing.rename_sided(&smap(&[(2, 11)]), &none),
        )?;
        let sbar_a = solve::invert_morphism(&s_a, gauss_seed(&s_a), None)?;
        let sbar_b = solve::invert_morphism(&s_b, gauss_seed(&s_b), Some(2))?;

        // coproducts: R-pair multiplied on one side, closed with the pairing
        let delta_a = {
            let t = tensor(
                &r.rename_sided(&none, &smap(&[(1, 11)])),
                &r.rename_sided(&none, &smap(&[(1, 12), (2, 3)])),
            )?;
            let t = compose(&t, &build::build_mb(11, 12, 13, kappa)?)?;
            compose(&t, &pairing.rename_sided(&smap(&[(2, 13)]), &none))?
        };
        let delta_b = {
            let t = tensor(
                &r.rename_sided(&none, &smap(&[(1, 3), (2, 11)])),
                &r.rename_sided(&none, &smap(&[(1, 2), (2, 12)])),
            )?;
            let t = compose(&t, &build::build_ma(12, 11, 13, kappa))?;
            compose(&t, &pairing.rename_sided(&smap(&[(1, 13), (2, 1)]), &none))?
        };

        // the double multiplication: split both inputs, cross the middle
        // legs through the pairing, and remerge
        let m_d = {
            let db3 = coproduct2(&delta_b, 21, 41, 42, 43)?;
            let da3 = coproduct2(&delta_a, 12, 44, 45, 46)?;
            let da3s = compose(&da3, &sbar_a.rename_sided(&smap(&[(1, 46)]), &smap(&[(2, 47)])))?;
            let mut big = tensor(&db3, &da3s)?;
            big = compose(&big, &pairing.rename_sided(&smap(&[(1, 47), (2, 41)]), &none))?;
            big = compose(&big, &pairing.rename_sided(&smap(&[(1, 44), (2, 43)]), &none))?;
            big = compose(
                &big,
                &m_b.rename_sided(&smap(&[(1, 11), (2, 42)]), &smap(&[(3, 31)])),
            )?;
            big = compose(
                &big,
                &m_a.rename_sided(&smap(&[(1, 45), (2, 22)]), &smap(&[(3, 32)])),
            )?;
            let merged = big.rename_sided(
                &smap(&[(11, 101), (12, 101), (21, 102), (22, 102)]),
                &smap(&[(31, 3), (32, 3)]),
            );
            if merged.domain != std::collections::BTreeSet::from([101, 102])
                || merged.codomain != std::collections::BTreeSet::from([3])
            {
                return Err("double multiplication: assembly produced wrong strand sets".into());
            }
            // realign the duals on the outer strands with the `b = t + εa`
            // coordinates: the raw kernel routes `t`-input through the
            // group-like channel (regenerating the `εa`-part of `b`) while
            // `a`-input flows through the `𝔸`-channel unchanged, so `t` must
            // be fed as `t − εa` to come out exact
            let fix = tensor(&coord_fix(1, 101, kappa)?, &coord_fix(2, 102, kappa)?)?;
            compose(&fix, &merged)?
        };

        // double coproduct: half coproducts remerged with a crossing
        let delta_d = {
            let db = delta_b.rename_sided(&smap(&[(1, 101)]), &smap(&[(2, 41), (3, 42)]));
            let da = delta_a.rename_sided(&smap(&[(1, 99)]), &smap(&[(2, 43), (3, 44)]));
            let t = tensor(&db, &da)?.rename_sided(&smap(&[(99, 101)]), &none);
            let t = compose(&t, &m_d.rename_sided(&smap(&[(1, 41), (2, 44)]), &smap(&[(3, 2)])))?;
            let raw = compose(&t, &m_d.rename_sided(&smap(&[(1, 42), (2, 43)]), &none))?;
            compose(&coord_fix(1, 101, kappa)?, &raw)?
        };

        // double antipode: 𝔸-image times 𝔹-image
        let s_d = {
            let t = tensor(
                &s_b.rename_sided(&smap(&[(1, 101)]), &smap(&[(2, 41)])),
                &sbar_a.rename_sided(&smap(&[(1, 99)]), &smap(&[(2, 42)])),
            )?
            .rename_sided(&smap(&[(99, 101)]), &none);
            let raw = compose(&t, &m_d.rename_sided(&smap(&[(1, 42), (2, 41)]), &smap(&[(3, 2)])))?;
            compose(&coord_fix(1, 101, kappa)?, &raw)?
        };
        let sbar_d = {
            // seed: the mirror assembly with the inverse half-antipodes
            let t = tensor(
                &sbar_b.rename_sided(&none, &smap(&[(2, 41)])),
                &s_a.rename_sided(&smap(&[(1, 99)]), &smap(&[(2, 42)])),
            )?
            .rename_sided(&smap(&[(99, 1)]), &none);
            let seed = compose(&t, &m_d.rename_sided(&smap(&[(1, 42), (2, 41)]), &smap(&[(3, 2)])))?;
            solve::invert_morphism(&s_d, seed, None)?
        };

        let counit = build::build_counit(1, kappa);
        let c = build::build_c(1, kappa, false)?;
        let c_inv = build::build_c(1, kappa, true)?;
        let ab = build::build_ab(1, kappa)?;

        // Drinfel'd element u = (S ⊗ id)(R₂₁) multiplied together
        let u = {
            let rs = compose(&r, &s_d.rename_sided(&smap(&[(1, 2)]), &smap(&[(2, 12)])))?;
            compose(&rs, &m_d.rename_sided(&smap(&[(1, 12), (2, 1)]), &smap(&[(3, 5)])))?
                .rename_sided(&none, &smap(&[(5, 1)]))
        };
        // inverse ribbon element v⁻¹ = R₁₃ C⁻¹₂ merged into one strand
        let v_inv = {
            let t = tensor(
                &r.rename_sided(&none, &smap(&[(2, 3)])),
                &c_inv.rename_sided(&none, &smap(&[(1, 2)])),
            )?;
            let t = compose(&t, &m_d.rename_sided(&none, &smap(&[(3, 7)])))?;
            compose(&t, &m_d.rename_sided(&smap(&[(1, 7), (2, 3)]), &smap(&[(3, 8)])))?
                .rename_sided(&none, &smap(&[(8, 1)]))
        };
        // ribbon element v = C⁻¹·u, then confirmed as the inverse of v⁻¹
        // by the order-by-order solver
        let mul = |f: &PGElem, g: &PGElem| mul_one(&m_d, f, g);
        let v = {
            let seed = mul(&c_inv, &u)?;
            solve::invert_element(&v_inv, seed, &mul)?
        };
        let w = build::build_w(1, kappa)?;

        Ok(AlgebraContext {
            kappa,
            m_b,
            m_a,
            m_d,
            r,
            r_inv,
            pairing,
            delta_a,
            delta_b,
            delta_d,
            s_a,
            s_b,
            sbar_a,
            sbar_b,
            s_d,
            sbar_d,
            counit,
            c,
            c_inv,
            ab,
            u,
            v,
            v_inv,
            w,
        })
    }

    /// The double multiplication renamed to caller labels `(i,j) → k`.
    pub fn m_d(&self, i: Strand, j: Strand, k: Strand) -> PGElem {
        self.m_d.rename_sided(&smap(&[(1, i), (2, j)]), &smap(&[(3, k)]))
    }

    /// The double coproduct renamed to caller labels `i → (j,k)`.
    pub fn delta_d(&self, i: Strand, j: Strand, k: Strand) -> PGElem {
        self.delta_d.rename_sided(&smap(&[(1, i)]), &smap(&[(2, j), (3, k)]))
    }

    /// The double antipode (or with `inverse`, its inverse) `i → j`.
    pub fn s_d(&self, i: Strand, j: Strand, inverse: bool) -> PGElem {
        let f = if inverse { &self.sbar_d } else { &self.s_d };
        f.rename_sided(&smap(&[(1, i)]), &smap(&[(2, j)]))
    }

    /// The counit on strand `i`.
    pub fn counit(&self, i: Strand) -> PGElem {
        self.counit.rename_sided(&smap(&[(1, i)]), &smap(&[]))
    }

    /// The R-matrix (or its inverse) on codomain strands `(i,j)`, `𝔹`-leg
    /// first.
    pub fn r(&self, i: Strand, j: Strand, inverse: bool) -> PGElem {
        let f = if inverse { &self.r_inv } else { &self.r };
        f.rename_sided(&smap(&[]), &smap(&[(1, i), (2, j)]))
    }

    /// A cached single-strand element renamed onto strand `i`.
    pub fn on_strand(elem: &PGElem, i: Strand) -> PGElem {
        elem.rename_sided(&smap(&[]), &smap(&[(1, i)]))
    }

    /// Product of two single-strand elements via `m_𝔻`; the result lives
    /// on canonical strand 1.
    pub fn mul(&self, f: &PGElem, g: &PGElem) -> Result<PGElem, String> {
        mul_one(&self.m_d, f, g)
    }

    /// The antipode (or its inverse) applied to a single-strand element;
    /// the result lives on canonical strand 1.
    pub fn antipode(&self, f: &PGElem, inverse: bool) -> Result<PGElem, String> {
        let strand = *f
            .codomain
            .iter()
            .next()
            .ok_or("antipode of an element with no strand")?;
        let s = self.s_d(strand, 91, inverse);
        Ok(compose(f, &s)?.rename_sided(&smap(&[]), &smap(&[(91, 1)])))
    }

    /// The generator `class` (one of `Y`, `T`, `A`, `X`) as an element on
    /// canonical strand 1.
    pub fn generator(&self, class: VarClass) -> PGElem {
        build::poly_element(1, BodyPoly::var(crate::symseries::BodyVar::new(class, 1)), self.kappa)
    }
}

/// Product of two single-strand elements through a given multiplication
/// tensor (canonical labels); the result lives on strand 1.
fn mul_one(m_d: &PGElem, f: &PGElem, g: &PGElem) -> Result<PGElem, String> {
    let sf = *f.codomain.iter().next().ok_or("product of a strandless element")?;
    let sg = *g.codomain.iter().next().ok_or("product of a strandless element")?;
    if f.codomain.len() != 1 || g.codomain.len() != 1 || !f.domain.is_empty() || !g.domain.is_empty() {
        return Err("single-strand product applied to a multi-strand element".into());
    }
    let t = tensor(
        &f.rename_sided(&smap(&[]), &smap(&[(sf, 95)])),
        &g.rename_sided(&smap(&[]), &smap(&[(sg, 96)])),
    )?;
    let m = m_d.rename_sided(&smap(&[(1, 95), (2, 96)]), &smap(&[(3, 97)]));
    Ok(compose(&t, &m)?.rename_sided(&smap(&[]), &smap(&[(97, 1)])))
}

/// The two-step coproduct `i → (o1, o2, o3)` obtained by splitting the
/// second output again (coassociativity makes the choice immaterial).
fn coproduct2(
    delta: &PGElem,
    i: Strand,
    o1: Strand,
    o2: Strand,
    o3: Strand,
) -> Result<PGElem, String> {
    let first = delta.rename_sided(&smap(&[(1, i)]), &smap(&[(2, o1), (3, 98)]));
    let second = delta.rename_sided(&smap(&[(1, 98)]), &smap(&[(2, o2), (3, o3)]));
    compose(&first, &second)
}

/// The coordinate realignment on one full strand, `outer → inner`: the
/// identity map except that `t` is fed through as `t − εa`. Raw merged
/// kernels route `t`-input through the group-like channel, which
/// regenerates the `εa`-part of `b = t + εa`, while the explicit `a`-input
/// flows through the `𝔸`-channel on its own; pre-composing with this map
/// cancels the double count so that `t ↦ t` and `a ↦ a` hold exactly.
fn coord_fix(outer: Strand, inner: Strand, kappa: usize) -> Result<PGElem, String> {
    let mut log = crate::symseries::EpsSeries::zero(kappa);
    log.coeffs[0] = build::q2(VarClass::Tau, outer, VarClass::T, inner)
        .add(&build::q2(VarClass::Eta, outer, VarClass::Y, inner))
        .add(&build::q2(VarClass::Alpha, outer, VarClass::A, inner))
        .add(&build::q2(VarClass::Xi, outer, VarClass::X, inner));
    if kappa >= 1 {
        log.coeffs[1] = build::q2(VarClass::Tau, outer, VarClass::A, inner).neg();
    }
    PGElem::from_exponent([outer], [inner], &log)
}

/// A pure-Gaussian seed sharing a morphism's Gaussian (used where the
/// ε = 0 slice of a map is its own inverse).
fn gauss_seed(f: &PGElem) -> PGElem {
    PGElem {
        domain: f.domain.clone(),
        codomain: f.codomain.clone(),
        gauss: f.gauss.clone(),
        pert: crate::symseries::EpsSeries::one(f.kappa()),
    }
}
