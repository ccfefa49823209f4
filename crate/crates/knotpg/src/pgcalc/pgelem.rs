//! The perturbed-Gaussian morphism type.

use crate::exact::{Rational, Scalar, Strand, SymMono, SymbolId};
use crate::symseries::{BodyPoly, BodyVar, EpsSeries, VarClass};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A perturbed-Gaussian morphism from the strands in `domain` to the strands
/// in `codomain`: the expression `P · e^G`.
///
/// Invariants (checked by [`crate::pgcalc::validate_pg_class`], maintained by
/// the engine):
/// - `G` is quadratic, coupling `{τ,a}` against `{t,α}` (group block) and
///   `{y,ξ}` against `{η,x}` (xy block);
/// - Greek variables and `𝒜` symbols live on domain strands, Latin variables
///   and `B` symbols on codomain strands;
/// - `P` is an ε-series, `1 + O(ε)` for honest algebra elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PGElem {
    pub domain: BTreeSet<Strand>,
    pub codomain: BTreeSet<Strand>,
    pub gauss: BodyPoly,
    pub pert: EpsSeries,
}

impl PGElem {
    /// The scalar 1 viewed as a morphism with no strands.
    pub fn scalar_one(kappa: usize) -> Self {
        PGElem {
            domain: BTreeSet::new(),
            codomain: BTreeSet::new(),
            gauss: BodyPoly::zero(),
            pert: EpsSeries::one(kappa),
        }
    }

    /// The unit algebra element on codomain strand `i` (empty domain).
    pub fn unit(i: Strand, kappa: usize) -> Self {
        PGElem {
            domain: BTreeSet::new(),
            codomain: BTreeSet::from([i]),
            gauss: BodyPoly::zero(),
            pert: EpsSeries::one(kappa),
        }
    }

    /// The identity morphism from strand `i` to strand `k` (a relabeling when
    /// composed): `e^{τ_i t_k + α_i a_k + η_i y_k + ξ_i x_k}`.
    pub fn identity(i: Strand, k: Strand, kappa: usize) -> Self {
        let mut g = BodyPoly::zero();
        for (greek, latin) in [
            (VarClass::Tau, VarClass::T),
            (VarClass::Alpha, VarClass::A),
            (VarClass::Eta, VarClass::Y),
            (VarClass::Xi, VarClass::X),
        ] {
            g = g.add(&BodyPoly::var(BodyVar::new(greek, i)).mul(&BodyPoly::var(BodyVar::new(latin, k))));
        }
        PGElem {
            domain: BTreeSet::from([i]),
            codomain: BTreeSet::from([k]),
            gauss: g,
            pert: EpsSeries::one(kappa),
        }
    }

    /// Identity on the `xy`-block only, for backends (such as the Heisenberg
    /// algebra) whose strands carry just the `y/η` and `x/ξ` classes.
    pub fn identity_xy(i: Strand, k: Strand, kappa: usize) -> Self {
        let mut g = BodyPoly::zero();
        for (greek, latin) in [(VarClass::Eta, VarClass::Y), (VarClass::Xi, VarClass::X)] {
            g = g.add(&BodyPoly::var(BodyVar::new(greek, i)).mul(&BodyPoly::var(BodyVar::new(latin, k))));
        }
        PGElem {
            domain: BTreeSet::from([i]),
            codomain: BTreeSet::from([k]),
            gauss: g,
            pert: EpsSeries::one(kappa),
        }
    }

    pub fn kappa(&self) -> usize {
        self.pert.kappa()
    }

    /// Multiply the perturbation by a scalar.
    pub fn scale(&self, c: &Scalar) -> Self {
        PGElem {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            gauss: self.gauss.clone(),
            pert: self.pert.scale(c),
        }
    }

    /// Rename strands on both sides at once; see [`PGElem::rename_sided`].
    pub fn rename_strands(&self, map: &BTreeMap<Strand, Strand>) -> Self {
        self.rename_sided(map, map)
    }

    /// Rename strands, treating the two sides independently: Greek variables,
    /// `𝒜` symbols and the domain set follow `dom_map`; Latin variables, `B`
    /// symbols and the codomain set follow `cod_map`. Strands not in a map
    /// are left alone. Each map must be injective where applied.
    pub fn rename_sided(
        &self,
        dom_map: &BTreeMap<Strand, Strand>,
        cod_map: &BTreeMap<Strand, Strand>,
    ) -> Self {
        let ren_dom = |s: Strand| dom_map.get(&s).cloned().unwrap_or(s);
        let ren_cod = |s: Strand| cod_map.get(&s).cloned().unwrap_or(s);
        let rename_sym = |sym: SymbolId| match sym {
            SymbolId::T => SymbolId::T,
            SymbolId::CalA(s) => SymbolId::CalA(ren_dom(s)),
            SymbolId::B(s) => SymbolId::B(ren_cod(s)),
        };
        let rename_scalar = |c: &Scalar| -> Scalar {
            let mut num = crate::exact::LaurentPoly::zero();
            for (m, q) in c.numerator().iter() {
                num.add_term(
                    SymMono::from_pairs(m.iter().map(|&(s, e)| (rename_sym(s), e))),
                    q.clone(),
                );
            }
            let mut den = crate::exact::LaurentPoly::zero();
            for (m, q) in c.denominator().iter() {
                den.add_term(
                    SymMono::from_pairs(m.iter().map(|&(s, e)| (rename_sym(s), e))),
                    q.clone(),
                );
            }
            Scalar::new(num, den)
        };
        let rename_var = |v: &BodyVar| -> BodyVar {
            let s = if v.class.is_greek() { ren_dom(v.strand) } else { ren_cod(v.strand) };
            BodyVar::new(v.class, s)
        };
        let rename_poly = |p: &BodyPoly| -> BodyPoly {
            let mut out = BodyPoly::zero();
            for (m, c) in p.iter() {
                let nm = crate::symseries::BodyMono::from_pairs(
                    m.iter().map(|&(v, e)| (rename_var(&v), e)),
                );
                out.add_term(nm, rename_scalar(c));
            }
            out
        };
        PGElem {
            domain: self.domain.iter().map(|&s| ren_dom(s)).collect(),
            codomain: self.codomain.iter().map(|&s| ren_cod(s)).collect(),
            gauss: rename_poly(&self.gauss),
            pert: EpsSeries {
                coeffs: self.pert.coeffs.iter().map(rename_poly).collect(),
            },
        }
    }

    /// The largest strand label occurring anywhere in the element (sets, body
    /// variables, attached symbols); `None` when no strand occurs.
    pub fn max_strand(&self) -> Option<Strand> {
        let mut best: Option<Strand> = None;
        let mut see = |s: Strand| best = Some(best.map_or(s, |b| b.max(s)));
        for &s in self.domain.iter().chain(self.codomain.iter()) {
            see(s);
        }
        let see_poly = |p: &BodyPoly, best: &mut Option<Strand>| {
            for (m, c) in p.iter() {
                for v in m.vars() {
                    *best = Some(best.map_or(v.strand, |b| b.max(v.strand)));
                }
                for sym in c.symbols() {
                    if let SymbolId::CalA(s) | SymbolId::B(s) = sym {
                        *best = Some(best.map_or(s, |b| b.max(s)));
                    }
                }
            }
        };
        see_poly(&self.gauss, &mut best);
        for p in &self.pert.coeffs {
            see_poly(p, &mut best);
        }
        best
    }

    /// Exact equality of canonical forms (same domain/codomain, same Gaussian
    /// exponent, same perturbation order by order).
    pub fn pg_equal(&self, other: &Self) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self.kappa() == other.kappa()
            && self.gauss == other.gauss
            && self.pert == other.pert
    }

    /// Build an element from the logarithm of its intended value: the ε⁰
    /// quadratic part becomes the Gaussian exponent, ε⁰ linear group-like
    /// terms become symbol factors (`e^{ct} = B^{−c}`, `e^{cα} = 𝒜^{c}`), and
    /// everything of order ε ≥ 1 is exponentiated into the perturbation.
    pub fn from_exponent(
        domain: impl IntoIterator<Item = Strand>,
        codomain: impl IntoIterator<Item = Strand>,
        log_value: &EpsSeries,
    ) -> Result<Self, String> {
        let kappa = log_value.kappa();
        let mut gauss = BodyPoly::zero();
        let mut symbol_factor = Scalar::one();
        for (m, c) in log_value.coeffs[0].iter() {
            match m.total_degree() {
                0 => {
                    if !c.is_zero() {
                        return Err("constant term in a Gaussian exponent".into());
                    }
                }
                1 => {
                    let (v, _) = m.iter().next().unwrap();
                    let coeff = c
                        .as_rational()
                        .ok_or("linear exponent term with non-rational coefficient")?;
                    symbol_factor = symbol_factor.mul(&linear_symbol_factor(*v, &coeff)?);
                }
                2 => gauss.add_term(m.clone(), c.clone()),
                _ => return Err(format!("exponent monomial {m} of degree > 2 at ε⁰")),
            }
        }
        let mut tail = log_value.clone();
        tail.coeffs[0] = BodyPoly::zero();
        let pert = tail.exp()?.scale(&symbol_factor);
        Ok(PGElem {
            domain: domain.into_iter().collect(),
            codomain: codomain.into_iter().collect(),
            gauss,
            pert: pert.with_kappa(kappa),
        })
    }
}

/// The scalar-symbol image of `e^{c·v}` for a group-like body variable `v`
/// (`t` links to `B^{−c}`, `α` to `𝒜^{c}`); errors for other classes or when
/// a quarter power would be needed.
pub fn linear_symbol_factor(v: BodyVar, c: &Rational) -> Result<Scalar, String> {
    let doubled = |r: &Rational| -> Result<i64, String> {
        let two = r * Rational::from_integer(2.into());
        if !two.is_integer() {
            return Err(format!("exponential e^({r}·{v}) needs a quarter power"));
        }
        let v: num::BigInt = two.to_integer();
        i64::try_from(&v).map_err(|_| "symbol exponent overflow".to_string())
    };
    match v.class {
        VarClass::T => {
            let d = doubled(&-c)?;
            Ok(Scalar::var_pow(SymbolId::B(v.strand), d))
        }
        VarClass::Alpha => {
            let d = doubled(c)?;
            Ok(Scalar::var_pow(SymbolId::CalA(v.strand), d))
        }
        _ => Err(format!(
            "exponential of non-group-like variable {v} cannot be a scalar symbol"
        )),
    }
}

impl fmt::Display for PGElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PG({:?} -> {:?}): [{}] * exp({})",
            self.domain, self.codomain, self.pert, self.gauss
        )
    }
}
