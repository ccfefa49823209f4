//! Single-pair Gaussian contraction — the engine's core step.
//!
//! Contracting the dual pair `(r, s)` (a Latin variable and its Greek dual on
//! the same strand) in `P·e^G` uses the exact one-pair rule. Writing
//! `G = G₀ + r·f + g·s + W·r·s` with `f, g` free of `r, s`:
//!
//! ```text
//! ⟨P(r,s)·e^G⟩ = W̃ · e^{G₀ + g·W̃·f} · ⟨P(r + W̃·g, W̃·(s + f))⟩,   W̃ = 1/(1−W),
//! ```
//!
//! where `⟨·⟩` on the right is the formal pairing `⟨r^i s^j⟩ = δ_{ij}·i!`.
//!
//! Group-like exponentials ride along as scalar symbols: a factor `B_k^{d/2}`
//! in a perturbation term means `e^{−(d/2)·t_k}`, and `𝒜_k^{d/2}` means
//! `e^{(d/2)·α_k}`. When the contracted variable carries such a link the
//! formal pairing extends to `⟨r^i s^j e^{μr}⟩ = j!·μ^{j−i}/(j−i)!` (and
//! symmetrically on the `s` side), and the exponential's image under the
//! substitution, `e^{μ·W̃·g}` resp. `e^{ν·W̃·f}`, converts back into group-like
//! symbols of the surviving strands. By the coupling shape of `G` at most one
//! side of a pair ever carries a link.

use super::pgelem::linear_symbol_factor;
use crate::exact::{factorial, rat, Rational, ratio, Scalar, Strand, SymbolId};
use crate::symseries::{BodyMono, BodyPoly, BodyVar, EpsSeries, VarClass};
use num::traits::Zero;

/// `p choose i` as a rational number.
fn binomial(p: u32, i: u32) -> Rational {
    factorial(p) / (factorial(i) * factorial(p - i))
}

/// The formal pairing `⟨r^i s^j e^{μr + ν's}⟩` where at most one of `μ, ν'`
/// is nonzero (`ν'` may carry surviving symbols through the `W̃` factor).
pub fn formal_bracket(i: u32, j: u32, mu: &Rational, nu_eff: &Scalar) -> Result<Scalar, String> {
    let mu_zero = mu.is_zero();
    let nu_zero = nu_eff.is_zero();
    if !mu_zero && !nu_zero {
        return Err("contracted pair linked to group-like symbols on both sides".into());
    }
    if !mu_zero {
        if j < i {
            return Ok(Scalar::zero());
        }
        let c = factorial(j) / factorial(j - i) * crate::exact::pow_i(mu, (j - i) as i64);
        Ok(Scalar::from_rational(c))
    } else if !nu_zero {
        if i < j {
            return Ok(Scalar::zero());
        }
        let c = factorial(i) / factorial(i - j);
        Ok(nu_eff.pow((i - j) as i64)?.scale(&c))
    } else if i == j {
        Ok(Scalar::from_rational(factorial(i)))
    } else {
        Ok(Scalar::zero())
    }
}

/// Convert `e^{scale · form}` for a linear form in group-like body variables
/// into a monomial in the scalar symbols. Errors when a coefficient is not a
/// plain rational, the class is not group-like, or a quarter power appears.
fn exp_linear_symbols(form: &BodyPoly, scale: &Rational) -> Result<Scalar, String> {
    let mut out = Scalar::one();
    for (m, c) in form.iter() {
        if m.total_degree() != 1 {
            return Err(format!("exponential of non-linear form (term {m})"));
        }
        let v = m.vars().next().unwrap();
        let coeff = c
            .as_rational()
            .ok_or_else(|| format!("non-rational coefficient on {v} in a symbol exponential"))?
            * scale;
        out = out.mul(&linear_symbol_factor(v, &coeff)?);
    }
    Ok(out)
}

/// Split a scalar into components with a fixed doubled exponent of `sym`,
/// `c = Σ_d sym^{d/2} · c_d` with each `c_d` free of the symbol. Requires the
/// denominator free of `sym` (a denominator like `1−B` signals a structurally
/// illegal contraction).
pub(crate) fn split_by_symbol(c: &Scalar, sym: SymbolId) -> Result<Vec<(i64, Scalar)>, String> {
    if c.denominator().symbols().contains(&sym) {
        return Err(format!("symbol {sym} occurs in a denominator at a contraction"));
    }
    let mut buckets: std::collections::BTreeMap<i64, crate::exact::LaurentPoly> =
        std::collections::BTreeMap::new();
    for (m, q) in c.numerator().iter() {
        let d = m.exponent(sym);
        let stripped = m.mul(&crate::exact::SymMono::var(sym, -d));
        buckets.entry(d).or_default().add_term(stripped, q.clone());
    }
    buckets
        .into_iter()
        .map(|(d, num)| Ok((d, Scalar::new(num, c.denominator().clone()))))
        .collect()
}

/// Contract the dual pair of `latin` class on `strand` out of `P·e^G`,
/// returning the new `(G, P)`. The pair's variables (and any linked group-like
/// symbols of that strand) are fully consumed; the rule is exact.
pub fn contract_pair(
    gauss: &BodyPoly,
    pert: &EpsSeries,
    strand: Strand,
    latin: VarClass,
) -> Result<(BodyPoly, EpsSeries), String> {
    assert!(latin.is_latin(), "contract_pair takes the Latin class of the pair");
    let r = BodyVar::new(latin, strand);
    let s = BodyVar::new(latin.dual(), strand);

    // When the pair's own group-like symbol occurs in a Gaussian coefficient
    // (e.g. the `B_1^{-1}·y_1 x_2` term of the inverse R-matrix), the exponent
    // is not Gaussian in the pair and the contraction degenerates to an exact
    // substitution rule, handled separately.
    let link_sym = match latin {
        VarClass::T => Some(SymbolId::B(strand)),
        VarClass::A => Some(SymbolId::CalA(strand)),
        _ => None,
    };
    if let Some(sym) = link_sym {
        let in_scalar = |c: &Scalar| {
            c.symbols().contains(&sym) || c.denominator().symbols().contains(&sym)
        };
        if gauss.iter().any(|(_, c)| in_scalar(c)) {
            return contract_pair_subst(gauss, pert, strand, latin, sym);
        }
    }

    if gauss.degree_in(r) > 1 || gauss.degree_in(s) > 1 {
        return Err(format!("Gaussian exponent is not linear in {r}/{s}"));
    }

    let w = gauss.coefficient(&BodyMono::var(r).mul(&BodyMono::var(s)));
    let one_minus_w = Scalar::one().sub(&w);
    let wt = one_minus_w
        .recip()
        .map_err(|_| format!("singular contraction: coupling of {r}{s} equals 1"))?;
    let f = gauss.derivative(r).set_var_zero(s);
    let g = gauss.derivative(s).set_var_zero(r);
    let g_rest = gauss.set_var_zero(r).set_var_zero(s);
    let new_gauss = g_rest.add(&g.mul(&f).scale(&wt));

    // Group-like links: `t` on the Latin side carries `B`, `α` on the Greek
    // side carries `𝒜`; the other classes carry nothing.
    let r_link = (latin == VarClass::T).then_some(SymbolId::B(strand));
    let s_link = (latin == VarClass::A).then_some(SymbolId::CalA(strand));

    let wg = g.scale(&wt);
    let wf = f.scale(&wt);

    let mut out = EpsSeries::zero(pert.kappa());
    for (k, poly) in pert.coeffs.iter().enumerate() {
        for (m, c) in poly.iter() {
            let p = m.exponent(r);
            let q = m.exponent(s);
            let rest = m.without(r, p).without(s, q);

            // Split the coefficient by the pair's linked symbol powers (the
            // two link classes are mutually exclusive, so at most one split
            // is nontrivial).
            let components: Vec<(Rational, Rational, Scalar)> = match (r_link, s_link) {
                (Some(sym), None) => split_by_symbol(c, sym)?
                    .into_iter()
                    .map(|(d, rem)| (ratio(-d, 2), Rational::zero(), rem))
                    .collect(),
                (None, Some(sym)) => split_by_symbol(c, sym)?
                    .into_iter()
                    .map(|(d, rem)| (Rational::zero(), ratio(d, 2), rem))
                    .collect(),
                _ => vec![(Rational::zero(), Rational::zero(), c.clone())],
            };

            for (mu, nu, c1) in components {
                // The exponential images in the surviving variables become
                // symbol monomials; the residual exponent on `s` picks up `W̃`.
                let mut sym_factor = Scalar::one();
                let mut nu_eff = Scalar::zero();
                if !mu.is_zero() {
                    sym_factor = sym_factor.mul(&exp_linear_symbols(&wg, &mu)?);
                }
                if !nu.is_zero() {
                    sym_factor = sym_factor.mul(&exp_linear_symbols(&wf, &nu)?);
                    nu_eff = wt.scale(&nu);
                }

                for i in 0..=p {
                    for j in 0..=q {
                        let formal = formal_bracket(i, j, &mu, &nu_eff)?;
                        if formal.is_zero() {
                            continue;
                        }
                        let coeff = c1
                            .mul(&sym_factor)
                            .mul(&formal)
                            .mul(&wt.pow(q as i64)?)
                            .scale(&(binomial(p, i) * binomial(q, j)));
                        let polyfac = wg.pow(p - i).mul(&f.pow(q - j));
                        for (pm, pc) in polyfac.iter() {
                            out.coeffs[k].add_term(rest.mul(pm), pc.mul(&coeff));
                        }
                    }
                }
            }
        }
    }
    Ok((new_gauss, out.scale(&wt)))
}

/// Exact contraction of a group-like pair whose own symbol occurs in
/// Gaussian coefficients. Writing the symbol-linked Gaussian part as
/// `Σ_u e^{λ_u z} Q_u` (with `z` the symbol's body variable, `t` or `α`, and
/// `Q_u` free of the pair), the pair bracket degenerates to substitution:
/// with `G = G₀ + r·f + g·s` (no self-coupling allowed here),
///
/// ```text
/// ⟨F(z) · (dual of z)^q · e^G⟩ = e^{G₀ + g·f} · F⁽q⁾(v)|_{v = image of z},
/// ```
///
/// where the image is `g` for `z = t` and `f` for `z = α`. Derivatives of the
/// `e^{Q_u e^{λ_u v}}` factors push `λ_u Q_u` monomials into the perturbation,
/// and the evaluated exponentials `e^{λ_u·image}` convert back into group-like
/// symbols of the surviving strands.
fn contract_pair_subst(
    gauss: &BodyPoly,
    pert: &EpsSeries,
    strand: Strand,
    latin: VarClass,
    sym: SymbolId,
) -> Result<(BodyPoly, EpsSeries), String> {
    let r = BodyVar::new(latin, strand);
    let s = BodyVar::new(latin.dual(), strand);
    // λ per doubled symbol exponent d: `B^{d/2} = e^{−(d/2)t}`, `𝒜^{d/2} = e^{(d/2)α}`
    let lam_of = |d: i64| -> Rational {
        match latin {
            VarClass::T => ratio(-d, 2),
            VarClass::A => ratio(d, 2),
            _ => unreachable!("group-like channel"),
        }
    };

    // Split the Gaussian into a symbol-free core and linked terms (λ_u, Q_u).
    let mut core = BodyPoly::zero();
    let mut linked: Vec<(Rational, BodyPoly)> = Vec::new();
    for (m, c) in gauss.iter() {
        if c.symbols().contains(&sym) || c.denominator().symbols().contains(&sym) {
            if m.exponent(r) > 0 || m.exponent(s) > 0 {
                return Err(format!(
                    "symbol {sym} multiplies a Gaussian term containing its own pair"
                ));
            }
            for (d, rem) in split_by_symbol(c, sym)? {
                if d == 0 {
                    core.add_term(m.clone(), rem);
                } else {
                    linked.push((lam_of(d), BodyPoly::monomial(rem, m.clone())));
                }
            }
        } else {
            core.add_term(m.clone(), c.clone());
        }
    }
    if core.degree_in(r) > 1 || core.degree_in(s) > 1 {
        return Err(format!("Gaussian exponent is not linear in {r}/{s}"));
    }
    if !core
        .coefficient(&BodyMono::var(r).mul(&BodyMono::var(s)))
        .is_zero()
    {
        return Err(format!(
            "self-coupled pair {r}{s} carries its own group-like symbol"
        ));
    }
    let f = core.derivative(r).set_var_zero(s);
    let g = core.derivative(s).set_var_zero(r);
    let g_rest = core.set_var_zero(r).set_var_zero(s);

    // (substituted variable, derivative-counting variable, image, companion)
    let (z_var, d_var, point, companion) = match latin {
        VarClass::T => (r, s, g.clone(), f.clone()),
        VarClass::A => (s, r, f.clone(), g.clone()),
        _ => unreachable!("group-like channel"),
    };

    let mut new_gauss = g_rest.add(&g.mul(&f));
    let mut link_images: Vec<Scalar> = Vec::new();
    for (lam, q) in &linked {
        let sfac = exp_linear_symbols(&point, lam)?;
        new_gauss = new_gauss.add(&q.scale(&sfac));
        link_images.push(sfac);
    }

    let mut out = EpsSeries::zero(pert.kappa());
    for (k, poly) in pert.coeffs.iter().enumerate() {
        for (m, c) in poly.iter() {
            let p_pow = m.exponent(z_var);
            let q_der = m.exponent(d_var);
            let rest = m.without(r, m.exponent(r)).without(s, m.exponent(s));
            for (d, c1) in split_by_symbol(c, sym)? {
                let mu0 = lam_of(d);
                // q_der-fold derivative of `v^p e^{(companion+μ₀)v} Π_u e^{Q_u e^{λ_u v}}`,
                // tracked as terms (coefficient polynomial, power of v, multiplicities
                // of the extra e^{λ_u v} factors).
                let drift = companion.add(&BodyPoly::constant(Scalar::from_rational(mu0.clone())));
                let mut terms: Vec<(BodyPoly, u32, Vec<u32>)> =
                    vec![(BodyPoly::one(), p_pow, vec![0; linked.len()])];
                for _ in 0..q_der {
                    let mut next: Vec<(BodyPoly, u32, Vec<u32>)> = Vec::new();
                    for (cp, pp, mv) in &terms {
                        if *pp > 0 {
                            next.push((cp.scale_rat(&rat(*pp as i64)), pp - 1, mv.clone()));
                        }
                        let lam_sum: Rational = mv
                            .iter()
                            .zip(linked.iter())
                            .map(|(mult, (lam, _))| lam * rat(*mult as i64))
                            .sum();
                        if !lam_sum.is_zero() {
                            next.push((cp.scale_rat(&lam_sum), *pp, mv.clone()));
                        }
                        if !drift.is_zero() {
                            next.push((cp.mul(&drift), *pp, mv.clone()));
                        }
                        for (u, (lam, qpoly)) in linked.iter().enumerate() {
                            let mut mv2 = mv.clone();
                            mv2[u] += 1;
                            next.push((cp.mul(qpoly).scale_rat(lam), *pp, mv2));
                        }
                    }
                    terms = next;
                }
                let mu_factor = if mu0.is_zero() {
                    Scalar::one()
                } else {
                    exp_linear_symbols(&point, &mu0)?
                };
                for (cp, pp, mv) in terms {
                    let mut sc = c1.mul(&mu_factor);
                    for (u, mult) in mv.iter().enumerate() {
                        for _ in 0..*mult {
                            sc = sc.mul(&link_images[u]);
                        }
                    }
                    let val = cp.mul(&point.pow(pp)).scale(&sc);
                    for (pm, pc) in val.iter() {
                        out.coeffs[k].add_term(rest.mul(pm), pc.clone());
                    }
                }
            }
        }
    }
    Ok((new_gauss, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn v(class: VarClass, s: u32) -> BodyVar {
        BodyVar::new(class, s)
    }

    #[test]
    fn chain_through_identity() {
        // G = η₀·y₉ + η₉·y₁ : contracting strand 9's (y, η) pair must yield
        // G' = η₀·y₁ with unchanged perturbation.
        let g = BodyPoly::var(v(VarClass::Eta, 0))
            .mul(&BodyPoly::var(v(VarClass::Y, 9)))
            .add(&BodyPoly::var(v(VarClass::Eta, 9)).mul(&BodyPoly::var(v(VarClass::Y, 1))));
        let p = EpsSeries::one(1);
        let (g2, p2) = contract_pair(&g, &p, 9, VarClass::Y).unwrap();
        let expect = BodyPoly::var(v(VarClass::Eta, 0)).mul(&BodyPoly::var(v(VarClass::Y, 1)));
        assert_eq!(g2, expect);
        assert!(p2.is_one());
    }

    #[test]
    fn self_coupling_geometric_factor() {
        // G = W·y₅·η₅ with rational W = 1/3: ⟨e^G⟩ = 1/(1−W) = 3/2.
        let w = crate::exact::ratio(1, 3);
        let g = BodyPoly::var(v(VarClass::Y, 5))
            .mul(&BodyPoly::var(v(VarClass::Eta, 5)))
            .scale_rat(&w);
        let (g2, p2) = contract_pair(&g, &EpsSeries::one(0), 5, VarClass::Y).unwrap();
        assert!(g2.is_zero());
        assert_eq!(p2.coeffs[0].constant_term(), Scalar::from_rational(ratio(3, 2)));
    }

    #[test]
    fn polynomial_contraction_values() {
        // ⟨y² η²⟩ = 2!, ⟨y η⟩ = 1, ⟨y⟩ = 0 — no couplings at all.
        let g = BodyPoly::zero();
        let y = v(VarClass::Y, 0);
        let e = v(VarClass::Eta, 0);
        let mk = |py: u32, pe: u32| {
            EpsSeries::from_poly(
                BodyPoly::monomial(Scalar::one(), BodyMono::var_pow(y, py).mul(&BodyMono::var_pow(e, pe))),
                0,
            )
        };
        let val = |py, pe| contract_pair(&g, &mk(py, pe), 0, VarClass::Y).unwrap().1.coeffs[0].clone();
        assert_eq!(val(2, 2).constant_term(), Scalar::from_int(2));
        assert_eq!(val(1, 1).constant_term(), Scalar::from_int(1));
        assert!(val(1, 0).is_zero());
    }

    #[test]
    fn symbol_link_relabels_through_identity() {
        // A perturbation factor B₇^{3/2} (that is e^{−(3/2)t₇}) pushed through
        // the identity coupling τ₇·t₂ must come out as B₂^{3/2}.
        let g = BodyPoly::var(v(VarClass::Tau, 7)).mul(&BodyPoly::var(v(VarClass::T, 2)));
        let p = EpsSeries::from_poly(
            BodyPoly::constant(Scalar::var_pow(SymbolId::B(7), 3)),
            0,
        );
        let (g2, p2) = contract_pair(&g, &p, 7, VarClass::T).unwrap();
        assert!(g2.is_zero());
        assert_eq!(p2.coeffs[0].constant_term(), Scalar::var_pow(SymbolId::B(2), 3));
    }

    #[test]
    fn link_pairs_against_dual_powers() {
        // ⟨τ₄ · B₄^{-2}⟩ over the t-pair of strand 4: B₄⁻¹ = e^{t₄}, so this
        // is ⟨τ₄ e^{μ t₄}⟩ with μ = 1, giving 1!·μ¹ = 1.
        let p = EpsSeries::from_poly(
            BodyPoly::monomial(
                Scalar::var_pow(SymbolId::B(4), -2),
                BodyMono::var(v(VarClass::Tau, 4)),
            ),
            0,
        );
        let (g2, p2) = contract_pair(&BodyPoly::zero(), &p, 4, VarClass::T).unwrap();
        assert!(g2.is_zero());
        assert_eq!(p2.coeffs[0].constant_term(), Scalar::from_int(1));
        // ⟨t₄ · B₄^{-2}⟩ vanishes (Latin power exceeds Greek).
        let p = EpsSeries::from_poly(
            BodyPoly::monomial(
                Scalar::var_pow(SymbolId::B(4), -2),
                BodyMono::var(v(VarClass::T, 4)),
            ),
            0,
        );
        let (_, p2) = contract_pair(&BodyPoly::zero(), &p, 4, VarClass::T).unwrap();
        assert!(p2.is_zero());
    }
}
