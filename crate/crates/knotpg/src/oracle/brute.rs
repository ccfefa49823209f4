//! Brute-force check of the one-pair Gaussian contraction rule.
//!
//! The engine contracts a dual pair `(r, s)` out of `P·e^G` with a
//! closed-form rule. This module re-derives the same value the slow way:
//! expand `e^G` as an honest polynomial, expand any group-like symbol
//! factors of the contracted strand back into exponential series, apply
//! the raw monomial pairing `⟨r^k s^k⟩ = k!` term by term, and compare
//! the two results as truncated polynomials in the surviving variables.
//!
//! Instances are generated without a direct `r·s` self-coupling, so the
//! brute-force expansion is a finite computation at every comparison
//! degree (self-couplings produce the geometric factor `1/(1−W)`, which
//! no truncated expansion can match exactly; those are covered by
//! closed-form unit tests instead).

use crate::exact::{ratio, Rational, Scalar, Strand, SymbolId};
use crate::pgcalc::contract_pair;
use crate::symseries::{BodyMono, BodyPoly, BodyVar, EpsSeries, VarClass};
use num::traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A degree budget for truncated expansions: the surviving total degree
/// (everything except the contracted pair's variables) is capped at
/// `cap`, and the pair variables themselves at `pair_cap` each.
#[derive(Clone, Copy)]
struct Budget {
    r: BodyVar,
    s: BodyVar,
    cap: u32,
    pair_cap: u32,
}

impl Budget {
    fn keeps(&self, m: &BodyMono) -> bool {
        let dr = m.exponent(self.r);
        let ds = m.exponent(self.s);
        dr <= self.pair_cap && ds <= self.pair_cap && m.total_degree() - dr - ds <= self.cap
    }
}

/// Drop every term outside the degree budget.
fn truncate(p: &BodyPoly, b: &Budget) -> BodyPoly {
    let mut out = BodyPoly::zero();
    for (m, c) in p.iter() {
        if b.keeps(m) {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// Truncated product: all terms outside the budget are discarded.
fn mul_trunc(a: &BodyPoly, b: &BodyPoly, budget: &Budget) -> BodyPoly {
    truncate(&a.mul(b), budget)
}

/// `Σ_{k≤order} p^k / k!`, truncated to the budget.
fn expand_exp(p: &BodyPoly, order: u32, budget: &Budget) -> BodyPoly {
    let mut acc = BodyPoly::one();
    let mut power = BodyPoly::one();
    let mut kfact = Rational::one();
    for k in 1..=order {
        power = mul_trunc(&power, p, budget);
        if power.is_zero() {
            break;
        }
        kfact *= Rational::from_integer(k.into());
        acc = acc.add(&power.scale_rat(&(Rational::one() / &kfact)));
    }
    acc
}

/// Expand every group-like scalar symbol in the coefficients of `p` into
/// its exponential series in the matching body variable, truncated at
/// degree `cap`: `B_s^{d/2} = e^{−(d/2)·t_s}` and `𝒜_s^{d/2} = e^{(d/2)·α_s}`
/// (exponents are stored doubled).
fn expand_symbols(p: &BodyPoly, budget: &Budget) -> Result<BodyPoly, String> {
    let mut out = BodyPoly::zero();
    for (m, c) in p.iter() {
        let den = c
            .denominator()
            .coefficient(&crate::exact::SymMono::one());
        if c.denominator().num_terms() != 1 || den.is_zero() {
            return Err("non-constant scalar denominator in oracle expansion".into());
        }
        for (sm, q) in c.numerator().iter() {
            let mut term = BodyPoly::constant(Scalar::from_rational(q / &den));
            for &(sym, d) in sm.iter() {
                let (var, rate) = match sym {
                    SymbolId::B(s) => (BodyVar::new(VarClass::T, s), ratio(-d, 2)),
                    SymbolId::CalA(s) => (BodyVar::new(VarClass::Alpha, s), ratio(d, 2)),
                    SymbolId::T => return Err("unexpected T symbol in oracle instance".into()),
                };
                let linear = BodyPoly::var(var).scale_rat(&rate);
                let series_order = budget.cap + budget.pair_cap;
                term = mul_trunc(&term, &expand_exp(&linear, series_order, budget), budget);
            }
            out = out.add(&term.mul(&BodyPoly::monomial(Scalar::one(), m.clone())));
        }
    }
    Ok(truncate(&out, budget))
}

/// Raw monomial contraction of the dual pair on `strand`: each term keeps
/// only matched powers, `r^k s^k ↦ k!`.
fn pair_contract(p: &BodyPoly, strand: Strand, latin: VarClass) -> BodyPoly {
    let r = BodyVar::new(latin, strand);
    let s = BodyVar::new(latin.dual(), strand);
    let mut out = BodyPoly::zero();
    for (m, c) in p.iter() {
        let i = m.exponent(r);
        let j = m.exponent(s);
        if i != j {
            continue;
        }
        let rest = m.without(r, i).without(s, j);
        out.add_term(rest, c.scale(&crate::exact::factorial(i)));
    }
    out
}

/// One random contraction instance.
struct Instance {
    gauss: BodyPoly,
    pert: EpsSeries,
    strand: Strand,
    latin: VarClass,
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numers = [-2i64, -1, 1, 2, 3];
    let denoms = [1i64, 1, 2, 3];
    ratio(
        numers[rng.gen_range(0..numers.len())],
        denoms[rng.gen_range(0..denoms.len())],
    )
}

fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    let latin = [VarClass::T, VarClass::A, VarClass::Y, VarClass::X][rng.gen_range(0..4)];
    let strand: Strand = 1;
    let survivor: Strand = 2;
    let r = BodyVar::new(latin, strand);
    let s = BodyVar::new(latin.dual(), strand);

    // Allowed coupling shapes: {τ,a}×{t,α} and {y,ξ}×{η,x}, on strands 1
    // and 2, excluding the direct r·s self-coupling.
    let group_left = [VarClass::Tau, VarClass::A];
    let group_right = [VarClass::T, VarClass::Alpha];
    let xy_left = [VarClass::Y, VarClass::Xi];
    let xy_right = [VarClass::Eta, VarClass::X];
    let strands = [strand, survivor];
    let mut couplings = Vec::new();
    for (lefts, rights) in [(group_left, group_right), (xy_left, xy_right)] {
        for &lc in &lefts {
            for &rc in &rights {
                for &ls in &strands {
                    for &rs in &strands {
                        let u = BodyVar::new(lc, ls);
                        let v = BodyVar::new(rc, rs);
                        if (u == r && v == s) || (u == s && v == r) {
                            continue;
                        }
                        couplings.push((u, v));
                    }
                }
            }
        }
    }
    let mut gauss = BodyPoly::zero();
    let group_classes = [VarClass::Tau, VarClass::A, VarClass::T, VarClass::Alpha];
    for _ in 0..rng.gen_range(2..=4usize) {
        let (u, v) = couplings[rng.gen_range(0..couplings.len())];
        // Group-block couplings must stay half-integer: they can end up in
        // the exponent of a group-like symbol, whose powers are stored as
        // doubled integers.
        let coeff = if group_classes.contains(&u.class) || group_classes.contains(&v.class) {
            let halves = [-3i64, -2, -1, 1, 2, 3, 4];
            ratio(halves[rng.gen_range(0..halves.len())], 2)
        } else {
            random_rational(rng)
        };
        gauss = gauss.add(&BodyPoly::var(u).mul(&BodyPoly::var(v)).scale_rat(&coeff));
    }
    // Keep the exponent linear in the contracted pair (quadratic G can
    // still repeat a coupling; a doubled r-power would be rejected).
    if gauss.degree_in(r) > 1 || gauss.degree_in(s) > 1 {
        gauss = gauss.set_var_zero(r).set_var_zero(s);
    }

    // Perturbation: a few low-degree monomials in the pair and survivor
    // variables, with occasional group-like links on the contracted strand.
    let kappa = rng.gen_range(0..=2usize);
    let mut pool = vec![r, s];
    for class in [VarClass::Y, VarClass::Eta, VarClass::X, VarClass::Xi] {
        pool.push(BodyVar::new(class, survivor));
    }
    let mut pert = EpsSeries::zero(kappa);
    for k in 0..=kappa {
        for _ in 0..rng.gen_range(1..=2usize) {
            let mut mono = BodyMono::one();
            for _ in 0..rng.gen_range(0..=3usize) {
                mono = mono.mul(&BodyMono::var(pool[rng.gen_range(0..pool.len())]));
            }
            let mut coeff = Scalar::from_rational(random_rational(rng));
            if rng.gen_bool(0.4) {
                // Attach a group-like link matching the contracted class.
                let d = [-2i64, 2, 4][rng.gen_range(0..3)];
                match latin {
                    VarClass::T => coeff = coeff.mul(&Scalar::var_pow(SymbolId::B(strand), d)),
                    VarClass::A => coeff = coeff.mul(&Scalar::var_pow(SymbolId::CalA(strand), d)),
                    _ => {}
                }
            }
            pert.coeffs[k].add_term(mono, coeff);
        }
    }
    if pert.coeffs[0].is_zero() {
        pert.coeffs[0] = BodyPoly::one();
    }
    Instance { gauss, pert, strand, latin }
}

/// Contract an instance the slow way at expansion order `order`,
/// comparing polynomials truncated at surviving degree `cap`.
fn brute_contract(inst: &Instance, order: u32, cap: u32) -> Result<Vec<BodyPoly>, String> {
    let r = BodyVar::new(inst.latin, inst.strand);
    let budget = Budget { r, s: r.dual(), cap, pair_cap: order };
    let e_g = expand_exp(&inst.gauss, order, &budget);
    let mut out = Vec::new();
    for poly in &inst.pert.coeffs {
        let integrand = expand_symbols(&mul_trunc(poly, &e_g, &budget), &budget)?;
        out.push(truncate(
            &pair_contract(&integrand, inst.strand, inst.latin),
            &budget,
        ));
    }
    Ok(out)
}

/// Expand the engine's output `P'·e^{G'}` into plain truncated polynomials
/// (symbols included) for comparison with the brute-force value.
fn expand_engine(
    gauss: &BodyPoly,
    pert: &EpsSeries,
    budget: &Budget,
) -> Result<Vec<BodyPoly>, String> {
    let e_g = expand_exp(gauss, budget.cap, budget);
    pert.coeffs
        .iter()
        .map(|p| expand_symbols(&mul_trunc(p, &e_g, budget), budget))
        .collect()
}

/// Run `instances` randomized one-pair contractions with the given seed,
/// checking the engine against the brute-force expansion (and the
/// brute-force expansion against itself at a deeper order, to guard
/// against insufficient truncation). Returns the number of instances
/// checked, or a description of the first mismatch.
pub fn run_contraction_oracle(instances: usize, seed: u64) -> Result<usize, String> {
    let cap = 4u32;
    let order = 9u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..instances {
        let inst = random_instance(&mut rng);
        let (g2, p2) = contract_pair(&inst.gauss, &inst.pert, inst.strand, inst.latin)
            .map_err(|e| format!("instance {n}: engine error: {e}"))?;
        let r = BodyVar::new(inst.latin, inst.strand);
        let budget = Budget { r, s: r.dual(), cap, pair_cap: 0 };
        let engine = expand_engine(&g2, &p2, &budget)
            .map_err(|e| format!("instance {n}: expansion error: {e}"))?;
        let brute = brute_contract(&inst, order, cap)?;
        let deeper = brute_contract(&inst, order + 2, cap)?;
        if brute != deeper {
            return Err(format!(
                "instance {n}: brute-force value did not stabilize at order {order}"
            ));
        }
        if engine != brute {
            return Err(format!(
                "instance {n}: engine and brute-force contraction disagree\n\
                 G = {}\n class = {:?}",
                inst.gauss, inst.latin
            ));
        }
    }
    Ok(instances)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_oracle_run() {
        assert_eq!(run_contraction_oracle(25, 11).unwrap(), 25);
    }

    #[test]
    fn mixed_symbol_coefficients_contract() {
        // Seed 16 once produced a perturbation coefficient mixing B₁ powers
        // (a sum like q₁ + q₂·B₁ on one monomial); the engine must split it.
        assert_eq!(run_contraction_oracle(1, 16).unwrap(), 1);
    }

    #[test]
    fn expand_exp_matches_series() {
        // e^{y·η} truncated: 1 + yη + y²η²/2 at cap 4.
        let y = BodyVar::new(VarClass::Y, 0);
        let eta = BodyVar::new(VarClass::Eta, 0);
        let g = BodyPoly::var(y).mul(&BodyPoly::var(eta));
        let budget = Budget { r: BodyVar::new(VarClass::T, 9), s: BodyVar::new(VarClass::Tau, 9), cap: 4, pair_cap: 0 };
        let e = expand_exp(&g, 8, &budget);
        assert_eq!(e.num_terms(), 3);
        assert_eq!(
            e.coefficient(&BodyMono::var_pow(y, 2).mul(&BodyMono::var_pow(eta, 2))),
            Scalar::from_rational(ratio(1, 2))
        );
    }

    #[test]
    fn pair_contract_keeps_matched_powers() {
        let y = BodyVar::new(VarClass::Y, 3);
        let eta = BodyVar::new(VarClass::Eta, 3);
        let mut p = BodyPoly::zero();
        p.add_term(BodyMono::var_pow(y, 2).mul(&BodyMono::var_pow(eta, 2)), Scalar::one());
        p.add_term(BodyMono::var(y), Scalar::one());
        let out = pair_contract(&p, 3, VarClass::Y);
        assert_eq!(out.constant_term(), Scalar::from_int(2));
        assert_eq!(out.num_terms(), 1);
    }
}
