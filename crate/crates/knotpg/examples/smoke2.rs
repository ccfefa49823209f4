use knotpg::doublealg::build;
use knotpg::doublealg::solve;
use knotpg::pgcalc::{compose, tensor, PGElem};
use knotpg::symseries::EpsSeries;
use std::collections::BTreeMap;

fn smap(pairs: &[(u32, u32)]) -> BTreeMap<u32, u32> {
    pairs.iter().cloned().collect()
}

fn coproduct2(delta: &PGElem, i: u32, o1: u32, o2: u32, o3: u32) -> PGElem {
    let first = delta.rename_sided(&smap(&[(1, i)]), &smap(&[(2, o1), (3, 98)]));
    let second = delta.rename_sided(&smap(&[(1, 98)]), &smap(&[(2, o2), (3, o3)]));
    compose(&first, &second).unwrap()
}

fn coord_fix(outer: u32, inner: u32, kappa: usize) -> PGElem {
    use knotpg::symseries::{BodyPoly, BodyVar, VarClass};
    let q2 = |c1: VarClass, s1: u32, c2: VarClass, s2: u32| {
        BodyPoly::var(BodyVar::new(c1, s1)).mul(&BodyPoly::var(BodyVar::new(c2, s2)))
    };
    let mut log = EpsSeries::zero(kappa);
    log.coeffs[0] = q2(VarClass::Tau, outer, VarClass::T, inner)
        .add(&q2(VarClass::Eta, outer, VarClass::Y, inner))
        .add(&q2(VarClass::Alpha, outer, VarClass::A, inner))
        .add(&q2(VarClass::Xi, outer, VarClass::X, inner));
    if kappa >= 1 {
        log.coeffs[1] = q2(VarClass::Tau, outer, VarClass::A, inner).neg();
    }
    PGElem::from_exponent([outer], [inner], &log).unwrap()
}

fn gauss_seed(f: &PGElem) -> PGElem {
    PGElem {
        domain: f.domain.clone(),
        codomain: f.codomain.clone(),
        gauss: f.gauss.clone(),
        pert: EpsSeries::one(f.kappa()),
    }
}

fn main() {
    let kappa = 1usize;
    let none = smap(&[]);
    let m_b = build::build_mb(1, 2, 3, kappa).unwrap();
    let m_a = build::build_ma(1, 2, 3, kappa);
    let r = build::build_r(1, 2, kappa).unwrap();
    let pairing = solve::solve_pairing(kappa).unwrap();
    let r_inv = solve::solve_r_inverse(kappa, &r).unwrap();
    let s_b = compose(
        &r_inv.rename_sided(&none, &smap(&[(1, 2), (2, 11)])),
        &pairing.rename_sided(&smap(&[(1, 11), (2, 1)]), &none),
    )
    .unwrap();
    let s_a = compose(
        &r_inv.rename_sided(&none, &smap(&[(1, 11)])),
        &pairing.rename_sided(&smap(&[(2, 11)]), &none),
    )
    .unwrap();
    let sbar_a = solve::invert_morphism(&s_a, gauss_seed(&s_a), None).unwrap();
    let delta_a = {
        let t = tensor(
            &r.rename_sided(&none, &smap(&[(1, 11)])),
            &r.rename_sided(&none, &smap(&[(1, 12), (2, 3)])),
        )
        .unwrap();
        let t = compose(&t, &build::build_mb(11, 12, 13, kappa).unwrap()).unwrap();
        compose(&t, &pairing.rename_sided(&smap(&[(2, 13)]), &none)).unwrap()
    };
    let delta_b = {
        let t = tensor(
            &r.rename_sided(&none, &smap(&[(1, 3), (2, 11)])),
            &r.rename_sided(&none, &smap(&[(1, 2), (2, 12)])),
        )
        .unwrap();
        let t = compose(&t, &build::build_ma(12, 11, 13, kappa)).unwrap();
        compose(&t, &pairing.rename_sided(&smap(&[(1, 13), (2, 1)]), &none)).unwrap()
    };
    let m_d = {
        let db3 = coproduct2(&delta_b, 21, 41, 42, 43);
        let da3 = coproduct2(&delta_a, 12, 44, 45, 46);
        let da3s = compose(&da3, &sbar_a.rename_sided(&smap(&[(1, 46)]), &smap(&[(2, 47)]))).unwrap();
        let mut big = tensor(&db3, &da3s).unwrap();
        big = compose(&big, &pairing.rename_sided(&smap(&[(1, 47), (2, 41)]), &none)).unwrap();
        big = compose(&big, &pairing.rename_sided(&smap(&[(1, 44), (2, 43)]), &none)).unwrap();
        big = compose(&big, &m_b.rename_sided(&smap(&[(1, 11), (2, 42)]), &smap(&[(3, 31)]))).unwrap();
        big = compose(&big, &m_a.rename_sided(&smap(&[(1, 45), (2, 22)]), &smap(&[(3, 32)]))).unwrap();
        let merged = big.rename_sided(
            &smap(&[(11, 101), (12, 101), (21, 102), (22, 102)]),
            &smap(&[(31, 3), (32, 3)]),
        );
        let fix = tensor(&coord_fix(1, 101, kappa), &coord_fix(2, 102, kappa)).unwrap();
        compose(&fix, &merged).unwrap()
    };
    println!("m_d ok: dom {:?} cod {:?}", m_d.domain, m_d.codomain);
    let s_d = {
        let t = tensor(
            &s_b.rename_sided(&smap(&[(1, 101)]), &smap(&[(2, 41)])),
            &sbar_a.rename_sided(&smap(&[(1, 99)]), &smap(&[(2, 42)])),
        )
        .unwrap()
        .rename_sided(&smap(&[(99, 101)]), &none);
        let raw = compose(&t, &m_d.rename_sided(&smap(&[(1, 42), (2, 41)]), &smap(&[(3, 2)]))).unwrap();
        compose(&coord_fix(1, 101, kappa), &raw).unwrap()
    };
    let c = build::build_c(1, kappa, false).unwrap();
    let c_inv = build::build_c(1, kappa, true).unwrap();
    let u = {
        let rs = compose(&r, &s_d.rename_sided(&smap(&[(1, 2)]), &smap(&[(2, 12)]))).unwrap();
        compose(&rs, &m_d.rename_sided(&smap(&[(1, 12), (2, 1)]), &smap(&[(3, 5)])))
            .unwrap()
            .rename_sided(&none, &smap(&[(5, 1)]))
    };
    println!("u gauss = {:?}", u.gauss);
    println!("u pert0 = {:?}", u.pert.coeffs[0]);
    let v_inv = {
        let t = tensor(
            &r.rename_sided(&none, &smap(&[(2, 3)])),
            &c.rename_sided(&none, &smap(&[(1, 2)])),
        )
        .unwrap();
        let t = compose(&t, &m_d.rename_sided(&none, &smap(&[(3, 7)]))).unwrap();
        compose(&t, &m_d.rename_sided(&smap(&[(1, 7), (2, 3)]), &smap(&[(3, 8)])))
            .unwrap()
            .rename_sided(&none, &smap(&[(8, 1)]))
    };
    println!("v_inv gauss = {:?}", v_inv.gauss);
    println!("v_inv pert0 = {:?}", v_inv.pert.coeffs[0]);
    let mul = |f: &PGElem, g: &PGElem| -> PGElem {
        let t = tensor(
            &f.rename_sided(&none, &smap(&[(1, 95)])),
            &g.rename_sided(&none, &smap(&[(1, 96)])),
        )
        .unwrap();
        let m = m_d.rename_sided(&smap(&[(1, 95), (2, 96)]), &smap(&[(3, 97)]));
        compose(&t, &m).unwrap().rename_sided(&none, &smap(&[(97, 1)]))
    };
    {
        use knotpg::symseries::{BodyPoly, BodyVar, VarClass};
        let gen = |cl: VarClass| build::poly_element(1, BodyPoly::var(BodyVar::new(cl, 1)), kappa);
        for (nm, e) in [
            ("y", gen(VarClass::Y)),
            ("t", gen(VarClass::T)),
            ("a", gen(VarClass::A)),
            ("x", gen(VarClass::X)),
        ] {
            let im = compose(&e, &s_d).unwrap();
            println!("S_d({nm}) pert = {:?}", im.pert.coeffs);
            if nm == "y" || nm == "t" {
                let sb = compose(&e, &s_b).unwrap();
                println!("s_b({nm}) pert = {:?}", sb.pert.coeffs);
            } else {
                let sa = compose(&e, &s_a).unwrap();
                println!("s_a({nm}) pert = {:?}", sa.pert.coeffs);
            }
        }
    }
    let cu = mul(&mul(&c, &u), &v_inv);
    println!("(c*u)*v_inv pert0 = {:?}", cu.pert.coeffs[0]);
    let ciu = mul(&mul(&c_inv, &u), &v_inv);
    println!("(c_inv*u)*v_inv pert0 = {:?}", ciu.pert.coeffs[0]);
    let uc = mul(&mul(&u, &c), &v_inv);
    println!("(u*c)*v_inv pert0 = {:?}", uc.pert.coeffs[0]);
    {
        use knotpg::symseries::{BodyPoly, BodyVar, VarClass};
        let unit = PGElem::unit(1, kappa);
        let gen = |cl: VarClass| build::poly_element(1, BodyPoly::var(BodyVar::new(cl, 1)), kappa);
        let gens = [
            ("y", gen(VarClass::Y)),
            ("t", gen(VarClass::T)),
            ("a", gen(VarClass::A)),
            ("x", gen(VarClass::X)),
        ];
        for (nm, e) in &gens {
            let lu = mul(&unit, e).pg_equal(e);
            let ru = mul(e, &unit).pg_equal(e);
            if !(lu && ru) {
                println!("unit FAIL on {nm}: left {lu} right {ru}");
            }
        }
        let mut bad = 0;
        for (n1, e1) in &gens {
            for (n2, e2) in &gens {
                for (n3, e3) in &gens {
                    let l = mul(&mul(e1, e2), e3);
                    let r = mul(e1, &mul(e2, e3));
                    if !l.pg_equal(&r) {
                        println!("assoc FAIL: ({n1}{n2}){n3}");
                        bad += 1;
                    }
                }
            }
        }
        println!("assoc scan done, {bad} failures");
        // x²y² = y²x² + 4(1−B)yx + 2(1−B)² at ε⁰
        let xx = mul(&gens[3].1, &gens[3].1);
        let yy = mul(&gens[0].1, &gens[0].1);
        let xxyy = mul(&xx, &yy);
        println!("x^2*y^2 pert0 = {:?}", xxyy.pert.coeffs[0]);
        // S_d on composite monomials
        let yx = build::poly_element(
            1,
            BodyPoly::var(BodyVar::new(VarClass::Y, 1)).mul(&BodyPoly::var(BodyVar::new(VarClass::X, 1))),
            kappa,
        );
        let syx = compose(&yx, &s_d).unwrap();
        println!("S_d(yx) pert0 = {:?}", syx.pert.coeffs[0]);
        let ty = build::poly_element(
            1,
            BodyPoly::var(BodyVar::new(VarClass::T, 1)).mul(&BodyPoly::var(BodyVar::new(VarClass::Y, 1))),
            kappa,
        );
        let sty = compose(&ty, &s_d).unwrap();
        println!("S_d(ty) pert0 = {:?}", sty.pert.coeffs[0]);
    }
    use knotpg::symseries::{BodyPoly, BodyVar, VarClass};
    let gen = |cl: VarClass| build::poly_element(1, BodyPoly::var(BodyVar::new(cl, 1)), kappa);
    let y = gen(VarClass::Y);
    let a = gen(VarClass::A);
    let x = gen(VarClass::X);
    let t = gen(VarClass::T);

    // direct pairing evaluations on generators
    let pval = |u: &PGElem, v: &PGElem| -> PGElem {
        let tt = tensor(
            &u.rename_sided(&none, &smap(&[(1, 71)])),
            &v.rename_sided(&none, &smap(&[(1, 72)])),
        )
        .unwrap();
        compose(&tt, &pairing.rename_sided(&smap(&[(1, 71), (2, 72)]), &none)).unwrap()
    };
    println!("pi(x,y) pert = {:?}", pval(&x, &y).pert.coeffs);
    println!("pi(a,t) pert = {:?}", pval(&a, &t).pert.coeffs);
    println!("pi(a,y) pert = {:?}", pval(&a, &y).pert.coeffs);
    println!("pi(x,t) pert = {:?}", pval(&x, &t).pert.coeffs);

    // coproducts applied to generators
    let dax = compose(&x, &delta_a).unwrap();
    println!("delta_a(x) pert0 = {:?}", dax.pert.coeffs[0]);
    println!("delta_a(x) pert1 = {:?}", dax.pert.coeffs[1]);
    let dby = compose(&y, &delta_b).unwrap();
    println!("delta_b(y) pert0 = {:?}", dby.pert.coeffs[0]);
    println!("delta_b(y) pert1 = {:?}", dby.pert.coeffs[1]);

    // step-by-step trace of x*y through the double multiplication assembly
    let db3 = coproduct2(&delta_b, 21, 41, 42, 43);
    let da3 = coproduct2(&delta_a, 12, 44, 45, 46);
    let da3s = compose(&da3, &sbar_a.rename_sided(&smap(&[(1, 46)]), &smap(&[(2, 47)]))).unwrap();
    let xin = x.rename_sided(&none, &smap(&[(1, 12)]));
    let yin = y.rename_sided(&none, &smap(&[(1, 21)]));
    let xa3 = compose(&xin, &da3s).unwrap();
    println!("da3s(x) pert0 = {:?}", xa3.pert.coeffs[0]);
    println!("da3s(x) pert1 = {:?}", xa3.pert.coeffs[1]);
    let yb3 = compose(&yin, &db3).unwrap();
    println!("db3(y) pert0 = {:?}", yb3.pert.coeffs[0]);
    println!("db3(y) pert1 = {:?}", yb3.pert.coeffs[1]);
    let mut big = tensor(&yb3, &xa3).unwrap();
    big = tensor(&big, &PGElem::unit(11, kappa)).unwrap();
    big = tensor(&big, &PGElem::unit(22, kappa)).unwrap();
    big = compose(&big, &pairing.rename_sided(&smap(&[(1, 47), (2, 41)]), &none)).unwrap();
    println!("after pi(47,41): pert0 = {:?}", big.pert.coeffs[0]);
    big = compose(&big, &pairing.rename_sided(&smap(&[(1, 44), (2, 43)]), &none)).unwrap();
    println!("after pi(44,43): pert0 = {:?}", big.pert.coeffs[0]);
    big = compose(&big, &m_b.rename_sided(&smap(&[(1, 11), (2, 42)]), &smap(&[(3, 31)]))).unwrap();
    big = compose(&big, &m_a.rename_sided(&smap(&[(1, 45), (2, 22)]), &smap(&[(3, 32)]))).unwrap();
    println!("final dom {:?} cod {:?}", big.domain, big.codomain);
    println!("final pert0 = {:?}", big.pert.coeffs[0]);
    println!("final pert1 = {:?}", big.pert.coeffs[1]);
}
