//! temporary probe
use knotpg::doublealg::AlgebraContext;
use knotpg::pgcalc::{validate_pg_class, Flavor};

fn main() {
    let ctx = AlgebraContext::new(1).unwrap();
    for (name, e, fl) in [
        ("m_d", &ctx.m_d, Flavor::LaurentNonNegative),
        ("s_d", &ctx.s_d, Flavor::LaurentNonNegative),
        ("sbar_d", &ctx.sbar_d, Flavor::LaurentNonNegative),
    ] {
        match validate_pg_class(e, fl) {
            Ok(()) => println!("{name}: ok"),
            Err(m) => println!("{name}: {m}"),
        }
    }
}
