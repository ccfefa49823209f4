use knotpg::doublealg::{verify_axioms, AlgebraContext};

fn main() {
    let t0 = std::time::Instant::now();
    match AlgebraContext::new(1) {
        Ok(ctx) => {
            println!("context built in {:?}", t0.elapsed());
            match verify_axioms(&ctx) {
                Ok(rep) => {
                    for c in rep.checks.iter().filter(|c| !c.pass) {
                        println!("FAIL {}", c.name);
                    }
                    println!(
                        "all_pass = {} ({} checks, total {:?})",
                        rep.all_pass(),
                        rep.checks.len(),
                        t0.elapsed()
                    );
                }
                Err(e) => println!("verify error: {e}"),
            }
        }
        Err(e) => println!("build error: {e}"),
    }
}
