//! The Auslander algebra of k[x]/(x^n) and its exceptional collection.
use std::sync::Arc;

use perfalg::algebra::Algebra;
use perfalg::auslander::{build, verify_collection, verify_endomorphism_recovery, verify_gldim};
use perfalg::exactla::Field;

fn main() -> perfalg::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let lambda = Arc::new(Algebra::truncated_polynomial(Field::Rationals, n));
    let d = build(lambda)?;
    let g = d.gamma_algebra();
    println!("Gamma: dim {}, Cartan {:?}", g.dim(), g.cartan_matrix()?);
    println!("gl.dim {:?} (bound {})", verify_gldim(&d, 20)?.gldim, n + 1);
    let c = verify_collection(&d)?;
    for check in &c.checks {
        println!("  {:<28} {:?}", check.tag, check.verdict);
    }
    println!("dim End(K_i) = {:?}, kernels {:?}", c.end_dims, c.kernel_dims);
    println!("End(P_n) = Lambda: {:?}", verify_endomorphism_recovery(&d)?.verdict);
    Ok(())
}
