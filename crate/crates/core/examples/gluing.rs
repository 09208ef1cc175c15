//! Gluing two algebras along a bimodule and splitting them again.
use std::sync::Arc;

use perfalg::algebra::Algebra;
use perfalg::exactla::Field;
use perfalg::gluing::{check_round_trip, glue, kronecker, split_gluing, verify_gluing_sod, verify_smooth_gluing, Bimodule};

fn main() -> perfalg::Result<()> {
    let q = Field::Rationals;
    let k = Arc::new(Algebra::ground(q));
    let s = Bimodule { left_algebra: k.clone(), right_algebra: k.clone(), ..Bimodule::scalar(q, 2) };
    let g = glue(k.clone(), k.clone(), s)?;
    println!("glue(k, k, k^2): dim {}, Cartan {:?}", g.algebra.dim(), g.algebra.cartan_matrix()?);
    let sod = verify_gluing_sod(&g)?;
    println!("  semi-orthogonal {}, det {:?}", sod.holds(), sod.cartan_determinants);
    println!("  smooth: {:?}", verify_smooth_gluing(&g, 20)?.c);
    println!("  round trip: {}", check_round_trip(&g)?);

    let kron = kronecker(q);
    let split = split_gluing(kron.clone(), &kron.basis_elem(1))?;
    println!("Kronecker at its sink: A dim {}, B dim {}, S dim {}", split.a.dim(), split.b.dim(), split.s.dim);
    println!("Kronecker at its source: {}", split_gluing(kron.clone(), &kron.basis_elem(0)).unwrap_err());

    let kx2 = Arc::new(Algebra::truncated_polynomial(q, 2));
    let g = glue(kx2.clone(), kx2.clone(), Bimodule::regular(kx2.clone()))?;
    let r = verify_smooth_gluing(&g, 20)?;
    println!("glue(kx2, kx2, kx2): A {:?}, S {:?}, C {:?}", r.a, r.s, r.c);
    Ok(())
}
