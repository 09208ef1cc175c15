//! Perfect complexes: cones, derived Homs, endomorphism algebras.
use std::sync::Arc;

use perfalg::algebra::Algebra;
use perfalg::cli::suite::fixture_algebra;
use perfalg::derived::{derived_hom, end_algebra, is_exceptional, is_semi_exceptional, is_w_exceptional, projective_stalk, PerfComplex};
use perfalg::homalg::{minimal_resolution, simple_modules, AMatrix, ProjectiveModule};

fn regular(a: &Arc<Algebra>) -> PerfComplex {
    PerfComplex::stalk(a.clone(), ProjectiveModule::new(vec![a.unit().clone()]), 0)
}

fn main() -> perfalg::Result<()> {
    let kron = fixture_algebra("kronecker.json")?;
    let p0 = projective_stalk(&kron, &kron.basis_elem(0));
    let p1 = projective_stalk(&kron, &kron.basis_elem(1));
    println!("Hom(P0, P1[*]) = {:?}", derived_hom(&p0, &p1)?.dims);
    println!("Hom(P1, P0[*]) = {:?}", derived_hom(&p1, &p0)?.dims);

    // x = [P1 -a-> P0] in degrees -1, 0; the cone of its identity is contractible
    let a = AMatrix { rows: 1, cols: 1, entries: vec![vec![kron.basis_elem(2)]] };
    let x = PerfComplex::new(kron.clone(), -1, vec![ProjectiveModule::new(vec![kron.basis_elem(1)]), ProjectiveModule::new(vec![kron.basis_elem(0)])], vec![a])?;
    println!("End([P1 -> P0]) = {:?}", derived_hom(&x, &x)?.dims);
    let cone = PerfComplex::cone(&x.identity(), &x, &x)?;
    println!("cone of the identity: Hom(-, -) = {:?}", derived_hom(&cone, &cone)?.dims);

    for s in simple_modules(&kron)? {
        let r = PerfComplex::from_resolution(&minimal_resolution(&s, 5)?);
        println!("resolution of a simple: End = {:?}", derived_hom(&r, &r)?.dims);
    }

    for (name, file) in [("k", "k.json"), ("k x k", "kxk.json"), ("(-1,-1)/Q", "quaternions.json")] {
        let e = regular(&fixture_algebra(file)?);
        println!(
            "{name:>10}: dim End {}  exceptional {:?}  w-exceptional {:?}  semi-exceptional {:?}",
            end_algebra(&e)?.dim(),
            is_exceptional(&e)?,
            is_w_exceptional(&e)?,
            is_semi_exceptional(&e)?
        );
    }
    Ok(())
}
