use super::*;
use crate::exactla::Field;
use crate::homalg::{ext_dims, indecomposable_projectives};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rationals;

fn corpus() -> Vec<(String, GluedAlgebra)> {
    gluing_corpus(Q).unwrap()
}

fn find(name: &str) -> GluedAlgebra {
    corpus().into_iter().find(|(n, _)| n == name).unwrap().1
}

#[test]
fn dimensions_add() {
    for (name, g) in corpus() {
        assert_eq!(g.algebra.dim(), g.a.dim() + g.b.dim() + g.s.dim, "{name}");
        assert_eq!(g.wrong_corner().dim(), 0, "{name}");
        assert_eq!(g.algebra.peirce(&g.e_b, &g.e_a).dim(), g.s.dim, "{name}");
    }
}

#[test]
fn kronecker_from_gluing() {
    let g = find("k|k|k2");
    assert_eq!(g.algebra.dim(), 4);
    assert_eq!(g.algebra.cartan_matrix().unwrap().len(), 2);
    let report = verify_gluing_sod(&g).unwrap();
    assert!(report.holds(), "{report:?}");
    // classes follow the hint order e_a, e_b
    assert_eq!(report.cartan, vec![vec![1, 0], vec![2, 1]]);
    // and it is the Kronecker algebra: split the path algebra at its sink
    let kron = kronecker(Q);
    let split = split_gluing(kron.clone(), &kron.basis_elem(1)).unwrap();
    assert_eq!((split.a.dim(), split.b.dim(), split.s.dim), (1, 1, 2));
    assert!(check_reassembly(&split).unwrap());
    assert!(matches!(split_gluing(kron.clone(), &kron.basis_elem(0)), Err(Error::CornerNotSemiorthogonal(2))));
}

#[test]
fn product_splits_both_ways() {
    let k = Algebra::ground(Q);
    let kk = Arc::new(k.product(&k).unwrap());
    let e = kk.idempotent_hints()[0].clone();
    let split = split_gluing(kk.clone(), &e).unwrap();
    assert_eq!(split.s.dim, 0);
    let g = find("k|k|0");
    let r = verify_gluing_sod(&g).unwrap();
    assert!(r.holds());
    assert_eq!(r.cartan, vec![vec![1, 0], vec![0, 1]]);
}

#[test]
fn corrupted_gluing_fails() {
    let mut g = find("k|k|k2");
    std::mem::swap(&mut g.e_a, &mut g.e_b);
    let r = verify_gluing_sod(&g).unwrap();
    assert!(r.corner.failed());
    assert!(!r.holds());
}

#[test]
fn corpus_sod_and_round_trip() {
    for (name, g) in corpus() {
        let r = verify_gluing_sod(&g).unwrap();
        assert!(r.holds(), "{name}: {r:?}");
        assert!(check_round_trip(&g).unwrap(), "{name}");
    }
}

#[test]
fn induction_of_regular_modules() {
    let g = find("k|k|k2");
    let pa = induce_a(&g, &RightModule::regular(g.a.clone())).unwrap();
    let pb = induce_b(&g, &RightModule::regular(g.b.clone())).unwrap();
    assert_eq!((pa.dim(), pb.dim()), (1, 3));
    let dims: Vec<usize> = indecomposable_projectives(&g.algebra).unwrap().iter().map(|p| p.dim()).collect();
    assert!(dims.contains(&3) && dims.contains(&1));
    // b* of a regular module is projective: Ext^1 into every simple vanishes
    for s in simple_modules(&g.algebra).unwrap() {
        assert_eq!(ext_dims(&pb, &s, 1).unwrap()[1], 0);
    }
    let g = find("kx2|kx2|kx2");
    let pb = induce_b(&g, &RightModule::regular(g.b.clone())).unwrap();
    assert_eq!(pb.dim(), g.b.dim() + g.s.dim);
}

#[test]
fn induction_preserves_ext_of_simples() {
    for name in ["kx2|k|S", "kron|k|P0", "k|kron|kron"] {
        let g = find(name);
        for (alg, side) in [(&g.a, 0), (&g.b, 1)] {
            let simples = simple_modules(alg).unwrap();
            for x in &simples {
                for y in &simples {
                    let before = ext_dims(x, y, 3).unwrap();
                    let ind = |m: &RightModule| if side == 0 { induce_a(&g, m).unwrap() } else { induce_b(&g, m).unwrap() };
                    let after = ext_dims(&ind(x), &ind(y), 3).unwrap();
                    assert_eq!(before, after, "{name} side {side}");
                }
            }
        }
    }
}

#[test]
fn smooth_biconditional() {
    let g = find("k|k|k2");
    let r = verify_smooth_gluing(&g, 8).unwrap();
    assert!(r.verdict.passed());
    assert_eq!(r.c, DimensionBound::Finite { value: 1 });
    let g = find("k|k|0");
    let r = verify_smooth_gluing(&g, 8).unwrap();
    assert_eq!(r.c, DimensionBound::Finite { value: 0 });
    let g = find("kx2|k|S");
    let r = verify_smooth_gluing(&g, 8).unwrap();
    assert!(r.verdict.passed(), "{r:?}");
    assert!(matches!(r.c, DimensionBound::PeriodicHenceInfinite { .. }));
}

#[test]
fn regular_gluing() {
    let r = verify_regular_gluing(&find("k|k|k2"), 8).unwrap();
    assert!(r.verdict.passed());
    assert!(r.c.is_finite());
    let r = verify_regular_gluing(&find("kx2|k|S"), 8).unwrap();
    assert!(r.verdict.passed());
    assert!(!r.c.is_finite() && r.c.is_definitive());
}

#[test]
fn random_bimodules_round_trip() {
    let f = Field::Prime(5);
    let k = Arc::new(Algebra::ground(f));
    let kx2 = Arc::new(Algebra::truncated_polynomial(f, 2));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (a, b) in [(&kx2, &k), (&k, &kx2), (&kx2, &kx2)] {
        for _ in 0..3 {
            let s = Bimodule::random(b.clone(), a.clone(), 4, &mut rng).unwrap();
            assert!(s.dim <= 4);
            let g = glue(a.clone(), b.clone(), s).unwrap();
            assert!(check_round_trip(&g).unwrap());
        }
    }
}

#[test]
fn mismatched_bimodule_is_rejected() {
    let k = Arc::new(Algebra::ground(Q));
    let kx2 = Arc::new(Algebra::truncated_polynomial(Q, 2));
    let s = Bimodule::regular(kx2.clone());
    assert!(matches!(glue(k.clone(), k, s), Err(Error::BimoduleMismatch(_))));
    let bad = Bimodule::new(kx2.clone(), kx2.clone(), 1, vec![Matrix::identity(Q, 1); 2], vec![Matrix::identity(Q, 1); 2]);
    assert!(matches!(bad, Err(Error::BimoduleMismatch(_))));
}

#[test]
fn associativity_of_iterated_gluing() {
    // A3: 0 -> 1 -> 2, glued as (k | k) | k and k | (k | k)
    let q = crate::algebra::QuiverPresentation::new(Q, vec!["0".into(), "1".into(), "2".into()]).arrow("x", 0, 1).arrow("y", 1, 2);
    let c = Arc::new(Algebra::from_quiver(q).unwrap());
    let sink = c.basis_elem(2);
    let left = split_gluing(c.clone(), &sink).unwrap();
    let mut e12 = c.basis_elem(1);
    e12[2] = Q.one();
    let right = split_gluing(c.clone(), &e12).unwrap();
    let a1 = glue(left.a.clone(), left.b.clone(), left.s.clone()).unwrap();
    let a2 = glue(right.a.clone(), right.b.clone(), right.s.clone()).unwrap();
    let mut c1 = a1.algebra.cartan_matrix().unwrap().concat();
    let mut c2 = a2.algebra.cartan_matrix().unwrap().concat();
    c1.sort();
    c2.sort();
    assert_eq!(c1, c2);
    assert_eq!(integer_determinant(&a1.algebra.cartan_matrix().unwrap()), 1);
}
