use super::*;

const Q: Field = Field::Rationals;

fn s(field: Field, x: i64) -> Scalar {
    field.from_i64(x)
}

fn sklyanin(field: Field, a: i64, b: i64, c: i64) -> MuTensor {
    sklyanin_tensor(field, &s(field, a), &s(field, b), &s(field, c)).unwrap()
}

/// Independent oracle: `det nu_{v*}` for the Sklyanin family, expanded by hand.
fn oracle(field: Field, a: i64, b: i64, c: i64, p: &[i64; 3]) -> Scalar {
    let (x, y, z) = (p[0], p[1], p[2]);
    let v = (a.pow(3) + b.pow(3) + c.pow(3)) * x * y * z - a * b * c * (x.pow(3) + y.pow(3) + z.pow(3));
    s(field, v)
}

fn det_at(t: &MuTensor, side: Side, p: &[i64; 3]) -> Scalar {
    t.contraction(side, &p.map(|x| s(t.field, x))).unwrap().determinant()
}

#[test]
fn ranks_and_kernels() {
    for t in [commutative_tensor(Q), sklyanin(Q, 1, 1, 0), sklyanin(Q, 1, 2, 3)] {
        assert_eq!(t.rank(), 6);
        assert_eq!(t.kernel().dim(), 3);
        for k in &t.t {
            assert!(t.mu.vec_mul(k).iter().all(|c| c.is_zero()));
        }
    }
    assert_eq!(sklyanin(Q, 1, -1, 0).kernel(), commutative_tensor(Q).kernel());
    assert!(matches!(sklyanin_tensor(Q, &Q.zero(), &Q.zero(), &Q.zero()), Err(Error::DegenerateParameters(_))));
    // (1, 1, 1) still gives three independent relations
    assert_eq!(sklyanin(Q, 1, 1, 1).kernel().dim(), 3);
}

#[test]
fn commutative_slice_ranks() {
    let t = commutative_tensor(Q);
    for f in [[1, 0, 0], [0, 1, 0], [1, 2, 3], [-4, 0, 7]] {
        let f = f.map(|x| s(Q, x));
        assert_eq!(slice_rank_profile(&t, Side::V, &f).unwrap(), 2);
        assert_eq!(slice_rank_profile(&t, Side::U, &f).unwrap(), 2);
    }
    assert!(matches!(slice_rank_profile(&t, Side::V, &[Q.zero(), Q.zero(), Q.zero()]), Err(Error::ZeroFunctional)));
}

#[test]
fn cubics_match_oracle() {
    assert!(gamma_cubic(&commutative_tensor(Q), Side::V).is_zero());
    assert!(gamma_cubic(&commutative_tensor(Q), Side::U).is_zero());
    let points = [[1, 0, 0], [1, 1, 1], [2, -1, 3], [0, 5, -2], [7, 3, 1]];
    for (a, b, c) in [(1, 2, 3), (1, 1, 1), (2, -1, 5), (1, -1, 0)] {
        let t = sklyanin(Q, a, b, c);
        let cv = gamma_cubic(&t, Side::V);
        let cu = gamma_cubic(&t, Side::U);
        assert_eq!(cv.is_zero(), cu.is_zero());
        for p in &points {
            let pt = p.map(|x| s(Q, x));
            // symbolic expansion against numeric determinants
            assert_eq!(cv.evaluate(&pt), det_at(&t, Side::V, p));
            assert_eq!(cu.evaluate(&pt), det_at(&t, Side::U, p));
            // and against the hand expansion, up to sign
            let o = oracle(Q, a, b, c, p);
            let d = det_at(&t, Side::V, p);
            assert!(d == o || d == -o.clone(), "({a},{b},{c}) at {p:?}: {d} vs {o}");
        }
    }
    let c = gamma_cubic(&sklyanin(Q, 1, 2, 3), Side::V).normalized();
    assert_eq!(c.support(), vec!["x^3", "y^3", "z^3", "xyz"]);
    assert_eq!(c.coeffs[9], s(Q, -6));
}

#[test]
fn exhaustive_nondegeneracy() {
    for p in [5, 7] {
        let f = Field::Prime(p);
        match check_nondegenerate(&commutative_tensor(f), 0, 0).unwrap() {
            Nondegeneracy::PassesSampled { samples, exhaustive, min_rank, max_rank } => {
                assert!(exhaustive);
                assert_eq!(samples as u32, 2 * (p * p * p - 1));
                assert_eq!((min_rank, max_rank), (2, 2));
            }
            other => panic!("{other:?}"),
        }
    }
    // a = b = c: every relation contracts against (1, 1, 1) to (1, 1, 1), a rank one slice
    match check_nondegenerate(&sklyanin(Field::Prime(7), 1, 1, 1), 0, 0).unwrap() {
        Nondegeneracy::FailsAt { rank, .. } => assert_eq!(rank, 1),
        other => panic!("{other:?}"),
    }
    let f7 = Field::Prime(7);
    let t = sklyanin(f7, 1, 1, 1);
    let ones = [f7.one(), f7.one(), f7.one()];
    assert_eq!(slice_rank_profile(&t, Side::V, &ones).unwrap(), 1);
    match check_nondegenerate(&sklyanin(f7, 1, 2, 3), 0, 0).unwrap() {
        Nondegeneracy::PassesSampled { exhaustive, min_rank, .. } => assert!(exhaustive && min_rank == 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn degenerate_tensor_fails() {
    // T contains x_0 (x) x_0, x_0 (x) x_1, x_0 (x) x_2: every u* kills two of them
    let mut t = Vec::new();
    for u in 0..3 {
        let mut v = vec![Q.zero(); 9];
        v[u] = Q.one();
        t.push(v);
    }
    let t = MuTensor::from_kernel(Q, t).unwrap();
    let v = check_nondegenerate(&t, 20, 1).unwrap();
    assert!(matches!(v, Nondegeneracy::FailsAt { .. }), "{v:?}");
    let t5 = MuTensor::from_kernel(Field::Prime(5), t.t.iter().map(|r| r.iter().map(|_| Field::Prime(5).zero()).collect()).collect());
    assert!(t5.is_err());
}

#[test]
fn generic_sampling() {
    let v = check_nondegenerate(&sklyanin(Q, 1, 2, 3), 30, 3).unwrap();
    assert!(matches!(v, Nondegeneracy::PassesSampled { exhaustive: false, .. }), "{v:?}");
    assert!(matches!(check_nondegenerate(&commutative_tensor(Q), 5, 0).unwrap(), Nondegeneracy::ProvedForFamily { .. }));
}

#[test]
fn plane_algebras() {
    let r = verify_plane(&commutative_tensor(Q), 10, 10, 0).unwrap();
    assert!(r.holds(), "{r:?}");
    let r = verify_plane(&sklyanin(Q, 1, 2, 3), 10, 10, 0).unwrap();
    assert_eq!(r.dim, 15);
    assert_eq!(r.cartan, vec![vec![1, 3, 6], vec![0, 1, 3], vec![0, 0, 1]]);
    assert_eq!(r.gldim, DimensionBound::Finite { value: 2 });
    assert!(!r.cubic_v.is_zero());
}
