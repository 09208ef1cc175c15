use super::*;
use crate::exactla::Field;
use crate::gluing::kronecker;

fn truncated(field: Field, n: usize) -> Arc<Algebra> {
    Arc::new(Algebra::truncated_polynomial(field, n))
}

/// Independent count: `Hom(L/r^i, L/r^j)` for `L = k[x]/(x^n)` has dimension `min(i, j)`.
fn oracle_dim(n: usize) -> usize {
    (1..=n).flat_map(|i| (1..=n).map(move |j| i.min(j))).sum()
}

#[test]
fn dimensions_of_gamma() {
    for field in [Field::Rationals, Field::Prime(5)] {
        for (n, expected) in [(2, 5), (3, 14), (4, 30)] {
            assert_eq!(oracle_dim(n), expected);
            let d = build(truncated(field, n)).unwrap();
            assert_eq!(d.n, n);
            assert_eq!(d.gamma_algebra().dim(), expected);
            for i in 0..n {
                for j in 0..=i {
                    // Hom(P_i, P_j) = e_j Gamma e_i = Hom(M_i, M_j) = L/r^j for i >= j
                    assert_eq!(d.gamma.hom_dim(i, j), j + 1);
                }
            }
        }
    }
}

#[test]
fn ground_field() {
    let d = build(Arc::new(Algebra::ground(Field::Rationals))).unwrap();
    assert_eq!((d.n, d.gamma_algebra().dim(), d.k_objects.len()), (1, 1, 1));
    assert_eq!(verify_gldim(&d, 20).unwrap().gldim, DimensionBound::Finite { value: 0 });
    assert!(verify_collection(&d).unwrap().holds());
    assert!(verify_endomorphism_recovery(&d).unwrap().verdict.passed());
}

#[test]
fn dual_numbers_pipeline() {
    let d = build(truncated(Field::Rationals, 2)).unwrap();
    let gl = verify_gldim(&d, 20).unwrap();
    assert_eq!(gl.gldim, DimensionBound::Finite { value: 2 });
    let c = verify_collection(&d).unwrap();
    assert!(c.holds(), "{:?}", c.checks);
    assert_eq!(c.end_dims, vec![1, 1]);
    assert_eq!(c.kernel_dims, vec![1, 1]);
    let r = verify_endomorphism_recovery(&d).unwrap();
    assert!(r.verdict.passed());
    assert_eq!((r.dim_lambda, r.dim_end), (2, 2));
    let e = embed_perf(&d).unwrap();
    assert!(e.verdict.passed());
    assert_eq!(e.compared[0].3.get(0), 2);
}

#[test]
fn cubic_truncation_pipeline() {
    let d = build(truncated(Field::Prime(5), 3)).unwrap();
    assert_eq!(verify_gldim(&d, 20).unwrap().gldim, DimensionBound::Finite { value: 2 });
    let c = verify_collection(&d).unwrap();
    assert!(c.holds());
    assert_eq!(c.end_dims, vec![1, 1, 1]);
    assert!(verify_endomorphism_recovery(&d).unwrap().verdict.passed());
}

#[test]
fn semisimple_and_hereditary() {
    let k = Algebra::ground(Field::Rationals);
    let kk = Arc::new(k.product(&k).unwrap());
    let d = build(kk).unwrap();
    assert_eq!(d.n, 1);
    let c = verify_collection(&d).unwrap();
    assert!(c.holds());
    assert_eq!(c.end_dims, vec![2]);
    let d = build(kronecker(Field::Rationals)).unwrap();
    assert!(verify_gldim(&d, 20).unwrap().verdict.passed());
    let c = verify_collection(&d).unwrap();
    assert!(c.holds(), "{:?}", c.checks);
    assert!(verify_endomorphism_recovery(&d).unwrap().verdict.passed());
    assert!(embed_perf(&d).unwrap().verdict.passed());
}

#[test]
fn broken_certificate_is_caught() {
    let d = build(truncated(Field::Rationals, 2)).unwrap();
    let mut cert = certificate(&d);
    if let Some(CertStep::Summand { inclusion, .. }) = cert.steps.last_mut() {
        inclusion.comps[0].entries[0][0] = d.gamma_algebra().zero();
    }
    let r = verify_sod(&d.k_objects, &cert).unwrap();
    assert!(r.certificate.failed());
}
