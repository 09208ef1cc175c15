use std::sync::Arc;

use perfalg::algebra::Algebra;
use perfalg::cli::suite::fixture_algebra;
use perfalg::derived::{derived_hom, PerfComplex};
use perfalg::exactla::{Field, Matrix, Scalar};
use perfalg::gluing::{check_round_trip, glue, integer_determinant, kronecker, Bimodule};
use perfalg::homalg::{ext_dims, minimal_resolution, random_module};
use perfalg::ncplane::{gamma_cubic, sklyanin_tensor, Side};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime(5)), Just(Field::Prime(7))]
}

fn matrix(f: Field, r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..=4, r * c)
        .prop_map(move |v| Matrix::from_rows(f, c, v.chunks(c).map(|row| row.iter().map(|&x| f.from_i64(x)).collect()).collect()))
}

fn square_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (field(), 1usize..5).prop_flat_map(|(f, n)| (matrix(f, n, n), matrix(f, n, n)))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..5, 1usize..6).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in any_matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in square_pair()) {
        prop_assert_eq!(a.mul(&b).determinant(), a.determinant() * b.determinant());
        prop_assert_eq!(a.inverse().is_some(), !a.determinant().is_zero());
    }

    #[test]
    fn opposite_is_an_involution(n in 1usize..5, p in prop_oneof![Just(0u32), Just(3), Just(5)]) {
        let f = if p == 0 { Field::Rationals } else { Field::Prime(p) };
        let h = Algebra::quaternion(f, -1, -3).unwrap();
        let a = Algebra::truncated_polynomial(f, n).tensor_product(&h).unwrap();
        prop_assert!(a.opposite().opposite().same_structure(&a));
        prop_assert_eq!(a.dim(), a.radical().unwrap().dim() + a.semisimple_quotient().unwrap().algebra.dim());
    }

    #[test]
    fn cubic_matches_closed_form(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, pt in prop::array::uniform3(-3i64..=3)) {
        let q = Field::Rationals;
        let Ok(t) = sklyanin_tensor(q, &q.from_i64(a), &q.from_i64(b), &q.from_i64(c)) else { return Ok(()) };
        let cubic = gamma_cubic(&t, Side::V);
        // (a^3 + b^3 + c^3) xyz - abc (x^3 + y^3 + z^3), up to a nonzero scalar
        let mut want = vec![q.zero(); 10];
        for w in &mut want[..3] {
            *w = q.from_i64(-a * b * c);
        }
        want[9] = q.from_i64(a.pow(3) + b.pow(3) + c.pow(3));
        let normalize = |v: &[Scalar]| -> Vec<Scalar> {
            match v.iter().find(|x| !x.is_zero()) {
                Some(lead) => { let inv = lead.inv(); v.iter().map(|x| x.clone() * inv.clone()).collect() }
                None => v.to_vec(),
            }
        };
        prop_assert_eq!(normalize(&cubic.coeffs), normalize(&want));
        let p = pt.map(|x| q.from_i64(x));
        let det = t.contraction(Side::V, &p).map(|m| m.determinant()).unwrap_or_else(|_| q.zero());
        prop_assert_eq!(cubic.evaluate(&p), det);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn glue_then_split(seed in any::<u64>(), pick in 0usize..4) {
        let f = Field::Prime(5);
        let k = Arc::new(Algebra::ground(f));
        let kx2 = Arc::new(Algebra::truncated_polynomial(f, 2));
        let kron = kronecker(f);
        let (a, b) = [(&kx2, &k), (&k, &kx2), (&kron, &kx2), (&kx2, &kron)][pick];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = Bimodule::random(b.clone(), a.clone(), 4, &mut rng).unwrap();
        prop_assert!((1..=4).contains(&s.dim));
        let g = glue(a.clone(), b.clone(), s).unwrap();
        prop_assert_eq!(g.algebra.dim(), a.dim() + b.dim() + g.s.dim);
        prop_assert!(check_round_trip(&g).unwrap());
        let det = |x: &Algebra| integer_determinant(&x.cartan_matrix().unwrap());
        prop_assert_eq!(det(&g.algebra), det(&g.a) * det(&g.b));
    }

    #[test]
    fn derived_hom_of_resolutions_is_ext(seed in any::<u64>(), which in 0usize..3) {
        let a = fixture_algebra(["kronecker.json", "a3rel.json", "plane.json"][which]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, 5, &mut rng).unwrap();
        let n = random_module(&a, 5, &mut rng).unwrap();
        let x = PerfComplex::from_resolution(&minimal_resolution(&m, 10).unwrap());
        let y = PerfComplex::from_resolution(&minimal_resolution(&n, 10).unwrap());
        let prof = derived_hom(&x, &y).unwrap();
        let ext = ext_dims(&m, &n, 4).unwrap();
        for (l, e) in ext.iter().enumerate() {
            prop_assert_eq!(prof.get(l as i64), *e);
        }
        prop_assert!(prof.dims.keys().all(|&l| (0..=4).contains(&l)));
    }

    #[test]
    fn shifts_move_profiles(seed in any::<u64>(), s in -2i64..=2, t in -2i64..=2) {
        let a = fixture_algebra("a3rel.json").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, 4, &mut rng).unwrap();
        let n = random_module(&a, 4, &mut rng).unwrap();
        let x = PerfComplex::from_resolution(&minimal_resolution(&m, 10).unwrap());
        let y = PerfComplex::from_resolution(&minimal_resolution(&n, 10).unwrap());
        let base = derived_hom(&x, &y).unwrap();
        let moved = derived_hom(&x.shift(s), &y.shift(t)).unwrap();
        for l in -6..6 {
            prop_assert_eq!(moved.get(l), base.get(l + t - s));
        }
    }
}
