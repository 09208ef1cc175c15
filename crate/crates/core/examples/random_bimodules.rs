//! Seeded random bimodules over F_5 survive glue followed by split.
use std::sync::Arc;

use perfalg::algebra::Algebra;
use perfalg::exactla::Field;
use perfalg::gluing::{check_round_trip, glue, Bimodule};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> perfalg::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let f = Field::Prime(5);
    let k = Arc::new(Algebra::ground(f));
    let kx2 = Arc::new(Algebra::truncated_polynomial(f, 2));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (a, b, name) in [(&kx2, &k, "kx2|k"), (&k, &kx2, "k|kx2"), (&kx2, &kx2, "kx2|kx2")] {
        for _ in 0..3 {
            let s = Bimodule::random(b.clone(), a.clone(), 4, &mut rng)?;
            let dim = s.dim;
            let g = glue(a.clone(), b.clone(), s)?;
            println!("{name}: dim S {dim}, dim C {}, Cartan {:?}, round trip {}", g.algebra.dim(), g.algebra.cartan_matrix()?, check_round_trip(&g)?);
        }
    }
    Ok(())
}
