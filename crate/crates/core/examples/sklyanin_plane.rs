//! Point curves of quadratic three-vertex algebras.
use perfalg::exactla::Field;
use perfalg::ncplane::{check_nondegenerate, commutative_tensor, gamma_cubic, sklyanin_tensor, verify_plane, Side};

fn main() -> perfalg::Result<()> {
    let q = Field::Rationals;
    let n = |x: i64| q.from_i64(x);
    for (a, b, c) in [(1, 2, 3), (1, 1, 1), (1, -1, 0), (2, 3, -1)] {
        let t = sklyanin_tensor(q, &n(a), &n(b), &n(c))?;
        println!("sklyanin({a}, {b}, {c}): Gamma_V = {}", gamma_cubic(&t, Side::V).normalized());
    }
    let t = commutative_tensor(q);
    let r = verify_plane(&t, 20, 50, 0)?;
    println!("commutative: dim {}, Cartan {:?}, gl.dim {:?}, cubic {}", r.dim, r.cartan, r.gldim, r.cubic_v);
    for p in [5, 7] {
        println!("F_{p}: {:?}", check_nondegenerate(&commutative_tensor(Field::Prime(p)), 0, 0)?);
    }
    Ok(())
}
