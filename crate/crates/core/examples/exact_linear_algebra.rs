//! Rank, kernel and determinant over Q and F_5, exactly.
use perfalg::exactla::{format_vec, Field, Matrix};

fn main() {
    let rows: [&[i64]; 3] = [&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]];
    for field in [Field::Rationals, Field::Prime(5)] {
        let m = Matrix::from_i64(field, &rows);
        println!("over {}: rank {}, det {}", field.name(), m.rank(), m.determinant());
        if let Some(inv) = m.inverse() {
            assert_eq!(m.mul(&inv), Matrix::identity(field, 3));
        }
    }
    // singular over F_3 only
    let m = Matrix::from_i64(Field::Prime(3), &rows);
    for v in m.kernel_basis() {
        println!("kernel over F_3: {}", format_vec(&v));
    }
    let h = Matrix::from_rows(
        Field::Rationals,
        3,
        (0..3).map(|i| (0..3).map(|j| Field::Rationals.parse(&format!("1/{}", i + j + 1)).unwrap()).collect()).collect(),
    );
    println!("det of the 3x3 Hilbert matrix: {}", h.determinant());
}
