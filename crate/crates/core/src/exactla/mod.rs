//! Exact dense linear algebra over Q and F_p.

mod matrix;
mod poly;
mod scalar;
mod subspace;

pub use matrix::{format_vec, is_zero_vec, vec_add, vec_axpy, vec_scale, vec_sub, Echelon, Matrix};
pub use poly::Poly;
pub use scalar::{parse_rational, Field, Fp, Scalar};
pub use subspace::{BasisSolver, Subspace};

