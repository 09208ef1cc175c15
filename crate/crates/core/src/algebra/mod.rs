//! Finite-dimensional algebras from structure constants or bound quivers.

mod core;
mod idempotents;
mod quiver;
mod radical;

pub use self::core::{same_algebra, Algebra, AlgebraMap, Elem};
pub use idempotents::{division_test, DivisionVerdict, ProjectiveData};
pub use quiver::{Arrow, QuiverPresentation, Relation, DEFAULT_MAX_PATH_LENGTH};
pub use radical::{Ideal, SemisimpleQuotient};


