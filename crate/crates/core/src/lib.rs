pub mod algebra;
pub mod auslander;
pub mod cli;
pub mod derived;
pub mod error;
pub mod homalg;
pub mod ncplane;
pub mod exactla;
pub mod gluing;

pub use error::{Error, Result};
