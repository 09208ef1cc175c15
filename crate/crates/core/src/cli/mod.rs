//! Documents, reports and the verbs behind the `perfalg` binary.

pub mod commands;
pub mod document;
pub mod report;
pub mod suite;

pub use commands::{GlueCheck, IdempotentSpec, TensorSpec};
pub use document::{parse_algebra, parse_bimodule, AlgebraDocument, BimoduleDocument};
pub use report::{Check, Report, Settings};
pub use suite::corpus;

#[cfg(test)]
mod tests;
