//! Exact-arithmetic toolkit for finite-dimensional algebra: quiver path
//! algebras and their quadratic quotients, finite group actions and skew
//! group algebras, gradings with covering algebras and smash products,
//! Hochschild cohomology via bar and Koszul complexes, and a set of named
//! theorem verifications runnable from the CLI.
//!
//! All arithmetic is exact (arbitrary-precision rationals or a prime field);
//! every operation is deterministic, so reports are byte-stable across runs.

pub mod action;
pub mod algebra;
pub mod document;
pub mod error;
pub mod field;
pub mod grading;
pub mod group;
pub mod hochschild;
pub mod koszul;
pub mod linalg;
pub mod quadratic;
pub mod quiver;
pub mod report;
pub mod runner;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use field::{FieldSpec, Scalar};
