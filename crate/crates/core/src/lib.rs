//! Exact Jucys–Murphy spectra, wheel Laurent polynomials and center/block
//! analysis for Birman–Murakami–Wenzl algebras `B_n(q,t)`.

pub mod blocks;
pub mod center;
pub mod contentfn;
pub mod error;
pub mod idempotents;
pub mod linalg;
pub mod partitions;
pub mod scalars;
pub mod tableaux;
pub mod wheelpoly;

pub use error::{Error, Result};
