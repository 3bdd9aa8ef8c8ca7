//! Exact linear algebra for EPW strata of Lagrangian subspaces of ⋀³V₆,
//! Lagrangian pencils, linear spaces on quadrics, integral lattices and
//! Bott pushforwards on relative Grassmannians.
//!
//! Everything is computed over ℚ (arbitrary precision) or over small finite
//! fields; no floating point enters any rank decision.

pub mod bbw;
pub mod cli;
pub mod epw;
pub mod error;
pub mod exterior;
pub mod lagrangian;
pub mod lattices;
pub mod linalg;
pub mod quadrics;
pub mod rng;

pub use error::{Error, Result};
