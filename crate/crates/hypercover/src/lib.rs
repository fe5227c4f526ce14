//! Exact combinatorics of hyperplane and polynomial covers for symmetry
//! preserving subsets of the hypercube: weight-set measures, explicit cover
//! constructions with prescribed vanishing multiplicities, exact verifiers,
//! and desk-scale brute-force oracles for minimum cover sizes and degrees.

pub mod block;
pub mod cert;
pub mod covers;
pub mod oracle;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod suites;
pub mod sym;

pub use error::{Error, Result};
