//! Exact verification of the Gerstenhaber–Giaquinto–Schack R-matrices for
//! `sl(n)`.
//!
//! The pipeline for one Belavin–Drinfeld triple:
//!
//! 1. [`triple`] enumerates and canonicalizes triples modulo isomorphism.
//! 2. [`r0`] solves for the Cartan part `r̃⁰` by exact change of basis.
//! 3. [`rmatrix`] builds `R = q^{r̃⁰} (R_s + q̂ ã) q^{r̃⁰}` as a banded operator.
//! 4. [`verify`] checks the quantum Yang–Baxter equation and the Hecke
//!    relation as identities of Laurent polynomials.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod matrix;
pub mod r0;
pub mod rmatrix;
pub mod triple;
pub mod verify;

pub use algebra::{LaurentPoly, Rational};
pub use catalog::TripleCatalog;
pub use error::{Error, Result};
pub use matrix::SmallMatrix;
pub use r0::CartanTensor;
pub use rmatrix::{construct, BandedOperator, Construction};
pub use triple::BdTriple;
pub use verify::{verify_batch, verify_triple, BatchReport, Summary, VerificationReport, VerifyOptions};
