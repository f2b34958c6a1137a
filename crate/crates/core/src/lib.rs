//! Separability certificates and separable-volume bounds for
//! finite-dimensional quantum states.
//!
//! The crate expands density matrices in the generalized spin basis built
//! from the finite Fourier transform, and uses that expansion, the purity,
//! a concurrence lower bound and the partial transpose to certify states as
//! separable or entangled. Around those checks it provides seeded samplers
//! for random states and a Monte Carlo estimator for the fraction of
//! separable states, bracketed by closed-form lower and upper bounds.
//!
//! ```
//! use voss::certificates::{certify_all, max_entangled_state, summarize, Verdict};
//!
//! let bell = max_entangled_state(2).unwrap();
//! assert_eq!(summarize(&certify_all(&bell)), Verdict::Entangled);
//! ```
//!
//! Module map:
//!
//! - [`tensor`]: complex matrices, Kronecker products, partial trace and
//!   transpose, Hermitian eigenvalues, state validation.
//! - [`spin`]: spin matrices and the coefficient transform.
//! - [`certificates`]: the individual checks and [`certificates::certify_all`].
//! - [`sampling`]: natural, Hilbert–Schmidt and pure-state ensembles.
//! - [`volume`]: volume bounds and the Monte Carlo estimator.

pub mod certificates;
pub mod error;
pub mod sampling;
pub mod spin;
pub mod tensor;
pub mod volume;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};
pub use tensor::{ComplexMatrix, DensityMatrix, DimensionSpec};
