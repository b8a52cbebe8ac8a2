//! Simulation of PT-symmetric two-level systems and the entanglement of
//! bipartite states when one party evolves under a local PT-symmetric
//! unitary.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: small dense complex matrices, eigensolvers for 2×2 and
//!   Hermitian n×n, spectral matrix exponentials, entropy and trace distance.
//! - [`ptcore`]: validated PT-symmetric Hamiltonians, the C and P operators,
//!   the CPT metric and inner product, measurement probabilities and
//!   CPT-unitary evolution.
//! - [`composite`]: two-qubit states, conventional and CPT partial traces,
//!   entanglement entropy.
//! - [`experiments`]: the Bell-state evolution, the `Et = π/2` snapshot, the
//!   singlet mismatch and the signaling distance, each checked against its
//!   closed form.
//!
//! Tensor products are always ordered with the first (Alice) factor major:
//! basis index `2·a + b` for a two-qubit state.

pub mod composite;
pub mod error;
pub mod experiments;
pub mod linalg;
pub mod ptcore;
pub mod sampling;

pub use error::{Error, Result};

/// Absolute tolerance for precondition checks (Hermiticity, trace, biorthonormality).
pub const PRECONDITION_TOL: f64 = 1e-10;
/// Absolute tolerance for cross-checks between two independent computations.
pub const ORACLE_TOL: f64 = 1e-10;
/// Absolute tolerance for identities that hold exactly in exact arithmetic.
pub const EXACT_TOL: f64 = 1e-12;
