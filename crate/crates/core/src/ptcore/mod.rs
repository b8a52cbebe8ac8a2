//! PT-symmetric two-level systems.
//!
//! A [`PTHamiltonian`] `[[r e^{iθ}, s], [s, r e^{−iθ}]]` with `s² > r² sin²θ`
//! has real energies `E± = r cos θ ± s cos α`, where `sin α = (r/s) sin θ`.
//! Its eigenstates are orthonormal under the CPT inner product
//! `⟨ψ|φ⟩ = [(CPT)ψ]·φ`, realised here as `ψ† η φ` with the metric
//! `η = (C·P)ᵀ = (1/cos α)·[[1, −i sin α], [i sin α, 1]]`.
//!
//! Sign convention: with this metric `⟨0|1⟩_CPT = −i tan α`. It reproduces
//! the expansion coefficients `⟨ψ₊|0⟩ = e^{iα/2}/√(2 cos α)` and friends,
//! and the Bob reduced states built in [`crate::experiments`].

mod evolution;
mod hamiltonian;
mod metric;
mod state;

pub use evolution::{evolution_operator, pt_evolve, resolution_of_identity};
pub use hamiltonian::{make_hamiltonian, PTHamiltonian};
pub use metric::{
    c_operator, cpt_conjugate, cpt_inner, cpt_metric, cpt_norm, measure_probability, p_operator,
    t_conjugate, CPTMetric,
};
pub use state::{PTQubitState, QubitBasis};
