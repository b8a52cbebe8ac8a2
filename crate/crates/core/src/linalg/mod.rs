//! Dense complex linear algebra for the small (2 and 4 dimensional) spaces
//! used by the rest of the crate.

mod eigen;
mod entropy;
mod expm;
mod matrix;

pub use eigen::{eig_general_2x2, eig_hermitian, hermitian_eigenvalues, EigenSystem};
pub use entropy::{
    density_spectrum, entropy_bits, maximally_mixed, spectrum_entropy, trace_distance,
    von_neumann_entropy,
};
pub use expm::matexp_unitary;
pub use matrix::{pauli_x, pauli_y, pauli_z, tensor, ComplexMatrix, ComplexScalar, ComplexVector, Kron};
pub(crate) use matrix::{I, ONE, ZERO};
