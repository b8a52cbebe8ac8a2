//! Time-evolution operators from a biorthogonal spectral decomposition.

use num_complex::Complex64;

use super::eigen::EigenSystem;
use super::matrix::{ComplexMatrix, ComplexVector};
use crate::{Error, Result, PRECONDITION_TOL};

/// `U(t) = Σₙ e^{−iλₙt} |vₙ⟩⟨dualₙ|` for right eigenvectors `vₙ` and dual
/// vectors satisfying `⟨dualᵢ|vⱼ⟩ = δᵢⱼ`.
///
/// The dual pairing is the conventional one, so for a Hermitian `h` the duals
/// are the eigenvectors themselves; for a pseudo-Hermitian `h` with metric η
/// they are `η·vₙ` rescaled. `h` is only used to check dimensions.
pub fn matexp_unitary(
    h: &ComplexMatrix,
    eigensystem: &EigenSystem,
    dual_vectors: &[ComplexVector],
    t: f64,
) -> Result<ComplexMatrix> {
    let n = h.dim();
    let complete = eigensystem.values.len() == n
        && eigensystem.right_vectors.len() == n
        && dual_vectors.len() == n
        && eigensystem.right_vectors.iter().chain(dual_vectors).all(|v| v.dim() == n);
    if !complete {
        return Err(Error::IncompleteBasis { deviation: f64::INFINITY });
    }

    let mut deviation = 0.0f64;
    for (i, dual) in dual_vectors.iter().enumerate() {
        for (j, right) in eigensystem.right_vectors.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            deviation = deviation.max((dual.dot(right) - target).norm());
        }
    }
    if deviation > PRECONDITION_TOL || deviation.is_nan() {
        return Err(Error::IncompleteBasis { deviation });
    }

    let mut u = ComplexMatrix::zeros(n);
    for ((lambda, right), dual) in eigensystem
        .values
        .iter()
        .zip(&eigensystem.right_vectors)
        .zip(dual_vectors)
    {
        let phase = (Complex64::new(0.0, -t) * lambda).exp();
        u = &u + &right.outer(dual).scale(phase);
    }
    Ok(u)
}
