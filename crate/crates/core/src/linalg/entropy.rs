//! Spectral functionals of density matrices.

use super::eigen::hermitian_eigenvalues;
use super::matrix::ComplexMatrix;
use crate::{Error, Result, PRECONDITION_TOL};

/// Checks Hermiticity and unit trace, returning the eigenvalues (descending).
fn hermitian_unit_trace(rho: &ComplexMatrix) -> Result<Vec<f64>> {
    let deviation = rho.hermitian_deviation();
    if deviation > PRECONDITION_TOL || !rho.is_finite() {
        return Err(Error::NotDensityMatrix {
            reason: format!("not Hermitian (deviation {deviation:e})"),
        });
    }
    let trace = rho.trace();
    if (trace.re - 1.0).abs() > PRECONDITION_TOL || trace.im.abs() > PRECONDITION_TOL {
        return Err(Error::NotDensityMatrix {
            reason: format!("trace {trace} is not 1"),
        });
    }
    hermitian_eigenvalues(rho)
}

/// Validates a density matrix (Hermitian, unit trace, eigenvalues ≥ −1e-10)
/// and returns its eigenvalues in descending order.
pub fn density_spectrum(rho: &ComplexMatrix) -> Result<Vec<f64>> {
    let values = hermitian_unit_trace(rho)?;
    let min = values.last().copied().unwrap_or(0.0);
    if min < -PRECONDITION_TOL {
        return Err(Error::NotDensityMatrix {
            reason: format!("negative eigenvalue {min:e}"),
        });
    }
    Ok(values)
}

/// Shannon entropy of a probability vector, `0·log 0 = 0`.
pub fn spectrum_entropy(values: &[f64], log_base: f64) -> f64 {
    let ln_base = log_base.ln();
    values
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln() / ln_base)
        .sum()
}

/// `−Σ λᵢ log λᵢ` over the spectrum of `rho`, in the given logarithm base.
pub fn von_neumann_entropy(rho: &ComplexMatrix, log_base: f64) -> Result<f64> {
    if !(log_base > 0.0 && log_base != 1.0 && log_base.is_finite()) {
        return Err(Error::InvalidParameter(format!("log base {log_base} must be positive and ≠ 1")));
    }
    let values = density_spectrum(rho)?;
    Ok(spectrum_entropy(&values, log_base))
}

/// Entropy in bits.
pub fn entropy_bits(rho: &ComplexMatrix) -> Result<f64> {
    von_neumann_entropy(rho, 2.0)
}

/// `½ Σ |eigenvalues of (ρ − σ)|`.
pub fn trace_distance(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), got: sigma.dim() });
    }
    hermitian_unit_trace(rho)?;
    hermitian_unit_trace(sigma)?;
    let diff = rho - sigma;
    let values = hermitian_eigenvalues(&diff)?;
    Ok(0.5 * values.iter().map(|x| x.abs()).sum::<f64>())
}

/// `I/n`.
pub fn maximally_mixed(dim: usize) -> ComplexMatrix {
    ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ComplexVector;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    fn snapshot(alpha: f64) -> ComplexMatrix {
        let (sa, ca) = alpha.sin_cos();
        ComplexMatrix::from_rows(&[
            [Complex64::new(1.0 + sa * ca, 0.0), Complex64::new(0.0, sa)],
            [Complex64::new(0.0, -sa), Complex64::new(1.0 - sa * ca, 0.0)],
        ])
        .scale_real(0.5)
    }

    #[test]
    fn maximally_mixed_qubit_is_one_bit() {
        assert!((entropy_bits(&maximally_mixed(2)).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn pure_projector_has_zero_entropy() {
        let psi = ComplexVector::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]);
        assert!(entropy_bits(&psi.projector()).unwrap().abs() < 1e-12);
    }

    #[test]
    fn three_quarter_mixture() {
        let expected = -0.75 * 0.75f64.log2() - 0.25 * 0.25f64.log2();
        assert!((expected - 0.811_278_124_459_132_9).abs() < 1e-15);
        let s = entropy_bits(&ComplexMatrix::diag_real(&[0.75, 0.25])).unwrap();
        assert!((s - expected).abs() < 1e-12);
        let nats = von_neumann_entropy(&ComplexMatrix::diag_real(&[0.75, 0.25]), std::f64::consts::E).unwrap();
        assert!((nats - expected * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn entropy_rejects_invalid_inputs() {
        let bad_trace = ComplexMatrix::diag_real(&[0.5, 0.6]);
        assert!(matches!(entropy_bits(&bad_trace), Err(Error::NotDensityMatrix { .. })));
        let negative = ComplexMatrix::diag_real(&[1.5, -0.5]);
        assert!(matches!(entropy_bits(&negative), Err(Error::NotDensityMatrix { .. })));
        let non_hermitian = ComplexMatrix::from_real_rows(&[[0.5, 0.1], [0.0, 0.5]]);
        assert!(matches!(entropy_bits(&non_hermitian), Err(Error::NotDensityMatrix { .. })));
        assert!(matches!(
            von_neumann_entropy(&maximally_mixed(2), 1.0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn trace_distance_basics() {
        let rho = snapshot(0.4);
        assert!(trace_distance(&rho, &rho).unwrap().abs() < 1e-15);
        let zero = ComplexVector::basis(2, 0).projector();
        let one = ComplexVector::basis(2, 1).projector();
        assert!((trace_distance(&zero, &one).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn trace_distance_snapshot_to_mixed() {
        let d = trace_distance(&maximally_mixed(2), &snapshot(PI / 6.0)).unwrap();
        assert!((d - 7f64.sqrt() / 8.0).abs() < 1e-12);
    }
}
