use crate::linalg::{ComplexMatrix, ComplexScalar, ComplexVector, I, ONE, ZERO};
use crate::{Error, Result};

fn check_alpha(alpha: f64) -> Result<f64> {
    let cos_alpha = alpha.cos();
    if !(cos_alpha >= 1e-12) || !alpha.is_finite() {
        return Err(Error::MetricSingular { cos_alpha });
    }
    Ok(cos_alpha)
}

/// `C = (1/cos α)·[[i sin α, 1], [1, −i sin α]]`.
pub fn c_operator(alpha: f64) -> Result<ComplexMatrix> {
    let cos_alpha = check_alpha(alpha)?;
    let i_sin = I * alpha.sin();
    Ok(ComplexMatrix::from_rows(&[[i_sin, ONE], [ONE, -i_sin]]).scale_real(1.0 / cos_alpha))
}

/// Parity: the swap matrix.
pub fn p_operator() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, ONE], [ONE, ZERO]])
}

/// Time reversal on a finite vector: entrywise complex conjugation.
pub fn t_conjugate(v: &ComplexVector) -> ComplexVector {
    v.conj()
}

/// The CPT image `C·P·T ψ`, whose plain (bilinear) dot product with `φ` is
/// the CPT inner product.
pub fn cpt_conjugate(psi: &ComplexVector, alpha: f64) -> Result<ComplexVector> {
    if psi.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: psi.dim() });
    }
    let cp = &c_operator(alpha)? * &p_operator();
    Ok(cp.mul_vec(&t_conjugate(psi)))
}

/// Metric `η` with `⟨ψ|φ⟩_CPT = ψ† η φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct CPTMetric {
    alpha: f64,
    eta: ComplexMatrix,
}

/// `η = (C·P)ᵀ`, Hermitian and positive definite for `|α| < π/2`.
pub fn cpt_metric(alpha: f64) -> Result<CPTMetric> {
    let cp = &c_operator(alpha)? * &p_operator();
    Ok(CPTMetric { alpha, eta: cp.transpose() })
}

impl CPTMetric {
    pub fn new(alpha: f64) -> Result<Self> {
        cpt_metric(alpha)
    }

    /// Conventional Euclidean metric.
    pub fn identity() -> Self {
        Self { alpha: 0.0, eta: ComplexMatrix::identity(2) }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eta(&self) -> &ComplexMatrix {
        &self.eta
    }

    pub fn inner(&self, psi: &ComplexVector, phi: &ComplexVector) -> Result<ComplexScalar> {
        cpt_inner(psi, phi, self)
    }

    pub fn norm(&self, psi: &ComplexVector) -> Result<f64> {
        cpt_norm(psi, self)
    }

    /// Dual vector `η ψ`: its conventional pairing with `φ` is `⟨ψ|φ⟩_CPT`.
    pub fn dual(&self, psi: &ComplexVector) -> ComplexVector {
        self.eta.mul_vec(psi)
    }
}

pub fn cpt_inner(psi: &ComplexVector, phi: &ComplexVector, metric: &CPTMetric) -> Result<ComplexScalar> {
    for v in [psi, phi] {
        if v.dim() != metric.eta.dim() {
            return Err(Error::DimensionMismatch { expected: metric.eta.dim(), got: v.dim() });
        }
    }
    Ok(psi.dot(&metric.eta.mul_vec(phi)))
}

pub fn cpt_norm(psi: &ComplexVector, metric: &CPTMetric) -> Result<f64> {
    let sq = cpt_inner(psi, psi, metric)?.re;
    if !(sq > 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(sq.sqrt())
}

/// `|⟨ψ|ψₙ⟩_CPT|² / (‖ψ‖²_CPT ‖ψₙ‖²_CPT)`; both norms squared so that the
/// probabilities over a CPT-orthonormal basis sum to one.
pub fn measure_probability(
    psi: &ComplexVector,
    eigenstate: &ComplexVector,
    metric: &CPTMetric,
) -> Result<f64> {
    let overlap = cpt_inner(psi, eigenstate, metric)?;
    let norm_psi = cpt_norm(psi, metric)?;
    let norm_n = cpt_norm(eigenstate, metric)?;
    Ok(overlap.norm_sqr() / (norm_psi * norm_psi * norm_n * norm_n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use crate::linalg::{hermitian_eigenvalues, pauli_x};
    use crate::ptcore::make_hamiltonian;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> ComplexScalar {
        Complex64::new(re, im)
    }

    #[test]
    fn c_at_zero_is_sigma_x() {
        assert!(c_operator(0.0).unwrap().approx_eq(&pauli_x(), 0.0));
    }

    #[test]
    fn c_squares_to_identity() {
        for alpha in [-1.4, -0.3, 0.0, 0.5, 1.2, 1.5] {
            let c = c_operator(alpha).unwrap();
            assert!((&c * &c).approx_eq(&ComplexMatrix::identity(2), 1e-12), "α = {alpha}");
        }
    }

    #[test]
    fn c_commutes_with_hamiltonian() {
        let h = make_hamiltonian(1.0, 1.0, PI / 6.0).unwrap();
        let c = c_operator(h.alpha()).unwrap();
        assert!(c.commutator(h.matrix()).approx_eq(&ComplexMatrix::zeros(2), 1e-12));
    }

    #[test]
    fn singular_metric_is_rejected() {
        assert!(matches!(c_operator(PI / 2.0), Err(Error::MetricSingular { .. })));
        assert!(matches!(cpt_metric(2.0), Err(Error::MetricSingular { .. })));
        assert!(matches!(cpt_metric(f64::NAN), Err(Error::MetricSingular { .. })));
    }

    #[test]
    fn metric_at_zero_is_identity() {
        assert_eq!(cpt_metric(0.0).unwrap().eta(), &ComplexMatrix::identity(2));
    }

    #[test]
    fn computational_basis_overlaps() {
        let alpha = PI / 6.0;
        let m = cpt_metric(alpha).unwrap();
        let (zero, one) = (ComplexVector::basis(2, 0), ComplexVector::basis(2, 1));
        let expected_diag = 1.0 / alpha.cos();
        assert!((m.inner(&zero, &zero).unwrap() - c(expected_diag, 0.0)).norm() < 1e-12);
        assert!((m.inner(&one, &one).unwrap() - c(expected_diag, 0.0)).norm() < 1e-12);
        // This convention gives −i tan α (the conjugate sign of the often-quoted i tan α).
        assert!((m.inner(&zero, &one).unwrap() - c(0.0, -alpha.tan())).norm() < 1e-12);
        assert!((m.inner(&one, &zero).unwrap() - c(0.0, alpha.tan())).norm() < 1e-12);
    }

    #[test]
    fn metric_matches_cpt_image_dot_product() {
        let alpha = 0.9;
        let m = cpt_metric(alpha).unwrap();
        let psi = ComplexVector::new(vec![c(0.3, -1.2), c(0.7, 0.4)]);
        let phi = ComplexVector::new(vec![c(-0.5, 0.1), c(2.0, -0.6)]);
        let image = cpt_conjugate(&psi, alpha).unwrap();
        let bilinear: ComplexScalar = image.iter().zip(phi.iter()).map(|(a, b)| a * b).sum();
        assert!((bilinear - m.inner(&psi, &phi).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn metric_is_hermitian_positive_definite() {
        let mut alpha = -(PI / 2.0 - 0.01);
        while alpha <= PI / 2.0 - 0.01 {
            let eta = cpt_metric(alpha).unwrap().eta().clone();
            assert!(eta.is_hermitian(1e-14));
            let values = hermitian_eigenvalues(&eta).unwrap();
            assert!(values[1] > 0.0, "α = {alpha}: {values:?}");
            alpha += 0.05;
        }
    }

    #[test]
    fn eigenstates_are_cpt_orthonormal() {
        let h = make_hamiltonian(1.0, 1.0, PI / 6.0).unwrap();
        let m = h.metric().unwrap();
        let (p, q) = (h.psi_plus(), h.psi_minus());
        assert!((m.inner(p, p).unwrap() - ONE).norm() < 1e-12);
        assert!((m.inner(q, q).unwrap() - ONE).norm() < 1e-12);
        assert!(m.inner(p, q).unwrap().norm() < 1e-12);
        assert!(m.inner(q, p).unwrap().norm() < 1e-12);
    }

    #[test]
    fn conventional_inner_product_at_zero() {
        let m = cpt_metric(0.0).unwrap();
        let v = m.inner(&ComplexVector::basis(2, 0), &ComplexVector::basis(2, 1)).unwrap();
        assert_eq!(v, ZERO);
        assert!(matches!(
            m.inner(&ComplexVector::zeros(3), &ComplexVector::zeros(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn norms() {
        let h = make_hamiltonian(1.0, 1.0, PI / 6.0).unwrap();
        let m = h.metric().unwrap();
        assert!((cpt_norm(h.psi_plus(), &m).unwrap() - 1.0).abs() < 1e-12);
        let expected = (1.0 / (PI / 6.0).cos()).sqrt();
        assert!((expected - 1.074_569_931_823_541_2).abs() < 1e-12);
        assert!((cpt_norm(&ComplexVector::basis(2, 0), &m).unwrap() - expected).abs() < 1e-12);
        let v = ComplexVector::from_real(&[0.6, 0.8]);
        assert!((cpt_norm(&v, &CPTMetric::identity()).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(cpt_norm(&ComplexVector::zeros(2), &m), Err(Error::ZeroVector));
    }

    #[test]
    fn probabilities() {
        let h = make_hamiltonian(0.6, 1.0, 1.0).unwrap();
        let m = h.metric().unwrap();
        let (p, q) = (h.psi_plus(), h.psi_minus());
        assert!((measure_probability(p, p, &m).unwrap() - 1.0).abs() < 1e-12);
        assert!(measure_probability(p, q, &m).unwrap().abs() < 1e-12);
        let sum = p + q;
        assert!((measure_probability(&sum, p, &m).unwrap() - 0.5).abs() < 1e-12);
        assert_eq!(
            measure_probability(&ComplexVector::zeros(2), p, &m),
            Err(Error::ZeroVector)
        );
    }
}
