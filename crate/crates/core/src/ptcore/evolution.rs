use crate::linalg::{eig_general_2x2, matexp_unitary, ComplexMatrix, ComplexVector};
use crate::ptcore::hamiltonian::PTHamiltonian;
use crate::{Error, Result};

/// `Σₙ |ψₙ⟩⟨ψₙ|_CPT`, which equals the identity for a CPT-orthonormal
/// eigenbasis. The bra is the dual vector `η ψₙ`.
pub fn resolution_of_identity(h: &PTHamiltonian) -> Result<ComplexMatrix> {
    let metric = h.metric()?;
    let plus = h.psi_plus().outer(&metric.dual(h.psi_plus()));
    let minus = h.psi_minus().outer(&metric.dual(h.psi_minus()));
    Ok(&plus + &minus)
}

/// `U(t) = exp(−iHt)` assembled from the numerically computed right
/// eigenvectors and their CPT duals.
pub fn evolution_operator(h: &PTHamiltonian, t: f64) -> Result<ComplexMatrix> {
    let eigensystem = eig_general_2x2(h.matrix())?;
    let metric = h.metric()?;
    let duals = eigensystem
        .right_vectors
        .iter()
        .map(|v| {
            let weight = metric.inner(v, v)?.re;
            Ok(metric.dual(v).scale((1.0 / weight).into()))
        })
        .collect::<Result<Vec<_>>>()?;
    matexp_unitary(h.matrix(), &eigensystem, &duals, t)
}

/// `U(t)·state`. Preserves the CPT norm; the conventional norm generally
/// changes when `α ≠ 0`.
pub fn pt_evolve(h: &PTHamiltonian, t: f64, state: &ComplexVector) -> Result<ComplexVector> {
    if state.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: state.dim() });
    }
    if state.norm_sqr() == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(evolution_operator(h, t)?.mul_vec(state))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ptcore::make_hamiltonian;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    #[test]
    fn zero_time_leaves_state() {
        let h = make_hamiltonian(1.0, 1.0, PI / 6.0).unwrap();
        let v = ComplexVector::new(vec![Complex64::new(0.2, 0.3), Complex64::new(-1.0, 0.5)]);
        assert!(pt_evolve(&h, 0.0, &v).unwrap().approx_eq(&v, 1e-12));
    }

    #[test]
    fn eigenstate_acquires_phase() {
        let h = make_hamiltonian(0.7, 1.2, 2.0).unwrap();
        for t in [0.4, 3.3] {
            let out = pt_evolve(&h, t, h.psi_plus()).unwrap();
            let expected = h.psi_plus().scale(Complex64::new(0.0, -h.e_plus() * t).exp());
            assert!(out.approx_eq(&expected, 1e-10));
            let out = pt_evolve(&h, t, h.psi_minus()).unwrap();
            let expected = h.psi_minus().scale(Complex64::new(0.0, -h.e_minus() * t).exp());
            assert!(out.approx_eq(&expected, 1e-10));
        }
    }

    #[test]
    fn cpt_norm_preserved_at_quarter_period() {
        let h = make_hamiltonian(1.0, 1.0, PI / 6.0).unwrap();
        let m = h.metric().unwrap();
        let t = PI / (2.0 * 3f64.sqrt());
        assert!((h.gap() * t - PI / 2.0).abs() < 1e-15);
        let v = ComplexVector::basis(2, 0);
        let out = pt_evolve(&h, t, &v).unwrap();
        assert!((m.norm(&v).unwrap() - m.norm(&out).unwrap()).abs() < 1e-10);
        // The conventional norm is not conserved.
        assert!((v.norm() - out.norm()).abs() > 1e-3);
    }

    #[test]
    fn identity_resolution() {
        let h = make_hamiltonian(1.0, 1.0, PI / 6.0).unwrap();
        assert!(resolution_of_identity(&h).unwrap().approx_eq(&ComplexMatrix::identity(2), 1e-12));
    }

    #[test]
    fn rejects_bad_states() {
        let h = make_hamiltonian(0.0, 1.0, 0.0).unwrap();
        assert_eq!(pt_evolve(&h, 1.0, &ComplexVector::zeros(2)), Err(Error::ZeroVector));
        assert!(matches!(
            pt_evolve(&h, 1.0, &ComplexVector::zeros(4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
