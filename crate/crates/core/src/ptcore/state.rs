use crate::linalg::{ComplexScalar, ComplexVector};
use crate::ptcore::hamiltonian::PTHamiltonian;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QubitBasis {
    /// Coordinates over `{|0⟩, |1⟩}`.
    Computational,
    /// Coordinates over the CPT-orthonormal eigenstates `{ψ₊, ψ₋}`.
    PtEigen,
}

/// A PTqubit: two amplitudes and the basis they refer to.
#[derive(Debug, Clone, PartialEq)]
pub struct PTQubitState {
    amplitudes: ComplexVector,
    basis: QubitBasis,
}

impl PTQubitState {
    pub fn new(amplitudes: ComplexVector, basis: QubitBasis) -> Result<Self> {
        if amplitudes.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: amplitudes.dim() });
        }
        Ok(Self { amplitudes, basis })
    }

    /// `a|ψ₊⟩ + b|ψ₋⟩`.
    pub fn superposition(a: ComplexScalar, b: ComplexScalar) -> Self {
        Self {
            amplitudes: ComplexVector::new(vec![a, b]),
            basis: QubitBasis::PtEigen,
        }
    }

    pub fn amplitudes(&self) -> &ComplexVector {
        &self.amplitudes
    }

    pub fn basis(&self) -> QubitBasis {
        self.basis
    }

    /// The state as a vector over `{|0⟩, |1⟩}`.
    pub fn to_computational(&self, h: &PTHamiltonian) -> ComplexVector {
        match self.basis {
            QubitBasis::Computational => self.amplitudes.clone(),
            QubitBasis::PtEigen => &h.psi_plus().scale(self.amplitudes[0])
                + &h.psi_minus().scale(self.amplitudes[1]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ptcore::make_hamiltonian;
    use num_complex::Complex64;

    #[test]
    fn eigen_coordinates_are_cpt_coefficients() {
        let h = make_hamiltonian(0.9, 1.0, 0.8).unwrap();
        let m = h.metric().unwrap();
        let (a, b) = (Complex64::new(0.3, -0.4), Complex64::new(0.5, 0.7));
        let v = PTQubitState::superposition(a, b).to_computational(&h);
        assert!((m.inner(h.psi_plus(), &v).unwrap() - a).norm() < 1e-12);
        assert!((m.inner(h.psi_minus(), &v).unwrap() - b).norm() < 1e-12);
        let norm_sq = m.norm(&v).unwrap().powi(2);
        assert!((norm_sq - (a.norm_sqr() + b.norm_sqr())).abs() < 1e-12);
    }

    #[test]
    fn computational_is_passthrough() {
        let h = make_hamiltonian(0.0, 1.0, 0.0).unwrap();
        let v = ComplexVector::from_real(&[1.0, 2.0]);
        let s = PTQubitState::new(v.clone(), QubitBasis::Computational).unwrap();
        assert_eq!(s.to_computational(&h), v);
        assert!(PTQubitState::new(ComplexVector::zeros(3), QubitBasis::PtEigen).is_err());
    }
}
