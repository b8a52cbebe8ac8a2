use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::linalg::{ComplexMatrix, ComplexVector};
use crate::ptcore::metric::{cpt_metric, CPTMetric};
use crate::{Error, Result};

/// Unbroken PT-symmetric Hamiltonian `[[r e^{iθ}, s], [s, r e^{−iθ}]]` with
/// its derived angle, energies and CPT-normalised eigenstates.
#[derive(Debug, Clone, PartialEq)]
pub struct PTHamiltonian {
    r: f64,
    s: f64,
    theta: f64,
    matrix: ComplexMatrix,
    alpha: f64,
    e_plus: f64,
    e_minus: f64,
    psi_plus: ComplexVector,
    psi_minus: ComplexVector,
}

/// Validates `(r, s, θ)` and builds the Hamiltonian.
///
/// `s` must be strictly positive: for `s < 0` the roles of the two
/// eigenvector formulas swap relative to `E±`.
pub fn make_hamiltonian(r: f64, s: f64, theta: f64) -> Result<PTHamiltonian> {
    if !(r.is_finite() && s.is_finite() && theta.is_finite()) {
        return Err(Error::InvalidParameter("r, s and θ must be finite".into()));
    }
    if s <= 0.0 {
        return Err(Error::InvalidParameter(format!("coupling s = {s} must be positive")));
    }
    let s_squared = s * s;
    let bound = (r * theta.sin()).powi(2);
    if s_squared <= bound {
        return Err(Error::BrokenPTSymmetry { s_squared, bound });
    }

    let root = (s_squared - bound).sqrt();
    let gap = 2.0 * root;
    if gap < 1e-12 {
        return Err(Error::DegenerateGap { gap });
    }
    let alpha = (r * theta.sin() / s).asin();
    let e_plus = r * theta.cos() + root;
    let e_minus = r * theta.cos() - root;

    let matrix = ComplexMatrix::from_rows(&[
        [Complex64::from_polar(r, theta), Complex64::new(s, 0.0)],
        [Complex64::new(s, 0.0), Complex64::from_polar(r, -theta)],
    ]);
    let norm = 1.0 / (2.0 * alpha.cos()).sqrt();
    let half = Complex64::from_polar(1.0, alpha / 2.0);
    let psi_plus = ComplexVector::new(vec![half, half.conj()]).scale(norm.into());
    let psi_minus = ComplexVector::new(vec![half.conj(), -half]).scale(norm.into());

    Ok(PTHamiltonian {
        r,
        s,
        theta,
        matrix,
        alpha,
        e_plus,
        e_minus,
        psi_plus,
        psi_minus,
    })
}

impl PTHamiltonian {
    pub fn new(r: f64, s: f64, theta: f64) -> Result<Self> {
        make_hamiltonian(r, s, theta)
    }

    /// Representative Hamiltonian for a given non-Hermiticity angle:
    /// `s = 1`, `θ = π/2`, `r = sin α`, so `E± = ±cos α`.
    pub fn for_alpha(alpha: f64) -> Result<Self> {
        if !(alpha.abs() < FRAC_PI_2) {
            return Err(Error::MetricSingular { cos_alpha: alpha.cos() });
        }
        make_hamiltonian(alpha.sin(), 1.0, FRAC_PI_2)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Non-Hermiticity angle, `sin α = (r/s) sin θ`, principal branch.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn e_plus(&self) -> f64 {
        self.e_plus
    }

    pub fn e_minus(&self) -> f64 {
        self.e_minus
    }

    /// `E₊ − E₋`.
    pub fn gap(&self) -> f64 {
        self.e_plus - self.e_minus
    }

    pub fn psi_plus(&self) -> &ComplexVector {
        &self.psi_plus
    }

    pub fn psi_minus(&self) -> &ComplexVector {
        &self.psi_minus
    }

    pub fn metric(&self) -> Result<CPTMetric> {
        cpt_metric(self.alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli_x;
    use std::f64::consts::PI;

    #[test]
    fn hermitian_limit_is_sigma_x() {
        let h = make_hamiltonian(0.0, 1.0, 0.0).unwrap();
        assert_eq!(h.matrix(), &pauli_x());
        assert_eq!(h.alpha(), 0.0);
        assert_eq!((h.e_plus(), h.e_minus()), (1.0, -1.0));
    }

    #[test]
    fn pi_over_six_parameters() {
        let h = make_hamiltonian(1.0, 1.0, PI / 6.0).unwrap();
        // Independent evaluation: sin α = r sin θ / √(st) = 1/2.
        assert!((h.alpha() - (0.5f64).asin()).abs() < 1e-15);
        assert!((h.alpha() - PI / 6.0).abs() < 1e-15);
        assert!((h.e_plus() - 3f64.sqrt()).abs() < 1e-15);
        assert!(h.e_minus().abs() < 1e-15);
    }

    #[test]
    fn broken_symmetry_is_rejected() {
        assert!(matches!(
            make_hamiltonian(1.0, 0.5, PI / 2.0),
            Err(Error::BrokenPTSymmetry { .. })
        ));
        // Exceptional point: s² = r² sin²θ.
        assert!(matches!(
            make_hamiltonian(1.0, 1.0, PI / 2.0),
            Err(Error::BrokenPTSymmetry { .. })
        ));
    }

    #[test]
    fn nonpositive_coupling_is_rejected() {
        assert!(matches!(make_hamiltonian(0.3, 0.0, 0.1), Err(Error::InvalidParameter(_))));
        assert!(matches!(make_hamiltonian(0.3, -1.0, 0.1), Err(Error::InvalidParameter(_))));
        assert!(matches!(make_hamiltonian(f64::NAN, 1.0, 0.1), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn tiny_gap_is_degenerate() {
        // Unbroken, but E₊ − E₋ = 2√3·1e-13 is below the gap floor.
        assert!(matches!(
            make_hamiltonian(1e-13, 2e-13, PI / 2.0),
            Err(Error::DegenerateGap { .. })
        ));
    }

    #[test]
    fn eigenstates_satisfy_eigen_equation() {
        let h = make_hamiltonian(0.8, 1.3, 1.1).unwrap();
        let m = h.matrix();
        let lhs = m.mul_vec(h.psi_plus());
        assert!(lhs.approx_eq(&h.psi_plus().scale(h.e_plus().into()), 1e-12));
        let lhs = m.mul_vec(h.psi_minus());
        assert!(lhs.approx_eq(&h.psi_minus().scale(h.e_minus().into()), 1e-12));
    }

    #[test]
    fn for_alpha_realises_requested_angle() {
        let h = PTHamiltonian::for_alpha(0.7).unwrap();
        assert!((h.alpha() - 0.7).abs() < 1e-15);
        assert!((h.gap() - 2.0 * 0.7f64.cos()).abs() < 1e-15);
        assert!(PTHamiltonian::for_alpha(PI / 2.0).is_err());
    }
}
