//! Two-qubit pure states, partial traces and entanglement entropy.
//!
//! Amplitudes are Alice-major: the basis state `|a⟩|b⟩` sits at index
//! `2·a + b`.

use num_complex::Complex64;

use crate::linalg::{
    density_spectrum, maximally_mixed, spectrum_entropy, tensor, trace_distance, ComplexMatrix,
    ComplexScalar, ComplexVector, ZERO,
};
use crate::ptcore::CPTMetric;
use crate::{Error, Result, ORACLE_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Which inner product was used on Alice's side when tracing her out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WorldTag {
    Conventional,
    CptAlice,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    amplitudes: ComplexVector,
    label_a: String,
    label_b: String,
    norm: f64,
}

impl BipartiteState {
    pub fn new(amplitudes: ComplexVector, label_a: impl Into<String>, label_b: impl Into<String>) -> Result<Self> {
        if amplitudes.dim() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, got: amplitudes.dim() });
        }
        let norm = amplitudes.norm();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            amplitudes,
            label_a: label_a.into(),
            label_b: label_b.into(),
            norm,
        })
    }

    pub fn from_amplitudes(amplitudes: ComplexVector) -> Result<Self> {
        Self::new(amplitudes, "Alice", "Bob")
    }

    /// `(|00⟩ + |11⟩)/√2`.
    pub fn bell_phi_plus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::from_amplitudes(ComplexVector::from_real(&[h, 0.0, 0.0, h])).expect("nonzero")
    }

    /// `(|01⟩ − |10⟩)/√2`.
    pub fn singlet() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::from_amplitudes(ComplexVector::from_real(&[0.0, h, -h, 0.0])).expect("nonzero")
    }

    pub fn product(a: &ComplexVector, b: &ComplexVector) -> Result<Self> {
        if a.dim() != 2 || b.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: a.dim().max(b.dim()) });
        }
        Self::from_amplitudes(tensor(a, b))
    }

    pub fn amplitudes(&self) -> &ComplexVector {
        &self.amplitudes
    }

    pub fn label_a(&self) -> &str {
        &self.label_a
    }

    pub fn label_b(&self) -> &str {
        &self.label_b
    }

    /// Conventional norm of the stored amplitudes.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn normalized(&self) -> Self {
        Self {
            amplitudes: self.amplitudes.scale((1.0 / self.norm).into()),
            label_a: self.label_a.clone(),
            label_b: self.label_b.clone(),
            norm: 1.0,
        }
    }

    /// Coefficient matrix `M[a][b]` with `|ψ⟩ = Σ M[a][b] |a⟩|b⟩`.
    pub fn coefficient_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::new(2, self.amplitudes.entries().to_vec()).expect("4 amplitudes")
    }

    /// Applies `a ⊗ b`.
    pub fn apply_local(&self, a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Self> {
        let amplitudes = tensor(a, b).mul_vec(&self.amplitudes);
        Self::new(amplitudes, self.label_a.clone(), self.label_b.clone())
    }

    /// `|ψ⟩⟨ψ|` for the conventionally normalised state.
    pub fn density_matrix(&self) -> ComplexMatrix {
        self.normalized().amplitudes.projector()
    }
}

/// Spectrum and entropy of a one-qubit reduced state.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    pub reduced_state: ComplexMatrix,
    /// Descending.
    pub eigenvalues: [f64; 2],
    pub entropy_bits: f64,
    pub trace_distance_to_mixed: f64,
    pub world_tag: WorldTag,
}

impl EntanglementReport {
    pub fn from_reduced_state(reduced_state: ComplexMatrix, world_tag: WorldTag) -> Result<Self> {
        if reduced_state.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: reduced_state.dim() });
        }
        let values = density_spectrum(&reduced_state)?;
        let eigenvalues = [values[0], values[1]];
        let entropy_bits = spectrum_entropy(&eigenvalues, 2.0);
        let trace_distance_to_mixed = trace_distance(&reduced_state, &maximally_mixed(2))?;
        Ok(Self {
            reduced_state,
            eigenvalues,
            entropy_bits,
            trace_distance_to_mixed,
            world_tag,
        })
    }

    /// `(λ₊ − λ₋)/2`.
    pub fn half_gap(&self) -> f64 {
        0.5 * (self.eigenvalues[0] - self.eigenvalues[1])
    }
}

/// `⟨ψ|φ⟩` under the product metric `η_A ⊗ η_B`.
pub fn joint_cpt_inner(
    psi: &BipartiteState,
    phi: &BipartiteState,
    metric_a: &CPTMetric,
    metric_b: &CPTMetric,
) -> Result<ComplexScalar> {
    let eta = tensor(metric_a.eta(), metric_b.eta());
    if eta.dim() != psi.amplitudes.dim() {
        return Err(Error::DimensionMismatch { expected: psi.amplitudes.dim(), got: eta.dim() });
    }
    Ok(psi.amplitudes.dot(&eta.mul_vec(&phi.amplitudes)))
}

/// Kraus operator `⟨e| ⊗ I` (or `I ⊗ ⟨e|`) as a 2×4 row-major array.
fn kraus_element(e: &ComplexVector, traced: Subsystem) -> [[ComplexScalar; 4]; 2] {
    let mut k = [[ZERO; 4]; 2];
    for kept in 0..2 {
        for t in 0..2 {
            let col = match traced {
                Subsystem::A => 2 * t + kept,
                Subsystem::B => 2 * kept + t,
            };
            k[kept][col] = e[t].conj();
        }
    }
    k
}

/// `Σᵢ Eᵢ ρ Eᵢ†` with `Eᵢ = ⟨eᵢ| ⊗ I` (tracing A) or `I ⊗ ⟨eᵢ|` (tracing B)
/// for a conventionally orthonormal basis `{eᵢ}` of the traced qubit.
pub fn partial_trace_kraus(
    rho_ab: &ComplexMatrix,
    traced: Subsystem,
    basis: &[ComplexVector; 2],
) -> Result<ComplexMatrix> {
    if rho_ab.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: rho_ab.dim() });
    }
    let mut out = ComplexMatrix::zeros(2);
    for e in basis {
        let k = kraus_element(e, traced);
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = ZERO;
                for m in 0..4 {
                    if k[i][m] == ZERO {
                        continue;
                    }
                    for n in 0..4 {
                        acc += k[i][m] * rho_ab[(m, n)] * k[j][n].conj();
                    }
                }
                out[(i, j)] += acc;
            }
        }
    }
    Ok(out)
}

/// Conventional partial trace of a two-qubit density matrix.
pub fn partial_trace_conventional(rho_ab: &ComplexMatrix, traced: Subsystem) -> Result<ComplexMatrix> {
    if rho_ab.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: rho_ab.dim() });
    }
    let deviation = rho_ab.hermitian_deviation();
    if deviation > crate::PRECONDITION_TOL {
        return Err(Error::NotDensityMatrix {
            reason: format!("not Hermitian (deviation {deviation:e})"),
        });
    }
    let trace = rho_ab.trace();
    if (trace - Complex64::new(1.0, 0.0)).norm() > crate::PRECONDITION_TOL {
        return Err(Error::NotDensityMatrix { reason: format!("trace {trace} is not 1") });
    }
    let computational = [ComplexVector::basis(2, 0), ComplexVector::basis(2, 1)];
    partial_trace_kraus(rho_ab, traced, &computational)
}

/// Bob's reduced state when Alice's overlaps are taken in the CPT inner
/// product: expanding `|ψ⟩ = Σᵢ |aᵢ⟩ ⊗ |χᵢ⟩` over `basis_a`,
/// `ρ_B ∝ Σᵢⱼ ⟨aⱼ|aᵢ⟩_CPT |χᵢ⟩⟨χⱼ|`, rescaled to unit trace.
///
/// The result does not depend on which (linearly independent) basis is used.
pub fn partial_trace_cpt(
    psi: &BipartiteState,
    metric_a: &CPTMetric,
    basis_a: &[ComplexVector; 2],
) -> Result<ComplexMatrix> {
    if basis_a.iter().any(|v| v.dim() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, got: 0 });
    }
    let basis = ComplexMatrix::from_columns(basis_a);
    let inverse = basis.inverse_2x2().ok_or(Error::SingularBasis)?;
    // Row i of B⁻¹M holds the Bob vector χᵢ paired with basis vector aᵢ.
    let chi = &inverse * &psi.coefficient_matrix();
    let bob: Vec<ComplexVector> = (0..2)
        .map(|i| ComplexVector::new(vec![chi[(i, 0)], chi[(i, 1)]]))
        .collect();

    let mut rho = ComplexMatrix::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            let overlap = metric_a.inner(&basis_a[j], &basis_a[i])?;
            rho = &rho + &bob[i].outer(&bob[j]).scale(overlap);
        }
    }
    let trace = rho.trace().re;
    if !(trace > 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(rho.scale_real(1.0 / trace))
}

/// Entropy of a pure state across a `dim_a | dim_b` cut (Alice-major
/// amplitudes), via the spectrum of `M M†`.
pub fn pure_state_entropy(amplitudes: &ComplexVector, dim_a: usize, dim_b: usize, log_base: f64) -> Result<f64> {
    if amplitudes.dim() != dim_a * dim_b {
        return Err(Error::DimensionMismatch { expected: dim_a * dim_b, got: amplitudes.dim() });
    }
    let psi = amplitudes.normalized()?;
    let mut rho_a = ComplexMatrix::zeros(dim_a);
    for a in 0..dim_a {
        for a2 in 0..dim_a {
            rho_a[(a, a2)] = (0..dim_b)
                .map(|b| psi[a * dim_b + b] * psi[a2 * dim_b + b].conj())
                .sum();
        }
    }
    crate::linalg::von_neumann_entropy(&rho_a, log_base)
}

/// `ψ ⊗ ψ` reordered so both of Alice's qubits come first: the returned
/// 16-vector is indexed `(a₁a₂)·4 + (b₁b₂)`, ready for a 4 | 4 cut.
pub fn two_copy_state(psi: &BipartiteState) -> ComplexVector {
    let single = psi.normalized();
    let pair = tensor(single.amplitudes(), single.amplitudes());
    let mut out = ComplexVector::zeros(16);
    for a1 in 0..2 {
        for b1 in 0..2 {
            for a2 in 0..2 {
                for b2 in 0..2 {
                    let src = ((a1 * 2 + b1) * 4) + (a2 * 2 + b2);
                    let dst = ((a1 * 2 + a2) * 4) + (b1 * 2 + b2);
                    out[dst] = pair[src];
                }
            }
        }
    }
    out
}

/// Entanglement entropy of a pure two-qubit state from Bob's conventional
/// reduced state; also checks that Alice's reduced state has the same entropy.
pub fn entanglement_entropy(psi: &BipartiteState) -> Result<EntanglementReport> {
    let rho = psi.density_matrix();
    let rho_b = partial_trace_conventional(&rho, Subsystem::A)?;
    let rho_a = partial_trace_conventional(&rho, Subsystem::B)?;
    let report = EntanglementReport::from_reduced_state(rho_b, WorldTag::Conventional)?;
    let other = EntanglementReport::from_reduced_state(rho_a, WorldTag::Conventional)?;
    let deviation = (report.entropy_bits - other.entropy_bits).abs();
    if deviation > ORACLE_TOL {
        return Err(Error::InvariantViolation {
            check: "entropy of ρ_A equals entropy of ρ_B".into(),
            deviation,
        });
    }
    Ok(report)
}
