use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate spectrum: eigenvalue gap {gap:e} below 1e-12")]
    DegenerateSpectrum { gap: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("eigenbasis is incomplete or not biorthonormal (max deviation {deviation:e})")]
    IncompleteBasis { deviation: f64 },

    #[error("not a density matrix: {reason}")]
    NotDensityMatrix { reason: String },

    #[error("PT symmetry is broken: s² = {s_squared} ≤ r² sin²θ = {bound}")]
    BrokenPTSymmetry { s_squared: f64, bound: f64 },

    #[error("energy gap {gap:e} below 1e-12")]
    DegenerateGap { gap: f64 },

    #[error("CPT metric is singular: cos α = {cos_alpha:e}")]
    MetricSingular { cos_alpha: f64 },

    #[error("zero vector has no normalisation")]
    ZeroVector,

    #[error("K(t) denominator vanishes at α = {alpha}, Et = {et}")]
    DenominatorVanishes { alpha: f64, et: f64 },

    #[error("basis vectors are linearly dependent")]
    SingularBasis,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invariant violated: {check} (deviation {deviation:e})")]
    InvariantViolation { check: String, deviation: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
