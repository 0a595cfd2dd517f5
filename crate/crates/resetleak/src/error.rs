use thiserror::Error;

/// Errors produced when constructing or combining the library's domain types.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("entry count {got} does not fill a {dim}x{dim} matrix")]
    BadEntryCount { dim: usize, got: usize },

    #[error("matrix is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("trace deviates from 1 by {deviation:.3e}")]
    TraceNotOne { deviation: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("Bloch magnitude r = {r} lies outside the unit ball")]
    BlochMagnitude { r: f64 },

    #[error("angle {name} = {value} is out of range")]
    AngleOutOfRange { name: &'static str, value: f64 },

    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    #[error("Kraus operators do not satisfy completeness (residual {residual:.3e})")]
    KrausIncomplete { residual: f64 },

    #[error("Choi matrix is not trace preserving (residual {residual:.3e})")]
    ChoiNotTracePreserving { residual: f64 },

    #[error("probability {name} = {value} is outside [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("decay exponent {name} = {value} must be non-negative")]
    NegativeDecay { name: &'static str, value: f64 },

    #[error("gamma1 = {gamma1} exceeds 2*gamma2 = {twice_gamma2}")]
    GammaOrdering { gamma1: f64, twice_gamma2: f64 },

    #[error("equilibrium populations p0 + p1 = {sum} must equal 1")]
    PopulationSum { sum: f64 },

    #[error("one-time-pad axes are not orthogonal (dot product {dot:.3e})")]
    AxesNotOrthogonal { dot: f64 },

    #[error("state amplitudes are not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("shot count must be at least 1")]
    ShotCount,

    #[error("experiment count {got} is below the minimum of 2")]
    ExperimentCount { got: u32 },

    #[error("alpha list must not be empty")]
    EmptyAlphas,

    #[error("sweep does not contain the required alpha = {required}")]
    MissingAlpha { required: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
