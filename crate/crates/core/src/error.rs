use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} generators")]
    DimensionMismatch { left: usize, right: usize },
    #[error("metric has {metric} generators but operand has {operand}")]
    MetricMismatch { metric: usize, operand: usize },
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("too many generators: {0} (maximum {max})", max = crate::multivector::MAX_DIM)]
    TooManyGenerators(usize),
    #[error("generator index {index} out of range for {dim} generators")]
    GeneratorOutOfRange { index: usize, dim: usize },
    #[error("expected a pure grade-1 multivector, found grades {grades:?}")]
    NotAVector { grades: Vec<u32> },
    #[error("invalid symplectic form: {0}")]
    InvalidSymplecticForm(String),
    #[error("invalid superpotential: {0}")]
    InvalidSuperpotential(String),
    #[error("invalid Gaussian weight: {0}")]
    InvalidGaussian(String),
    #[error("identity `{name}` failed: {lhs} != {rhs}")]
    IdentityFailed { name: String, lhs: String, rhs: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
