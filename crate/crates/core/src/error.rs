use thiserror::Error;

/// Errors shared by the algebra, geometry and engine layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in rational literal")]
    ZeroDenominator,

    #[error("polynomials are declared over different symbol lists")]
    SymbolMismatch,

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("no value assigned to symbol `{0}`")]
    MissingAssignment(String),

    #[error("exponent of `{symbol}` exceeds the cap {cap}")]
    ExponentOverflow { symbol: String, cap: u16 },

    #[error("derivation is not defined on symbol `{0}`")]
    UnderivableSymbol(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("connection is inconsistent with the structure constants: {0}")]
    InvalidConnection(String),

    #[error("curvature invariant violated: {0}")]
    InvalidCurvature(String),

    #[error("frame index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("expected {expected} frame coefficients, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("delta1 and delta2 are both zero; the functional is degenerate")]
    DegenerateDeltas,

    #[error("operation requires left-invariant mode: {0}")]
    JetModeRejected(String),

    #[error("algebra is not unimodular; the density-level identity does not apply")]
    NotUnimodular,

    #[error("sign precondition violated: {0}")]
    SignPrecondition(String),

    #[error("non-finite value in numeric evaluation")]
    NonFinite,

    #[error("residual does not have the expected shape: {0}")]
    ResidualShape(String),

    #[error("{0} is not the square of a rational; pick a different delta sample")]
    NotRationalSquare(String),
}

pub type Result<T> = std::result::Result<T, Error>;
