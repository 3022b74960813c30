use thiserror::Error;

/// Errors raised while building or analysing mirror data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exponent matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("singular exponent matrix")]
    SingularMatrix,
    #[error("negative exponent {value} at ({row}, {col})")]
    NegativeExponent { row: usize, col: usize, value: i64 },
    #[error("row {0} of the exponent matrix is zero")]
    ZeroRow(usize),
    #[error("weight q_{index} = {value} is not positive")]
    NonPositiveWeight { index: usize, value: String },
    #[error("coefficient {index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("group element {0} is not a symmetry of the potential")]
    NotASymmetry(String),
    #[error("group element has length {got}, expected {expected}")]
    ElementLength { expected: usize, got: usize },
    #[error("group order exceeds the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("cone is not full-dimensional")]
    NotFullDimensional,
    #[error("cone computation exceeds the cap ({0})")]
    ConeCapExceeded(String),
    #[error("linear functional is not strictly positive on the cone")]
    FunctionalNotPositive,
    #[error(
        "datum is not of Calabi-Yau type: deg in M = {deg_in_m} (holds iff G lies in SL), \
         deg^v in N = {deg_dual_in_n} (holds iff the exponential grading element J lies in G)"
    )]
    NotCalabiYau { deg_in_m: bool, deg_dual_in_n: bool },
    #[error("restricted potential on variables {0:?} is degenerate")]
    DegenerateSector(Vec<usize>),
    #[error("slice degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("invalid toric data: {0}")]
    InvalidData(String),
    #[error("certificate failed independent re-verification: {0}")]
    CertificateRejected(String),
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
