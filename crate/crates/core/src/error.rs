use thiserror::Error;

/// Errors raised when an input violates a documented precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("trace of an empty matrix product is undefined")]
    EmptyProduct,

    #[error("matrix is not Hermitian: max |h - h†| entry is {residual:.3e} (tolerance {tol:.1e})")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("matrix trace is not 1: got {trace:.17}")]
    NotUnitTrace { trace: f64 },

    #[error("SIC overlap condition violated: worst residual {worst:.3e} at projector pair ({i}, {j})")]
    SicViolation { worst: f64, i: usize, j: usize },

    #[error("probability vector does not sum to 1: sum is {sum:.17}")]
    NotNormalized { sum: f64 },

    #[error("probability entry {index} is negative: {value:.3e}")]
    NegativeProbability { index: usize, value: f64 },

    #[error("non-finite value encountered")]
    NonFinite,

    #[error("index {index} outside the SIC outcome range 1..=9")]
    IndexOutOfRange { index: usize },

    #[error("family label eta = {eta} outside 0..=3")]
    InvalidFamily { eta: u8 },

    #[error("exceptional SIC index k = {k} outside 0..=3")]
    InvalidExceptionalIndex { k: u8 },

    #[error("unrecognized SIC selector {selector:?}: expected `hesse`, `pi6:<k>`, or `gen:<eta><sign>@<t>`")]
    BadSelector { selector: String },

    #[error("direction vector constraints violated: sum {sum:.3e}, norm² {norm2:.17}")]
    BadDirection { sum: f64, norm2: f64 },

    #[error("face direction constraints violated: m(9) = {last:.3e}, sum {sum:.3e}, norm² {norm2:.17}")]
    BadFaceDirection { last: f64, sum: f64, norm2: f64 },

    #[error("probability vector is uniform: polar direction undefined")]
    DegenerateDirection,

    #[error("probability vector has p(9) = {p9:.3e}, not on the face p(9) = 0")]
    OffFace { p9: f64 },

    #[error("direction functional F = {f:.17} lies outside [-1/sqrt(2), 1/sqrt(2)]: no state in that direction")]
    FunctionalOutOfRange { f: f64 },

    #[error("spectrum is maximally mixed: direction functional undefined")]
    MaximallyMixedSpectrum,
}

pub type Result<T> = std::result::Result<T, Error>;
