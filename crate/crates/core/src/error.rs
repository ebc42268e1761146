use alloc::string::String;

use crate::scalar::Ring;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: Ring, right: Ring },

    #[error("scalar is not invertible in its ring")]
    NonInvertible,

    #[error("cannot parse scalar `{0}`")]
    InvalidScalar(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid Hopf data: {0}")]
    InvalidHopfData(String),

    #[error("invalid loop model: {0}")]
    InvalidModel(String),

    #[error("rewriting did not terminate within {steps} steps")]
    PresentationDiverges { steps: usize },

    #[error("degree {degree} has an infinite-dimensional piece (unbounded generator `{generator}`)")]
    InfiniteDegreePiece { degree: i64, generator: String },

    #[error("operation requires field coefficients, got {0}")]
    UnsupportedRing(Ring),

    #[error("operation not supported for this presentation: {0}")]
    UnsupportedPresentation(String),

    #[error("generator `{0}` has no coproduct data")]
    MissingCoproduct(String),

    #[error("derivation path unavailable: {0}")]
    DerivationPathUnavailable(String),

    #[error("input element is not homogeneous")]
    NonHomogeneous,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("primitive index {0} out of range")]
    UnknownPrimitive(usize),
}
