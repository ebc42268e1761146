use thiserror::Error;

use crate::parse::ParseError;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] loopalg_core::Error),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("model file: {0}")]
    Model(String),

    #[error("unknown model `{0}`")]
    UnknownModel(String),

    #[error("window {lo}:{hi} exceeds the degree limit {limit}")]
    WindowTooLarge { lo: i64, hi: i64, limit: i64 },

    #[error("invalid window `{0}`, expected LO:HI")]
    BadWindow(String),

    #[error("the two delta paths disagree on {input}: eq1 = {eq1}, derivations = {deriv}")]
    PathsDisagree { input: String, eq1: String, deriv: String },
}
