//! Model files, the expression parser, random sampling and verification
//! suites on top of `loopalg-core`.

pub mod error;
pub mod json;
pub mod parse;
pub mod sample;
pub mod suite;

pub use error::{CliError, CliResult};

use loopalg_core::catalog::{build, ModelId};
use loopalg_core::LoopModel;

/// Resolves a catalog name such as `SO_odd_Q(2)` or a path to a JSON model.
pub fn load_model(spec: &str) -> CliResult<(LoopModel, Option<ModelId>)> {
    if let Ok(id) = spec.parse::<ModelId>() {
        return Ok((build(id)?, Some(id)));
    }
    let path = std::path::Path::new(spec);
    if spec.ends_with(".json") || path.exists() {
        let text = std::fs::read_to_string(path)?;
        return Ok((json::model_from_str(&text)?, None));
    }
    Err(CliError::UnknownModel(spec.to_string()))
}
