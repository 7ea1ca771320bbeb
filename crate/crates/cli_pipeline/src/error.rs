use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: expected `key = value`, got `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("`{key}`: cannot parse `{value}`")]
    BadValue { key: String, value: String },
    #[error("`{key}` {reason}")]
    Invalid { key: String, reason: String },
}

impl ConfigError {
    /// The key the error is about, if any.
    pub fn key(&self) -> Option<&str> {
        match self {
            ConfigError::UnknownKey { key, .. }
            | ConfigError::BadValue { key, .. }
            | ConfigError::Invalid { key, .. } => Some(key),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Solver(#[from] burgers::BurgersError),
    #[error(transparent)]
    Detection(#[from] edge_detect::EdgeError),
    #[error(transparent)]
    Spectral(#[from] spectral_core::SpectralError),
    #[error("bad input field: {0}")]
    Input(String),
    #[error("writing {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}
