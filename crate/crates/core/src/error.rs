use thiserror::Error;

use crate::rootsys::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root datum {label}; supported: A1, A2, A3, A4, B2, B3, B4, C3, C4, D4, G2")]
    UnsupportedType { label: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("truncation windows are incompatible: {0}")]
    WindowMismatch(String),

    #[error("insufficient window depth: {0}")]
    InsufficientDepth(String),

    #[error("restricted character provider (modulus {modulus}) has no entry for {}", format_weights(.missing))]
    ProviderGap { modulus: u64, missing: Vec<Weight> },

    #[error("recursion limit {limit} reached before the expansion of {lambda} terminated")]
    RecursionLimit { limit: u32, lambda: Weight },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_weights(ws: &[Weight]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
}
