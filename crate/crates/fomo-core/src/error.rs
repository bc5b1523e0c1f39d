//! Error taxonomy shared across the crate.
//!
//! Variants map onto the CLI exit codes: config errors exit 2, format
//! errors exit 3, everything else (dimension/index/contract/refusal)
//! exits 4 except refusal, which is a config-level mismatch and exits 2.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Shape disagreement between tensors, e.g. a matmul over non-conforming
    /// operands. Names both shapes.
    #[error("dimension mismatch: {context}: {lhs:?} vs {rhs:?}")]
    Dimension {
        context: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// Out-of-range index, e.g. a class label >= K.
    #[error("index error: {0}")]
    Index(String),

    /// A caller violated an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Invalid configuration value.
    #[error("config error: {0}")]
    Config(String),

    /// Malformed external data (IDX files, checkpoint containers).
    #[error("format error: {0}")]
    Format(String),

    /// A resume was refused because the checkpoint does not match the
    /// resolved configuration.
    #[error("refused: {0}")]
    Refusal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// Process exit code for the CLI: 2 config, 3 format, 4 contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Refusal(_) => 2,
            Error::Format(_) | Error::Io(_) => 3,
            Error::Dimension { .. } | Error::Index(_) | Error::Contract(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
