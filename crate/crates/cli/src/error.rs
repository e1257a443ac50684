use thiserror::Error;

use crate::syntax::Pos;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: {msg}")]
    Semantic { pos: Pos, msg: String },
    #[error("{0}")]
    Core(#[from] frobgrann_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn syntax(pos: Pos, msg: impl Into<String>) -> Self {
        CliError::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    pub fn semantic(pos: Pos, msg: impl Into<String>) -> Self {
        CliError::Semantic {
            pos,
            msg: msg.into(),
        }
    }
}
