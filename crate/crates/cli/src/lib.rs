//! Library side of the `midlevels` binary: command bodies that render to
//! strings, the golden tables and the verification suites.

pub mod checks;
pub mod commands;
pub mod tables;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Germ(#[from] germs::GermError),
    #[error(transparent)]
    Codec(#[from] treecodec::CodecError),
    #[error(transparent)]
    Graph(#[from] midlevels::MidlevelsError),
    #[error(transparent)]
    Lexical(#[from] lexical::LexicalError),
    #[error(transparent)]
    Hamilton(#[from] hamilton::HamiltonError),
    #[error(transparent)]
    Verify(#[from] hamilton::VerifyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
