//! Command-line front end: expression syntax, conversions and subcommands.

pub mod commands;
pub mod convert;
pub mod expr;

pub use commands::{run, Cli};
pub use expr::{parse, print, Expr, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Math(#[from] liouville::Error),
}

impl CliError {
    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Input(_) => "InvalidInput",
            CliError::Math(e) => e.tag(),
        }
    }

    /// 1 for mathematical errors, 2 for malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "error": self.tag(), "message": self.to_string() })
    }
}
