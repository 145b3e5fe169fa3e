use std::path::PathBuf;

use lct_core::Error as CoreError;

/// Failures of the command-line layer, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum ToolError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 2;
    pub const UNIT: i32 = 3;
    pub const INVARIANT: i32 = 4;
    pub const RESOURCE: i32 = 5;
}

impl ToolError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ToolError::Io { .. } | ToolError::Format(_) => exit::PARSE,
            ToolError::Invariant(_) => exit::INVARIANT,
            ToolError::Core(e) => core_exit_code(e),
        }
    }
}

pub fn core_exit_code(e: &CoreError) -> i32 {
    match e {
        CoreError::UnitIdeal | CoreError::NonzeroConstantTerm => exit::UNIT,
        CoreError::Resource(_) | CoreError::UnstableFit { .. } => exit::RESOURCE,
        _ => exit::PARSE,
    }
}

/// Whether the error only reflects a resource cap, not a wrong answer.
pub fn is_resource(e: &CoreError) -> bool {
    core_exit_code(e) == exit::RESOURCE
}
