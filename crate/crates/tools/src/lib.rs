//! File formats, per-ideal reports, random verification sweeps and the
//! parallel Gröbner order sweep behind the `lct` binary.

pub mod error;
pub mod format;
pub mod frontend;
pub mod random;
pub mod report;

pub use error::ToolError;
