use alloc::boxed::Box;
use alloc::string::String;

use crate::multiplicities::HilbertTable;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty generator set")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("the unit ideal has no finite threshold or multiplicities")]
    UnitIdeal,
    #[error("ideal does not define an isolated zero: colength is infinite")]
    InfiniteColength,
    #[error("value must be positive: {0}")]
    NonPositive(String),
    #[error("value must be nonnegative: {0}")]
    Negative(String),
    #[error("input must be sorted ascending")]
    Unsorted,
    #[error("invalid multiplicity sequence: {0}")]
    InvalidSequence(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("minorant degenerate: maximizing point has a zero coordinate at index {0}")]
    MinorantDegenerate(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("Hilbert fit did not stabilize up to base {reached}")]
    UnstableFit { reached: u32, partial: Box<HilbertTable> },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("variable index x{index} out of range for n = {n}")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("generator has a nonzero constant term (unit in the local ring)")]
    NonzeroConstantTerm,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("linear program is infeasible")]
    Infeasible,
}
