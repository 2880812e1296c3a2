use alloc::string::String;

/// Errors raised by precondition checks across the crate.
///
/// Search exhaustion and "no witness" outcomes are not errors; they are
/// reported through flagged result types.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid uniformity {k} for {n} vertices")]
    Uniformity { k: usize, n: u64 },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: u64, n: u64 },
    #[error("tuple is not strictly increasing or has wrong length: {0}")]
    BadTuple(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(u64),
    #[error("colour {colour} out of range (colour count {count})")]
    ColourOutOfRange { colour: u8, count: u8 },
    #[error("materialization needs {needed} tuples, cap is {cap}")]
    OverBudget { needed: u64, cap: u64 },
    #[error("empty vertex set")]
    EmptySet,
    #[error("parts overlap at vertex {0}")]
    Overlap(u32),
    #[error("equal label vectors")]
    EqualLabels,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("parameter out of range: {0}")]
    Param(String),
    #[error("witness failed verification: {0}")]
    Unverified(String),
}

pub type Result<T> = core::result::Result<T, Error>;
