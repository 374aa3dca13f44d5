//! Crate-wide error type.
//!
//! Every fallible operation in the library returns [`Error`]; the CLI maps
//! these onto process exit codes (usage/parse problems exit 2, verification
//! failures exit 1).

use thiserror::Error;

/// Unified error type for constructions, embeddings, labeling, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A vertex exceeds the degree bound required by the operation.
    #[error("vertex {vertex} has degree {degree}, exceeding the bound {bound}")]
    DegreeExceeded {
        vertex: u32,
        degree: usize,
        bound: usize,
    },

    /// An input is larger than the operation's safety cap.
    #[error("input size {size} exceeds the guard cap {cap} for {what}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// A text input (graph file, label file, CLI value) could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The operation requires a forest / acyclic input.
    #[error("input graph contains a cycle through vertex {vertex}")]
    NotAcyclic { vertex: u32 },

    /// A randomized encoder gave up after the configured number of attempts.
    #[error("no admissible permutation found after {attempts} attempts (difference budget {budget})")]
    RetryExhausted { attempts: usize, budget: usize },

    /// Two labels handed to a decoder come from different schemes or parameter sets.
    #[error("label pair does not belong to one scheme instance: {msg}")]
    SchemeMismatch { msg: String },

    /// A graph falls outside the family a construction hosts.
    #[error("graph is outside the target family: {msg}")]
    FamilyMismatch { msg: String },

    /// A size-aware decoder was invoked without the family size it needs.
    #[error("decoder for scheme `{scheme}` needs the family size n, but none was supplied")]
    MissingContext { scheme: String },

    /// An argument violates a documented precondition.
    #[error("precondition violated: {msg}")]
    PreconditionViolated { msg: String },

    /// A subset-sum target lies outside the representable range.
    #[error("target {target} outside the representable range [0, {max}]")]
    TargetOutOfRange { target: u64, max: u64 },

    /// A requested cycle length cannot be embedded for the given family size.
    #[error("cycle length {length} outside the coverable range [3, {max}]")]
    LengthOutOfRange { length: usize, max: usize },

    /// Underlying I/O failure (file read/write).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for a parse error with a 1-based line number.
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Shorthand for a precondition violation.
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated { msg: msg.into() }
    }
}
