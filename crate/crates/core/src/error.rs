//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by parsing, transformation, scoring and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text was empty or whitespace-only.
    #[error("empty input")]
    EmptyInput,

    /// The text has neither a wh-word nor a fronted auxiliary.
    #[error("not a question: {0}")]
    NotAQuestion(String),

    /// The auxiliary/subject/verb slots could not be identified.
    /// The parse is refused rather than guessed.
    #[error("unsupported structure in {id}: {reason}")]
    UnsupportedStructure { id: String, reason: String },

    /// A content clause could not be mapped back to a direct question.
    #[error("clause cannot be inverted: {0}")]
    NonInvertible(String),

    /// A dataset or bank record failed to parse or violated an invariant.
    #[error("malformed record at line {line}: {reason}")]
    MalformedRecord { line: usize, reason: String },

    /// A bundled or user-supplied resource file is invalid.
    #[error("bad resource {name} at line {line}: {reason}")]
    BadResource {
        name: String,
        line: usize,
        reason: String,
    },

    /// Too few records for the requested split.
    #[error("too few records: got {got}, need at least {need}")]
    TooFewRecords { got: usize, need: usize },

    /// Corpus-level scoring was asked to run on zero pairs.
    #[error("empty corpus")]
    EmptyCorpus,

    /// ROUGE-n is undefined when the reference has fewer than n tokens.
    #[error("reference has {len} tokens, fewer than n={n}")]
    UndefinedForShortText { n: usize, len: usize },

    /// The queried entity does not occur in the question bank.
    #[error("entity not in bank: {0}")]
    EntityNotInBank(String),

    /// Index out of range for the start-pattern inventory.
    #[error("no start pattern at index {0}")]
    NoSuchPattern(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
