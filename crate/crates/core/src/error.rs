use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter name `{0}`")]
    InvalidLetter(String),
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relation side is empty")]
    EmptySide,
    #[error("relation uses a letter outside the alphabet")]
    ForeignLetter,
    #[error("relation has identical sides")]
    TrivialRelation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("empty side of a relation")]
    EmptySide,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("invalid letter name `{0}`")]
    InvalidLetter(String),
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("relation has identical sides")]
    TrivialRelation,
    #[error("bad pseudolength: {0}")]
    PseudoLength(String),
}

/// Parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("step {index}: {reason}")]
    InvalidStep { index: usize, reason: String },
    #[error("step {index}: recorded word does not match replay")]
    Mismatch { index: usize },
    #[error("trace line {line}: {reason}")]
    Format { line: usize, reason: String },
}
