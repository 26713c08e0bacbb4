use crate::qpoly::Overflow;

/// Errors raised by parsing, validation, and the structural maps.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at position {position}: {kind}")]
    Parse { position: usize, kind: ParseErrorKind },

    #[error(transparent)]
    Overflow(#[from] Overflow),

    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error("letter {letter} exceeds alphabet size {alphabet}")]
    LetterOutOfRange { letter: u32, alphabet: u32 },

    #[error("blocks are not pairwise disjoint: {value} occurs twice")]
    Overlap { value: i64 },

    #[error("decoration failed at position {position}: {reason}")]
    Decoration { position: usize, reason: String },

    #[error("basis conversion failed at {partition:?}: {reason}")]
    Conversion { partition: Vec<usize>, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("empty block")]
    EmptyBlock,
    #[error("letter {0} repeated within a block")]
    RepeatedLetter(u32),
    #[error("malformed token {0:?}")]
    MalformedToken(String),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid { what, reason: reason.into() }
    }

    pub(crate) fn parse(position: usize, kind: ParseErrorKind) -> Self {
        Error::Parse { position, kind }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
