use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol {symbol} expects {expected} arguments, found {found}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("position {0} is not valid in {1}")]
    InvalidPosition(String, String),
    #[error("cannot mark variable {0}")]
    MarkVariable(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("no interpretation for symbol {0}")]
    MissingInterpretation(String),
    #[error("invalid interpretation: {0}")]
    InvalidInterpretation(String),
    #[error("variable {0} has no value")]
    UnassignedVariable(String),
    #[error("malformed certificate: {0}")]
    Certificate(String),
    #[error("no ground terms over the signature")]
    NoGroundTerms,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Distinct failure classes of the problem-file parser.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    ArityMismatch,
    VariableLhs,
    FreshRhsVariable,
    UndeclaredSymbol,
    DuplicateSymbol,
    ReservedName,
}

impl ParseErrorKind {
    pub fn code(self) -> &'static str {
        match self {
            ParseErrorKind::Syntax => "E-SYNTAX",
            ParseErrorKind::ArityMismatch => "E-ARITY",
            ParseErrorKind::VariableLhs => "E-VAR-LHS",
            ParseErrorKind::FreshRhsVariable => "E-FRESH-VAR",
            ParseErrorKind::UndeclaredSymbol => "E-UNDECLARED",
            ParseErrorKind::DuplicateSymbol => "E-DUPLICATE",
            ParseErrorKind::ReservedName => "E-RESERVED",
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{}: {line}:{col}: {message}", kind.code())]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind,
            line,
            col,
            message: message.into(),
        }
    }
}
