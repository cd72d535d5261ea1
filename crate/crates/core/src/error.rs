use thiserror::Error;

/// Errors surfaced by the numeration, automata, logic, and guessing layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("malformed symbol {sym} for arity {arity}")]
    BadSymbol { sym: usize, arity: usize },

    #[error("determinization exceeded the cap of {cap} subset states")]
    DeterminizeCap { cap: usize },

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unknown statement kind `{0}`")]
    UnknownStatement(String),

    #[error("unresolved automaton name `{0}`")]
    UnresolvedName(String),

    #[error("name `{0}` is already defined")]
    Redefined(String),

    #[error("call to `{name}` expects {expected} arguments, got {got}")]
    CallArity {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("numeration tag `{0}` is not supported (only `msd_trib`)")]
    BadNumeration(String),

    #[error("guess failed: {0}")]
    Guess(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("bad automaton file: {0}")]
    Format(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
