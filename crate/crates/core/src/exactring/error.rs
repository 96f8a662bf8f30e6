use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("values belong to different symbol tables")]
    TableMismatch,
    #[error("division by the zero rational function")]
    DegenerateScalar,
    #[error("symbol `{0}` is mapped to zero but occurs with a negative exponent")]
    ZeroToNegativePower(String),
    #[error("symbol `{0}` has no image under the substitution")]
    UnmappedSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("symbol table holds at most {max} symbols, got {got}")]
    TooManySymbols { max: usize, got: usize },
}
