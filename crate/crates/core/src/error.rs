use thiserror::Error;

/// Errors produced by the set-algebra layer. Parse and evaluation errors of
/// the script language carry positions and live in [`crate::dsl::Diagnostic`]
/// instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("empty component")]
    EmptyComponent,
    #[error("inverted interval")]
    InvertedInterval,
    #[error("universe mismatch")]
    UniverseMismatch,
    #[error("tuple outside relation signature")]
    TupleOutsideSignature,
    #[error("component endpoint out of unit range: {0}")]
    EndpointOutOfRange(String),
    #[error("element '{0}' not in universe")]
    ElementNotInUniverse(String),
    #[error("duplicate element '{0}' in universe")]
    DuplicateElement(String),
    #[error("relation requires at least one domain")]
    EmptyRelationSignature,
    #[error("operator arity mismatch")]
    OperandArity,
}
