use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent overflow: exponents are limited to {max} per variable")]
    ExponentOverflow { max: u32 },
    #[error("too many variables: at most {max} are supported")]
    TooManyVariables { max: usize },
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("wrong extension kind: expected {expected}")]
    WrongExtensionKind { expected: &'static str },
    #[error("elements belong to different algebras")]
    ParentMismatch,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("cannot classify: {0}")]
    CannotClassify(String),
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown variable '{0}'")]
    UnknownVariable(char),
    #[error("certificate format: {0}")]
    Format(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}
