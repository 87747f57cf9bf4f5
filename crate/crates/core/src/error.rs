use thiserror::Error;

/// Every failure the workbench can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cayley table must be {n}x{n}: {detail}")]
    NotSquare { n: usize, detail: String },
    #[error("Cayley table needs between 1 and {max} elements, got {n}")]
    BadOrder { n: usize, max: usize },
    #[error("table entry ({i},{j}) = {value} is out of range 0..{n}")]
    OutOfRangeEntry { i: usize, j: usize, value: usize, n: usize },
    #[error("operation is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("element {element} is out of range 0..{n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("subset is not closed under the operation: {x}*{y} = {product} escapes it")]
    NotASubsemigroup { x: usize, y: usize, product: usize },
    #[error("{kind} with parameter {n} exceeds its size limit ({limit})")]
    SizeLimit { kind: &'static str, n: usize, limit: usize },
    #[error("universe of {n} elements exceeds the enumeration bound of {max}")]
    UniverseTooLarge { n: usize, max: usize },
    #[error("operands live on different universes ({left} vs {right} elements)")]
    UniverseMismatch { left: usize, right: usize },
    #[error("collection is not a stack")]
    NotAStack,
    #[error("collection is not a filter")]
    NotAFilter,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("proper filter with empty kernel set (internal error)")]
    EmptyKernel,
    #[error("search space of {size} candidates exceeds the bound {bound}")]
    SearchSpaceTooLarge { size: u128, bound: u128 },
    #[error("instance space of {size} collections exceeds the bound {bound}")]
    SpaceTooLarge { size: u128, bound: u128 },
    #[error("unknown law id `{0}`")]
    UnknownLawId(String),
    #[error("law `{law}` has no hypothesis named `{name}`")]
    UnknownHypothesis { law: String, name: String },
    #[error("{0}")]
    Parse(String),
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
