use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar literal `{input}`: {reason}")]
    ScalarSyntax { input: String, reason: String },
    #[error("ambient mismatch: ({n1}, {order1}) vs ({n2}, {order2})")]
    AmbientMismatch {
        n1: usize,
        order1: u32,
        n2: usize,
        order2: u32,
    },
    #[error("invalid monomial element: {0}")]
    InvalidElement(String),
    #[error("basis index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{p} does not divide {m}")]
    NotDivisor { p: u32, m: u32 },
    #[error("group size exceeds cap {cap}")]
    CapExceeded { cap: usize },
    #[error("group is not contained in G({m},1,{n})")]
    NotInAmbient { m: u32, n: usize },
    #[error("no mystic counterpart: m = {m} is odd, the invariants of G(m,p,n) are not closed under the skew product")]
    OddM { m: u32 },
    #[error("operation requires a group of the form G(m,p,n)")]
    NotGmpn,
    #[error("element is not supported on the torus")]
    NotTorus,
    #[error("invalid q-matrix: {0}")]
    InvalidQMatrix(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
