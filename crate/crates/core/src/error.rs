use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a word-sized prime")]
    CompositeModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable `{0}` has weight 0; weights must be positive")]
    ZeroWeight(String),
    #[error("variable `{0}` has a multidegree outside N^r")]
    NegativeVariableDegree(String),
    #[error("degree length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("module mismatch: {0}")]
    ModuleMismatch(String),
    #[error("grading map sends variable `{0}` outside N^l")]
    BadGradingMap(String),
    #[error("the zero module has no {0}")]
    ZeroModule(&'static str),
    #[error("negative exponent in ideal power product")]
    NegativeExponent,
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("cohomological index must be nonnegative, got {0}")]
    NegativeIndex(i64),
    #[error("index {index} outside 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("unit ideal is not allowed here")]
    UnitIdeal,
    #[error("hypothesis gate failed: {0}")]
    Gate(String),
    #[error("identity out of range: {0}")]
    IdentityOutOfRange(String),
    #[error("graded piece at {0} is infinite-dimensional; a weight is required")]
    InfinitePiece(String),
    #[error("empty window")]
    EmptyWindow,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("window certificate failed at {0}")]
    Certificate(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
