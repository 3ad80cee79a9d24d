use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unrecognised field `{0}` (expected `Q` or `GF(p)`)")]
    BadField(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Jacobi identity fails on basis triple {triple}; defect {defect}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        /// The triple by basis name, e.g. `(a,b,c)`.
        triple: String,
        /// Textual rendering of the nonzero defect vector.
        defect: String,
    },
    #[error("antisymmetry fails on basis pair ({i},{j})")]
    AntisymmetryViolation { i: usize, j: usize },
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subalgebra is not nilpotent")]
    NotNilpotent,
    #[error("subalgebra is not triangulable on the ambient algebra")]
    NotTriangulable,
    #[error("cap exceeded: {what} needs {estimate}, cap is {cap}")]
    CapExceeded { what: String, estimate: u128, cap: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("alpha must differ from 1")]
    AlphaEqualsOne,
    #[error("action is reducible: invariant subspace {0}")]
    ReducibleAction(String),
    #[error("field characteristic {found} does not match p = {expected}")]
    CharMismatch { expected: u32, found: u32 },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown basis name `{0}`")]
    UnknownBasisName(String),
    #[error("bracket [{0},{1}] is not in upper-triangle order")]
    UpperTriangleViolation(String, String),
    #[error("bracket [{0},{1}] given twice")]
    DuplicateBracket(String, String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
}

impl Error {
    /// Stable identifier used in single-line diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::BadField(_) => "BadField",
            Error::FieldMismatch(_) => "FieldMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::JacobiViolation { .. } => "JacobiViolation",
            Error::AntisymmetryViolation { .. } => "AntisymmetryViolation",
            Error::NotASubalgebra => "NotASubalgebra",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::NotNilpotent => "NotNilpotent",
            Error::NotTriangulable => "NotTriangulable",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::Unsupported(_) => "Unsupported",
            Error::UnknownProperty(_) => "UnknownProperty",
            Error::AlphaEqualsOne => "AlphaEqualsOne",
            Error::ReducibleAction(_) => "ReducibleAction",
            Error::CharMismatch { .. } => "CharMismatch",
            Error::BadParameter(_) => "BadParameter",
            Error::Io(_) => "Io",
            Error::Parse { kind, .. } => match kind {
                ParseErrorKind::Syntax(_) => "SyntaxError",
                ParseErrorKind::UnknownBasisName(_) => "UnknownBasisName",
                ParseErrorKind::UpperTriangleViolation(..) => "UpperTriangleViolation",
                ParseErrorKind::DuplicateBracket(..) => "DuplicateBracket",
                ParseErrorKind::FieldMismatch(_) => "FieldMismatch",
            },
        }
    }
}
