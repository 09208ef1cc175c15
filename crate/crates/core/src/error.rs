use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit fails: {0}")]
    UnitFails(String),
    #[error("path algebra is infinite dimensional (no stabilization up to path length {0})")]
    InfiniteDimensional(usize),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("no radical algorithm configured for {0}")]
    UnsupportedField(String),
    #[error("algebra is not semisimple (radical of dimension {0})")]
    NotSemisimple(usize),
    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("map does not commute with the algebra action")]
    NotModuleMap,
    #[error("zero module has no projective cover")]
    ZeroModule,
    #[error("idempotent lifting failed: {0}")]
    IdempotentLiftingFailed(String),

    #[error("map is not a chain map: {0}")]
    NotChainMap(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("endomorphisms are not concentrated in degree 0 (degree {degree} has dimension {dim})")]
    NotFormalInDegreeZero { degree: i64, dim: usize },
    #[error("collection is not strong: Hom(E_{from}, E_{to}[{degree}]) has dimension {dim}")]
    NotStrong { from: usize, to: usize, degree: i64, dim: usize },
    #[error("collection is not semi-orthogonal: Hom(E_{from}, E_{to}[{degree}]) has dimension {dim}")]
    NotSemiorthogonal { from: usize, to: usize, degree: i64, dim: usize },
    #[error("invalid certificate step {step}: {reason}")]
    InvalidCertificateStep { step: usize, reason: String },

    #[error("bimodule does not match the algebras being glued: {0}")]
    BimoduleMismatch(String),
    #[error("corner decomposition is not semi-orthogonal: e_a C e_b has dimension {0}")]
    CornerNotSemiorthogonal(usize),
    #[error("module is not over the expected corner algebra")]
    CornerMismatch,

    #[error("tensor parameters are degenerate: {0}")]
    DegenerateParameters(String),
    #[error("functional is zero")]
    ZeroFunctional,
    #[error("composition tensor is not surjective (rank {0})")]
    NotSurjective(usize),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
