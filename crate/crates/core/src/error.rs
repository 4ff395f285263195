use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),

    #[error("arrows do not compose: {0}")]
    NotComposable(String),

    #[error("relation `{0}` has length below 2")]
    ShortRelation(String),

    #[error("truncation index {0} must be at least 2")]
    BadTruncation(usize),

    #[error(
        "algebra is infinite-dimensional: the cycle `{witness}` and all its powers are nonzero"
    )]
    InfiniteDimensional { witness: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cycle `{0}` is a proper power")]
    ImproperCycle(String),

    #[error("not a closed cycle: {0}")]
    NotACycle(String),

    #[error("complex has {size} basis elements, above the cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("differentials do not compose to zero at degree {degree}")]
    NotAComplex { degree: usize },

    #[error("matrix shapes do not chain at degree {degree}")]
    ShapeMismatch { degree: usize },

    #[error("structure constants fail {0}")]
    BadStructureConstants(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("cross-check mismatch: {0}")]
    Mismatch(String),
}
