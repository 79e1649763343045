use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid axis index {0}; expected 0..=3")]
    InvalidAxis(usize),
    #[error("theta matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("bad rational literal {0:?}")]
    BadRational(String),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("forms belong to different algebra contexts")]
    ContextMismatch,
    #[error("form is not homogeneous in grade")]
    NotHomogeneous,
    #[error("operation requires grade at least 1")]
    GradeZero,
    #[error("expected a 1-form, found grade {0}")]
    NotOneForm(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self { position, message: message.into() }
    }
}

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read scenario {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed scenario JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?}")]
    SchemaVersion(String),
    #[error("missing field {0}")]
    MissingField(String),
    #[error("model {model} requires signature {expected}, found {found}")]
    SignatureMismatch { model: String, expected: String, found: String },
    #[error("theta entry {entry}: {source}")]
    Theta {
        entry: String,
        #[source]
        source: AlgebraError,
    },
    #[error("expression for {field}: {source}")]
    Expression {
        field: String,
        #[source]
        source: ParseError,
    },
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("check {check:?} does not apply to the {model} model")]
    NotApplicable { check: String, model: String },
    #[error("invalid {field}: {message}")]
    Invalid { field: String, message: String },
}
