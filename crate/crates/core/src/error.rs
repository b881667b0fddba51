use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational literal `{0}`")]
    Rational(String),
    #[error("schema violation at `{field}`: {reason}")]
    Schema { field: String, reason: String },
}

impl ParseError {
    pub(crate) fn schema(field: impl Into<String>, reason: impl Into<String>) -> Self {
        ParseError::Schema {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadicalError {
    #[error("square root of negative rational {0}")]
    NegativeSqrt(String),
    #[error("radicand {radicand} has a prime factor above the trial-division bound {bound}")]
    FactorBoundExceeded { radicand: u64, bound: u64 },
    #[error("radicand {0} does not fit in 64 bits")]
    RadicandOverflow(String),
    #[error("division by `{0}` is unsupported: only single-term radicals are invertible")]
    UnsupportedDivision(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("gl(m1,m2|n1,n2) needs at least one non-zero label")]
    EmptyAlgebra,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("bracket [{left}, {right}] given twice with inconsistent values")]
    InconsistentBracket { left: String, right: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvelopingError {
    #[error("polynomial is not homogeneous: grades {0} and {1} both occur")]
    NonHomogeneous(String, String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffError {
    #[error("bracket of `{left}` and `{right}` leaves second-order terms: {residual}")]
    NonRealization {
        left: String,
        right: String,
        residual: String,
    },
    #[error("operator is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("product of two coefficients that both contain unknowns")]
    Nonlinear,
    #[error("no realization satisfies the bracket relations: {0}")]
    NoRealization(String),
    #[error("realization is missing generator `{0}`")]
    MissingGenerator(String),
    #[error("max_degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("casimir substitution leaves derivative terms: {0}")]
    NotScalar(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("generator `{0}` is not supported by this construction")]
    Unsupported(String),
    #[error("ell must be positive")]
    ZeroEll,
    #[error("matrix for `{name}` has shape {rows}x{cols}, expected {dim}x{dim}")]
    Dimension {
        name: String,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("evaluated element is not a multiple of the identity (entry ({row},{col}) = {value})")]
    NotScalar { row: usize, col: usize, value: String },
    #[error("dimension {0} exceeds the rendering guard of 64")]
    RenderGuard(usize),
    #[error("{0}")]
    Radical(#[from] RadicalError),
    #[error("{0}")]
    Enveloping(#[from] EnvelopingError),
}

/// Umbrella error for callers that drive several modules at once.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Radical(#[from] RadicalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Enveloping(#[from] EnvelopingError),
    #[error(transparent)]
    Diff(#[from] DiffError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
