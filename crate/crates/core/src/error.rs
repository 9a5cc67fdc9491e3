//! Error types shared by the solver modules.

use thiserror::Error;

/// Errors produced by model construction and the solver layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structurally invalid argument (e.g. reversed interval endpoints).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A user-supplied model is inconsistent (bad expression, derivative
    /// mismatch against finite differences, ...).
    #[error("model definition error: {0}")]
    ModelDefinition(String),

    /// A structural constant of the model could not be computed because the
    /// model violates the constitutive hypotheses.
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    /// A bracketing root search exhausted its window without a sign change.
    #[error("root not found: {0}")]
    RootNotFound(String),

    /// The tilted potential is not positive between the chord endpoints.
    #[error("inadmissible chord: {0}")]
    InadmissibleChord(String),

    /// The chord is tangent to the energy graph at an endpoint (Maxwell
    /// configuration); the quadratures diverge logarithmically there.
    #[error("degenerate chord: {0}")]
    DegenerateChord(String),

    /// No admissible `H2` solves the mass condition for the requested data.
    #[error("no branch point: {0}")]
    NoBranchPoint(String),

    /// A quadrature failed to converge.
    #[error("integration error: {0}")]
    Integration(String),

    /// An iterative scheme lost its contract (e.g. non-monotone line search).
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// Expression parsing failed.
    #[error(transparent)]
    Expr(#[from] crate::expr::ExprError),

    /// Config parsing failed.
    #[error(transparent)]
    Config(#[from] crate::config::ConfigError),

    /// Field/profile CSV parsing failed.
    #[error(transparent)]
    Fields(#[from] crate::fields::FieldParseError),
}
