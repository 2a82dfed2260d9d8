//! Error types shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Parse failure with the byte offset of the offending token.
#[derive(Debug, Clone, Error, PartialEq)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

/// Failures while evaluating or transforming a function term.
#[derive(Debug, Clone, Error)]
pub enum EvalError {
    #[error("evaluation hit a zero of the function at z = {0}")]
    AtZero(Complex64),
    #[error("no closed-form derivative: {0}")]
    NoClosedForm(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Failures of the growth-statistics operations.
#[derive(Debug, Clone, Error)]
pub enum GrowthError {
    #[error("function too small on grid: {0}")]
    TooSmall(String),
    #[error("quadrature did not converge (last estimate {last})")]
    NonConvergence { last: f64 },
    #[error("zero of f on the arc near theta = {theta}")]
    ZeroOnArc { theta: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Failures of the ODE-side operations.
#[derive(Debug, Clone, Error)]
pub enum OdeError {
    #[error("step size underflow at r = {r}")]
    StepUnderflow { r: f64 },
    #[error("non-finite state at r = {r}")]
    NonFinite { r: f64 },
    #[error("coefficient overflow (log-modulus {logmod:.1} > 700) at r = {r}")]
    CoefficientOverflow { r: f64, logmod: f64 },
    #[error("ambiguous sector classification: increase r_max")]
    Ambiguous,
    #[error("argument unwrapping unstable (arg jump >= pi/2 at minimal step)")]
    UnwrapInstability,
    #[error("contour retries exhausted: {0}")]
    RetriesExhausted(String),
    #[error("ray not in decay regime")]
    NotDecaying,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Umbrella error for callers that mix subsystems.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error(transparent)]
    Ode(#[from] OdeError),
}

impl Error {
    /// Process exit code convention: 2 for validation errors, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Eval(EvalError::InvalidInput(_)) => 2,
            Error::Growth(GrowthError::InvalidInput(_)) => 2,
            Error::Ode(OdeError::InvalidInput(_)) => 2,
            _ => 3,
        }
    }
}
