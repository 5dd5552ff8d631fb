use thiserror::Error;

/// Errors produced while building or combining bodies of evidence.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a complex number of zero modulus")]
    DivisionByZero,

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("invalid polar form: magnitude {magnitude}, phase {phase}")]
    InvalidPolar { magnitude: f64, phase: f64 },

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("label `{0}` is not an element of the frame")]
    UnknownLabel(String),

    #[error("propositions or mass functions belong to different frames")]
    FrameMismatch,

    #[error("proposition {0} is listed more than once")]
    DuplicateProposition(String),

    #[error("the empty set carries non-zero mass ({re}{im:+}i)")]
    EmptySetMass { re: f64, im: f64 },

    #[error("mass of {proposition} has magnitude {magnitude}, outside [0, 1]")]
    MagnitudeOutOfRange { proposition: String, magnitude: f64 },

    #[error("masses sum to {re}{im:+}i instead of 1 (tolerance {tolerance})")]
    NotNormalized { re: f64, im: f64, tolerance: f64 },

    #[error("conflict coefficient K = {re}{im:+}i makes 1 - K singular")]
    ConflictSingularity { re: f64, im: f64 },

    #[error("total conflict between the bodies of evidence (K = {0})")]
    TotalConflict(f64),

    #[error("parameters x = {x}, y = {y} give a mass of magnitude above 1")]
    InfeasibleParameters { x: f64, y: f64 },

    #[error("invalid sweep specification: {0}")]
    InvalidSweep(String),

    #[error("no bodies of evidence to combine")]
    NoEvidence,

    #[error("fusion step {step} failed: {source}")]
    FusionStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True when the error (possibly wrapped by a fold step) is a
    /// singular-conflict failure.
    pub fn is_singular(&self) -> bool {
        match self {
            Error::ConflictSingularity { .. } | Error::TotalConflict(_) => true,
            Error::FusionStep { source, .. } => source.is_singular(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
