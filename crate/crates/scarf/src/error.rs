//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The zero ideal (no generators) was passed to an operation that
    /// needs a proper nonzero monomial ideal.
    #[error("the zero ideal is not accepted here")]
    ZeroIdeal,

    /// The unit ideal (generated by 1) was passed to an operation that
    /// needs a proper ideal.
    #[error("the unit ideal is not accepted here")]
    UnitIdeal,

    /// Two objects living in rings with different variable counts were mixed.
    #[error("ambient variable count mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    /// An operation that requires a generic ideal got a non-generic one.
    #[error("ideal is not generic: {0}")]
    NotGeneric(String),

    /// An operation that requires a cogeneric ideal got a non-cogeneric one.
    #[error("ideal is not cogeneric: {0}")]
    NotCogeneric(String),

    /// A duality bound vector was too small for the ideal.
    #[error("duality bound too small in variable {var}: need at least {need}, got {got}")]
    BoundTooSmall { var: String, need: u32, got: u32 },

    /// Shellability is only decided for pure complexes.
    #[error("complex is not pure: facet sizes {0} and {1} differ")]
    NotPure(usize, usize),

    /// A size cap was hit; raise the corresponding limit to proceed.
    #[error("{what} ({size}) exceeds the configured cap ({cap}); result would be indeterminate")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// Buchberger ran past the configured S-pair degree cap.
    #[error("Groebner basis computation exceeded degree cap {0}")]
    DegreeCapExceeded(u32),

    /// The requested coefficient field is unusable.
    #[error("invalid field: {0}")]
    BadField(String),

    /// Text input could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An operation was called on input outside its stated hypotheses
    /// (for example, a theorem check that assumes no embedded primes).
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// An internal consistency check failed.  Seeing this means a bug in the
    /// library or a theorem violation, not a user error.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
