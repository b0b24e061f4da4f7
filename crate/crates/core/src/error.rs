use thiserror::Error;

/// Errors surfaced by digit arithmetic, ring embeddings and analysis runs.
#[derive(Debug, Error)]
pub enum Error {
    /// The carry process ran past `cap` positions with carries still pending.
    /// `periodic` is true when the pending state was seen to repeat while
    /// still emitting non-zero digits, which proves there is no finite
    /// representation (not merely that the cap was too small).
    #[error("carry process not finished at position {cap} (periodic non-zero carries: {periodic})")]
    NonTerminating { cap: usize, periodic: bool },

    #[error("no unique residue digit for {element}")]
    NoResidueDigit { element: String },

    #[error("{numerator} is not divisible by {divisor}")]
    NotDivisible { numerator: String, divisor: String },

    #[error("enumeration of {size} elements exceeds the guard of {guard}")]
    TooLarge { size: u128, guard: u128 },

    #[error("invalid number system: {0}")]
    InvalidSystem(String),

    #[error("unsupported for this system: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
