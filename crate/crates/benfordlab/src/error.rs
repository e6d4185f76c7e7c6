//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("base must be a positive rational, got {0}")]
    NonPositiveBase(String),

    #[error("radix must be an integer >= 2, got {0}")]
    InvalidRadix(u32),

    #[error("digit must lie in 1..={max}, got {digit}")]
    InvalidDigit { digit: u32, max: u32 },

    #[error("log_{radix}({a}) is rational; leading digits of the sequence are eventually periodic")]
    RationalLog { a: String, radix: u32 },

    #[error("precision must be at least 64 bits, got {0}")]
    PrecisionTooLow(u32),

    #[error("membership could not be resolved after {0} precision escalations")]
    AmbiguityBudgetExceeded(u32),

    #[error("exact power needs ~{bits} bits, exceeding the oracle cap of {cap} bits")]
    OracleTooLarge { bits: u64, cap: u64 },

    #[error("record hits require a series computed with stride 1, got stride {0}")]
    StrideTooCoarse(u64),

    #[error("series is empty")]
    EmptySeries,

    #[error("histogram needs at least 2 bins, got {0}")]
    TooFewBins(usize),

    #[error("need at least 2 certified partial quotients, got {0}")]
    TooFewQuotients(usize),

    #[error("k must be a nonzero integer")]
    ZeroK,

    #[error("shift s = {s} lies outside [0, 1 - {{k a}}] = [0, {max}]")]
    ShiftOutOfRange { s: String, max: String },

    #[error("{0} is a perfect square; a quadratic irrational needs a nonsquare discriminant")]
    SquareDiscriminant(u64),

    #[error("interval is invalid: realized lo {lo} is not below hi {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("number too large to factor: {0}")]
    FactorTooLarge(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("series of {n} values at stride {stride} would not fit in memory; increase --stride")]
    SeriesTooLarge { n: u64, stride: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 for domain errors, 3 for bad configuration.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidConfig(_) | Error::TooFewBins(_) | Error::PrecisionTooLow(_) => 3,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}
