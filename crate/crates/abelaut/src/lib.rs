//! Command-line front end and IO for `abelaut-core`.
//!
//! Parsing of group expressions, text/JSON/CSV output, wall-clock bounded
//! search, and parallel sweeps whose results match the sequential ones.

pub mod cli;
pub mod expr;
pub mod output;
pub mod sweep;

pub use expr::{parse_group, GroupExpr, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] abelaut_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const BOUND_EXCEEDED: i32 = 2;
    /// Formula and oracle disagree somewhere. Used for nothing else.
    pub const MISMATCH: i32 = 3;
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        use abelaut_core::Error as Core;
        match self {
            Error::Core(
                Core::FactorizationOverflow { .. }
                | Core::OrderTooLarge(_)
                | Core::PrimalityOutOfRange(_)
                | Core::BudgetExceeded { .. },
            ) => exit::BOUND_EXCEEDED,
            Error::Parse(_) | Error::Core(_) | Error::Usage(_) => exit::USAGE,
            Error::Csv(_) | Error::Json(_) | Error::Io(_) => exit::USAGE,
        }
    }
}
