//! Front-end errors and the fixed exit-status taxonomy.

use artinlab::{Error, ErrorCategory};
use thiserror::Error as ThisError;

/// Exit statuses. `0` is success.
pub mod exit {
    /// Anything not covered below, e.g. a zero quotient or an unreadable file.
    pub const OTHER: i32 = 1;
    /// Malformed job, polynomial, order or flags.
    pub const PARSE: i32 = 2;
    pub const INFINITE_DIMENSIONAL: i32 = 3;
    pub const IRRATIONAL_POINTS: i32 = 4;
    pub const NOT_ISOLATED: i32 = 5;
    pub const INVARIANT: i32 = 6;
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("invalid job: {0}")]
    Job(String),

    #[error("unknown fixture `{0}`; see --list-fixtures")]
    UnknownFixture(String),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Job(_) | CliError::UnknownFixture(_) => exit::PARSE,
            CliError::Io { .. } => exit::OTHER,
            CliError::Core(e) => match e.category() {
                ErrorCategory::Parse => exit::PARSE,
                ErrorCategory::InfiniteDimensional => exit::INFINITE_DIMENSIONAL,
                ErrorCategory::IrrationalPoints => exit::IRRATIONAL_POINTS,
                ErrorCategory::NotIsolated => exit::NOT_ISOLATED,
                ErrorCategory::Invariant => exit::INVARIANT,
                ErrorCategory::Other => exit::OTHER,
            },
        }
    }

    /// Stable name of the exit category, used by fixtures.
    pub fn category_name(&self) -> &'static str {
        match self.exit_code() {
            exit::PARSE => "parse",
            exit::INFINITE_DIMENSIONAL => "infinite-dimensional",
            exit::IRRATIONAL_POINTS => "irrational-points",
            exit::NOT_ISOLATED => "not-isolated",
            exit::INVARIANT => "invariant",
            _ => "other",
        }
    }
}
