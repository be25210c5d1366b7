use thiserror::Error;

/// Crate-wide error type.
///
/// The variants map onto the CLI exit codes: input errors exit with 4,
/// budget exhaustion with 3, verification failures with 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: unknown vertices, colors out of range, bad parameters.
    #[error("input error: {0}")]
    Input(String),

    /// A structural precondition failed (bridge present, not chordal, star found, ...).
    #[error("structure error: {0}")]
    Structure(String),

    /// An internal contract was violated by a caller (e.g. extending with an unavailable color).
    #[error("contract error: {0}")]
    Contract(String),

    /// An exact search ran out of its node or time budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// An engine exhausted all fallbacks. This indicates a bug or a
    /// counterexample to the bound the engine implements, and carries
    /// enough context to reproduce.
    #[error("engine failure: {0}")]
    EngineFailure(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
