use thiserror::Error;

/// Errors surfaced by graph construction, codecs, generators and oracles.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed user input: bad family parameters, bad edge lists, bad flags.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The operation requires a connected graph and the input is not.
    #[error("graph is not connected: {0}")]
    Disconnected(String),

    /// A generator was constructed outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A compact tree string failed to decode.
    #[error("format error: {0}")]
    Format(String),

    /// A brute-force oracle refused an input that exceeds its size limits.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
