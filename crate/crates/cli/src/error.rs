use std::fmt;

/// Failure of a command, carrying its exit code class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input file, literal or flag value (exit 2).
    Parse(String),
    /// The semiring lacks what the command needs (exit 3).
    Capability(String),
    /// An iteration hit its budget without a fixpoint (exit 4).
    Divergence(String),
    /// `--verify` found the two solvers disagreeing (exit 5).
    Verify(String),
    /// Anything else, including I/O (exit 1).
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Capability(_) => 3,
            CliError::Divergence(_) => 4,
            CliError::Verify(_) => 5,
            CliError::Other(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Capability(m) => write!(f, "capability error: {m}"),
            CliError::Divergence(m) => write!(f, "divergence: {m}"),
            CliError::Verify(m) => write!(f, "verification failed: {m}"),
            CliError::Other(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<tropos::Error> for CliError {
    fn from(e: tropos::Error) -> Self {
        use tropos::Error as E;
        match e {
            E::Parse(m) => CliError::Parse(m),
            E::NotInCarrier { .. } => CliError::Parse(e.to_string()),
            E::Unsupported { .. } | E::NoInverse => CliError::Capability(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl<S: tropos::semiring::Semiring> From<tropos::linalg::SolveError<S>> for CliError {
    fn from(e: tropos::linalg::SolveError<S>) -> Self {
        match e {
            tropos::linalg::SolveError::Algebra(inner) => inner.into(),
            div => CliError::Divergence(div.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(format!("i/o error: {e}"))
    }
}

/// Message of a library error without its category prefix.
pub fn detail(e: &tropos::Error) -> String {
    match e {
        tropos::Error::Parse(m) | tropos::Error::Domain(m) => m.clone(),
        other => other.to_string(),
    }
}

pub type CliResult<T> = Result<T, CliError>;
