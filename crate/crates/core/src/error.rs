use std::fmt;

use thiserror::Error;

/// Capability flags that gate semiring operations at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Capability {
    Idempotent,
    Semifield,
    Radicable,
}

impl fmt::Display for Capability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Capability::Idempotent => "idempotent addition",
            Capability::Semifield => "multiplicative inverses",
            Capability::Radicable => "n-th roots",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("semiring `{semiring}` does not support {capability}")]
    Unsupported {
        semiring: String,
        capability: Capability,
    },

    #[error("the semiring zero has no multiplicative inverse")]
    NoInverse,

    #[error("value `{value}` is not in the carrier of `{semiring}`")]
    NotInCarrier { semiring: String, value: String },

    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("grid functions are defined on different domains")]
    DomainMismatch,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix has no cycle, the cycle-mean eigenvalue is undefined")]
    UndefinedEigenvalue,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
