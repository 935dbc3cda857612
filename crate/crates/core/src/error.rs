use thiserror::Error;

/// Errors raised by the numerical routines and the verification suite.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: s = {s} lies within the exclusion radius of s = 1")]
    Pole { s: String },

    #[error("integrand is not finite at node {node}")]
    NonFinite { node: String },

    #[error("root not bracketed: f({lo}) and f({hi}) have the same sign")]
    NotBracketed { lo: String, hi: String },

    #[error("{what} did not converge: {detail}")]
    NotConverged { what: &'static str, detail: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("order cap exceeded: {what} = {value} > {cap}")]
    OrderCap {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("invalid number `{0}`")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn cap(what: &'static str, value: u64, cap: u64) -> Result<()> {
    if value > cap {
        Err(Error::OrderCap { what, value, cap })
    } else {
        Ok(())
    }
}
