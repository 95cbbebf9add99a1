use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot evaluate a polynomial with negative exponents at 0")]
    EvalAtZero,

    #[error("evaluation at {x} of a polynomial with negative exponents is not an integer")]
    NonIntegralValue { x: i64 },

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("the Q-basis only exists for square matrices (m = n), got m = {m}, n = {n}")]
    NotSquare { m: usize, n: usize },

    #[error("module family does not match the regime: {0}")]
    Regime(String),

    #[error("class is not effective: {0}")]
    NotEffective(String),

    #[error("Bott pushforward requires lambda_p >= mu_1, got {lambda_last} < {mu_first}")]
    PushforwardPrecondition { lambda_last: i64, mu_first: i64 },

    #[error("pairing is only partially defined: {0}")]
    PairingUndefined(String),

    #[error("subspace is not stable under the arrows: {0}")]
    NotStable(String),

    #[error("Lyubeznik support outside the triangle 0 <= i <= j <= {dim}: q^{i}*w^{j}")]
    TableSupport { i: i64, j: i64, dim: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn range(msg: impl Into<String>) -> Error {
    Error::Range(msg.into())
}
