use thiserror::Error;

/// Domain errors raised by the arithmetic, halfline and naturals modules.
///
/// Payloads carry the canonical text of the offending value so messages can
/// be shown verbatim in the REPL.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot scale a neutrix by zero")]
    ZeroScalar,
    #[error("`{0}` is not an idempotent magnitude")]
    NotIdempotent(String),
    #[error("`{0}` does not lie above 1")]
    NotAboveUnity(String),
    #[error("`{0}` is not zeroless")]
    NotZeroless(String),
    #[error("`{0}` is not limited")]
    NotLimited(String),
    #[error("the halfline is the whole domain")]
    DegenerateDomain,
    #[error("empty set")]
    EmptySet,
    #[error("`{0}` is not strictly below `{1}`")]
    NotStrictlyOrdered(String, String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unknown induction formula `{0}`")]
    UnknownFormula(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
