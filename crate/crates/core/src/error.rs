use thiserror::Error;

use crate::exactla::LinAlgError;
use crate::presentation::PresentationError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("operands live in different modules")]
    ModuleMismatch,
    #[error("invalid ring structure: {0}")]
    InvalidRing(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("ideal is not principal")]
    NotPrincipal,
    #[error("module is not uniserial")]
    NotUniserial,
    #[error("module is not cyclic")]
    NotCyclic,
    #[error("module is not generated by the ideal")]
    NotGenerated,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("search budget exceeded: {needed} candidates, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("internal cross-check mismatch: {0}")]
    CrossCheck(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
