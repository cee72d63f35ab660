use thiserror::Error;

use crate::facttype::SymbolPattern;

/// Errors raised by operator algebra and the factorization machinery.
///
/// Every variant except [`LpdoError::Inconsistent`] is a violated
/// precondition; the message names the predicate that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpdoError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("the zero operator has no symbol")]
    ZeroOperator,
    #[error("gauge function must be nonzero")]
    ZeroGauge,
    #[error("expected an operator of order {expected}, got order {found}")]
    WrongOrder { expected: usize, found: String },
    #[error("operator is not in hyperbolic normal form: symbol must be X*Y*(p*X + q*Y) with p, q nonzero")]
    NotFormOne,
    #[error("hyperbolic normal form requires p = 1; normalize the operator first")]
    NotNormalized,
    #[error("symbol of the operator is not the product of the given linear forms")]
    SymbolMismatch,
    #[error("the linear forms are proportional (symbols are not coprime)")]
    ProportionalSymbols,
    #[error("{0} is not a left factor of the operator")]
    NotLeftFactor(String),
    #[error("{0} is not a right factor of the operator")]
    NotRightFactor(String),
    #[error("factor order must be 1 or 2, got {0}")]
    UnsupportedFactorOrder(usize),
    #[error("invariant q must equal 1 for the complete-reducibility group conditions")]
    QNotOne,
    #[error("symbol patterns refer to different values of q")]
    MixedQ,
    #[error("more than one factor with symbol pattern {0}")]
    DuplicateFactorType(SymbolPattern),
    #[error("unknown factorization type {0:?}")]
    UnknownFactType(String),
    #[error("unknown reducibility group {0:?}")]
    UnknownGroup(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
