//! Exact symbolic algebra of bivariate linear partial differential operators
//! with coefficients in `Q(x, y)`.
//!
//! The crate covers composition, symbols, gauge transformations and one-sided
//! division, the generating invariants of hyperbolic third-order operators,
//! the invariant conditions for their twelve factorization types, explicit
//! factor construction, and complete reducibility.

pub mod arith;
pub mod division;
pub mod error;
pub mod factorize;
pub mod facttype;
pub mod invariants;
pub mod normal_form;
pub mod operator;
pub mod parse;
pub mod reducibility;

pub use arith::{BivarPoly, RatFunc, Var};
pub use division::{left_divide, right_divide, Division};
pub use error::LpdoError;
pub use factorize::{
    construct_triple, laplace_h, solve_order2_coprime, verify_factorization, Factorization,
};
pub use facttype::{
    condition_residuals, factorization_types, type_sweep, ConditionReport, FactType,
    SymbolPattern,
};
pub use invariants::{compute_invariants, equivalence_class_equal, InvariantSet};
pub use normal_form::{classify_normal_form, normalize_form1, NormalForm};
pub use operator::{LinearForm, Lpdo, SymbolForm};
pub use parse::{parse, parse_function, parse_operator, Expr, ParseError};
pub use reducibility::{
    check_complete_reducibility, group_conditions, right_factor_conditions, symbol_lcm,
    FactorCheck, Group, Irreducibility, ReducibilityStatus, ReducibilityVerdict,
    SymbolFactorPattern,
};
