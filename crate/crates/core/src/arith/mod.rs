//! Exact arithmetic: sparse polynomials and the rational-function field `Q(x, y)`.

mod gcd;
mod poly;
mod ratfunc;

pub use gcd::poly_gcd;
pub use poly::{BivarPoly, Monomial};
pub use ratfunc::RatFunc;

/// One of the two independent variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// `Σ c·Π factors` with rational coefficients `num/den`.
///
/// Used to transcribe the invariant and condition formulas term by term.
pub(crate) fn sum_terms(terms: &[(i64, i64, &[&RatFunc])]) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (num, den, factors) in terms {
        let mut t = RatFunc::from_rational(num::BigRational::new((*num).into(), (*den).into()));
        for f in factors.iter() {
            if t.is_zero() {
                break;
            }
            t = &t * *f;
        }
        acc = &acc + &t;
    }
    acc
}
