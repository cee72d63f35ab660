//! Explicit factorizations: the order-2 solver for coprime symbols, the
//! triple construction from given outer factors, and exact verification.

use std::fmt;

use crate::arith::RatFunc;
use crate::division::{left_divide, right_divide};
use crate::error::LpdoError;
use crate::operator::{LinearForm, Lpdo};

/// An ordered list of factors, composed left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Lpdo>,
}

impl Factorization {
    pub fn new(factors: Vec<Lpdo>) -> Self {
        Factorization { factors }
    }

    pub fn product(&self) -> Lpdo {
        Lpdo::compose_all(&self.factors)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "({fac})")?;
        }
        Ok(())
    }
}

/// True iff the factors compose exactly to `l`.
pub fn verify_factorization(l: &Lpdo, fac: &Factorization) -> bool {
    fac.product() == *l
}

/// Finds `L = (s1 + g) ∘ (s2 + f)` for a second-order `L` with symbol `s1·s2`.
///
/// The first-order equations are a 2×2 linear system in `f, g` whose
/// determinant is `s1 ∧ s2`; the order-zero equation then decides existence.
/// Returns `None` when no factorization of this type exists.
pub fn solve_order2_coprime(
    l: &Lpdo,
    s1: &LinearForm,
    s2: &LinearForm,
) -> Result<Option<Factorization>, LpdoError> {
    match l.order() {
        Some(2) => {}
        other => {
            return Err(LpdoError::WrongOrder {
                expected: 2,
                found: other.map_or("-inf".into(), |o| o.to_string()),
            })
        }
    }
    if s1.is_proportional(s2) {
        return Err(LpdoError::ProportionalSymbols);
    }
    if l.symbol()? != s1.to_form().mul(&s2.to_form()) {
        return Err(LpdoError::SymbolMismatch);
    }
    let (a1, b1) = (&s1.cx, &s1.cy);
    let (a2, b2) = (&s2.cx, &s2.cy);
    let det = &(a1 * b2) - &(a2 * b1);
    let r1 = &l.coeff(1, 0) - &s1.apply(a2);
    let r2 = &l.coeff(0, 1) - &s1.apply(b2);
    // [a1 a2; b1 b2] (f, g)ᵀ = (r1, r2)ᵀ
    let f = &(&(&r1 * b2) - &(&r2 * a2)) / &det;
    let g = &(&(a1 * &r2) - &(b1 * &r1)) / &det;
    let lhs = &s1.apply(&f) + &(&g * &f);
    if lhs != l.coeff(0, 0) {
        return Ok(None);
    }
    let left = &s1.to_operator() + &Lpdo::scalar(g);
    let right = &s2.to_operator() + &Lpdo::scalar(f);
    debug_assert_eq!(&left * &right, *l);
    Ok(Some(Factorization::new(vec![left, right])))
}

/// Merges a first-order left factor and a coprime first-order right factor of a
/// third-order operator into `L = F1 ∘ T ∘ F2`.
pub fn construct_triple(l: &Lpdo, f1: &Lpdo, f2: &Lpdo) -> Result<Factorization, LpdoError> {
    match l.order() {
        Some(3) => {}
        other => {
            return Err(LpdoError::WrongOrder {
                expected: 3,
                found: other.map_or("-inf".into(), |o| o.to_string()),
            })
        }
    }
    let left = left_divide(l, f1)?;
    let right = right_divide(l, f2)?;
    let (s1, s2) = (f1.symbol()?, f2.symbol()?);
    if s1.is_proportional_to(&s2) {
        return Err(LpdoError::ProportionalSymbols);
    }
    if !left.is_exact() {
        return Err(LpdoError::NotLeftFactor(f1.to_string()));
    }
    if !right.is_exact() {
        return Err(LpdoError::NotRightFactor(f2.to_string()));
    }
    let middle = right_divide(&left.quotient, f2)?;
    if !middle.is_exact() {
        return Err(LpdoError::Inconsistent(format!(
            "quotient {} is not right-divisible by {f2}",
            left.quotient
        )));
    }
    Ok(Factorization::new(vec![f1.clone(), middle.quotient, f2.clone()]))
}

/// The `(X)(Y)` Laplace invariant `c − a_x − ab` of `Dxy + a Dx + b Dy + c`.
pub fn laplace_h(l: &Lpdo) -> RatFunc {
    let (a, b, c) = (l.coeff(1, 0), l.coeff(0, 1), l.coeff(0, 0));
    &(&c - &a.dx()) - &(&a * &b)
}
