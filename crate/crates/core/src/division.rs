//! One-sided division by operators, layer by layer.
//!
//! Each step divides the current top-order homogeneous layer by the symbol of
//! the divisor as binary forms (lex order, `X > Y`). The quotient layer is
//! appended to `Q`, the non-divisible part of the layer moves to the remainder,
//! and the product with the divisor is subtracted. Lower-order terms created by
//! differentiation only affect layers that have not been processed yet.

use crate::arith::RatFunc;
use crate::error::LpdoError;
use crate::operator::{Lpdo, SymbolForm};

/// Quotient and remainder of a division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotient: Lpdo,
    pub remainder: Lpdo,
}

impl Division {
    pub fn is_exact(&self) -> bool {
        self.remainder.is_zero()
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// Divides the homogeneous layer `layer` by `divisor` as binary forms.
fn divide_layer(layer: &Lpdo, divisor: &SymbolForm) -> (Lpdo, Lpdo) {
    let (&(a, b), lc) = divisor
        .terms()
        .max_by_key(|(k, _)| k.0)
        .expect("nonzero divisor");
    let lc_inv = lc.recip().expect("leading coefficient is nonzero");
    let Some(d) = layer.order() else {
        return (Lpdo::zero(), Lpdo::zero());
    };
    let d = d as u32;
    let mut work = layer.clone();
    let mut quo = Lpdo::zero();
    let mut rem = Lpdo::zero();
    for i in (0..=d).rev() {
        let c = work.coeff(i, d - i);
        if c.is_zero() {
            continue;
        }
        if i >= a && d - i >= b {
            let qc = &c * &lc_inv;
            let (qi, qj) = (i - a, d - i - b);
            for (&(k, l), dc) in divisor.terms() {
                work.add_term(qi + k, qj + l, -(&qc * dc));
            }
            quo.add_term(qi, qj, qc);
        } else {
            work.add_term(i, d - i, -c.clone());
            rem.add_term(i, d - i, c);
        }
    }
    debug_assert!(work.is_zero());
    (quo, rem)
}

fn divide(l: &Lpdo, f: &Lpdo, side: Side) -> Result<Division, LpdoError> {
    let sym = f.symbol()?;
    let e = sym.degree();
    let mut rest = l.clone();
    let mut quotient = Lpdo::zero();
    let mut remainder = Lpdo::zero();
    while let Some(d) = rest.order() {
        if d < e {
            remainder = &remainder + &rest;
            break;
        }
        let (q, r) = divide_layer(&rest.homogeneous_part(d), &sym);
        let prod = match side {
            Side::Right => q.compose(f),
            Side::Left => f.compose(&q),
        };
        rest = &(&rest - &prod) - &r;
        remainder = &remainder + &r;
        quotient = &quotient + &q;
    }
    Ok(Division {
        quotient,
        remainder,
    })
}

fn require_first_order(f: &Lpdo) -> Result<(), LpdoError> {
    match f.order() {
        Some(1) => Ok(()),
        other => Err(LpdoError::WrongOrder {
            expected: 1,
            found: other.map_or("-inf".into(), |o| o.to_string()),
        }),
    }
}

/// `L = Q ∘ F + R` for a first-order `F`. `R = 0` exactly when `F` is a right factor.
pub fn right_divide(l: &Lpdo, f: &Lpdo) -> Result<Division, LpdoError> {
    require_first_order(f)?;
    divide(l, f, Side::Right)
}

/// `L = F ∘ Q + R` for a first-order `F`. `R = 0` exactly when `F` is a left factor.
pub fn left_divide(l: &Lpdo, f: &Lpdo) -> Result<Division, LpdoError> {
    require_first_order(f)?;
    divide(l, f, Side::Left)
}

/// Right division by a divisor of any positive order.
pub(crate) fn right_divide_any(l: &Lpdo, f: &Lpdo) -> Result<Division, LpdoError> {
    if f.order().unwrap_or(0) == 0 {
        return Err(LpdoError::WrongOrder {
            expected: 1,
            found: f.order().map_or("-inf".into(), |o| o.to_string()),
        });
    }
    divide(l, f, Side::Right)
}

/// Monic scaling used to compare factors that differ by a function multiple.
pub(crate) fn normalize_leading(f: &Lpdo) -> Lpdo {
    let Ok(sym) = f.symbol() else {
        return f.clone();
    };
    let (_, lc) = sym
        .terms()
        .max_by_key(|(k, _)| k.0)
        .expect("nonzero symbol");
    let inv: RatFunc = lc.recip().expect("nonzero");
    f.scale_left(&inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(r: RatFunc) -> Lpdo {
        Lpdo::scalar(r)
    }

    #[test]
    fn landau_right_division() {
        let x = RatFunc::x();
        let q = &Lpdo::dx() + &Lpdo::one();
        let r = &(&(&Lpdo::d(2, 0) + &(&f(x.clone()) * &Lpdo::d(1, 1))) + &Lpdo::dx())
            + &(&f(&x + &RatFunc::from_int(2)) * &Lpdo::dy());
        let landau = &r * &q;
        let div = right_divide(&landau, &q).unwrap();
        assert!(div.is_exact());
        assert_eq!(div.quotient, r);
    }

    #[test]
    fn non_divisible_symbols() {
        let div = right_divide(&Lpdo::dx(), &Lpdo::dy()).unwrap();
        assert_eq!(div.quotient, Lpdo::zero());
        assert_eq!(div.remainder, Lpdo::dx());
        let div = left_divide(&Lpdo::dy(), &Lpdo::dx()).unwrap();
        assert_eq!(div.quotient, Lpdo::zero());
        assert_eq!(div.remainder, Lpdo::dy());
    }

    #[test]
    fn divisor_must_be_first_order() {
        assert!(matches!(
            right_divide(&Lpdo::dx(), &Lpdo::d(1, 1)),
            Err(LpdoError::WrongOrder { expected: 1, .. })
        ));
        assert!(left_divide(&Lpdo::dx(), &Lpdo::one()).is_err());
    }

    #[test]
    fn second_order_divisor() {
        let x = RatFunc::x();
        let t = &Lpdo::d(1, 1) + &f(x.clone());
        let s = &(&Lpdo::dx() + &Lpdo::dy()) + &f(x.clone());
        let div = right_divide_any(&(&s * &t), &t).unwrap();
        assert!(div.is_exact());
        assert_eq!(div.quotient, s);
    }
}
