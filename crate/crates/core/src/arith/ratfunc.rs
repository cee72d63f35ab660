//! The coefficient field `Q(x, y)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed};

use super::gcd::poly_gcd;
use super::poly::BivarPoly;
use super::Var;
use crate::error::LpdoError;

/// A rational function `num / den` in canonical form.
///
/// Canonical means: `num` and `den` have integer coefficients with no common
/// polynomial factor and no common integer content, and the grlex-leading
/// coefficient of `den` is positive. Zero is `0 / 1`. With this convention
/// structural equality coincides with equality in the field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: BivarPoly,
    den: BivarPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: BivarPoly::zero(),
            den: BivarPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(BivarPoly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::from_poly(BivarPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(BivarPoly::var(v))
    }

    pub fn x() -> Self {
        RatFunc::var(Var::X)
    }

    pub fn y() -> Self {
        RatFunc::var(Var::Y)
    }

    pub fn from_poly(p: BivarPoly) -> Self {
        RatFunc::reduced(p, BivarPoly::one())
    }

    /// Builds `num / den`, cancelling common factors.
    pub fn new(num: BivarPoly, den: BivarPoly) -> Result<Self, LpdoError> {
        if den.is_zero() {
            return Err(LpdoError::DivisionByZero);
        }
        Ok(RatFunc::canonical(num, den))
    }

    fn canonical(num: BivarPoly, den: BivarPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_constant() {
            return RatFunc::reduced(num, den);
        }
        let g = poly_gcd(&num, &den);
        if g.is_constant() {
            return RatFunc::reduced(num, den);
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        RatFunc::reduced(n, d)
    }

    /// Fixes the rational scaling of an already coprime pair.
    fn reduced(num: BivarPoly, den: BivarPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let l = num.denominator_lcm().lcm(&den.denominator_lcm());
        let lq = BigRational::from_integer(l);
        let (n, d) = (num.scale(&lq), den.scale(&lq));
        let mut g: BigInt = n.numerator_gcd().gcd(&d.numerator_gcd());
        if d.leading_is_negative() {
            g = -g;
        }
        let s = BigRational::from_integer(g).recip();
        RatFunc {
            num: n.scale(&s),
            den: d.scale(&s),
        }
    }

    pub fn numer(&self) -> &BivarPoly {
        &self.num
    }

    pub fn denom(&self) -> &BivarPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value if this is a rational constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn recip(&self) -> Result<RatFunc, LpdoError> {
        if self.is_zero() {
            return Err(LpdoError::DivisionByZero);
        }
        Ok(RatFunc::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, LpdoError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        RatFunc::reduced(self.num.scale(c), self.den.clone())
    }

    pub fn scale_int(&self, n: i64) -> RatFunc {
        self.scale(&BigRational::from_integer(n.into()))
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc::reduced(self.num.pow(e), self.den.pow(e))
    }

    /// Partial derivative by the quotient rule.
    ///
    /// With `g = gcd(d, d')`, `h = d/g`, `k = d'/g` the derivative is
    /// `(n'h - nk) / (d h)`, and only `g` can share factors with the numerator.
    pub fn partial(&self, v: Var) -> RatFunc {
        if self.den.is_constant() {
            return RatFunc::reduced(self.num.derivative(v), self.den.clone());
        }
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return RatFunc::canonical(self.num.derivative(v), self.den.clone());
        }
        let g = poly_gcd(&self.den, &dd);
        let h = self.den.div_exact(&g).expect("gcd divides");
        let k = dd.div_exact(&g).expect("gcd divides");
        let t = &(&self.num.derivative(v) * &h) - &(&self.num * &k);
        let den = &self.den * &h;
        if g.is_constant() {
            return RatFunc::reduced(t, den);
        }
        let g2 = poly_gcd(&t, &g);
        if g2.is_constant() {
            return RatFunc::reduced(t, den);
        }
        RatFunc::reduced(
            t.div_exact(&g2).expect("gcd divides"),
            den.div_exact(&g2).expect("gcd divides"),
        )
    }

    /// `∂x^i ∂y^j self`.
    pub fn partial_n(&self, i: u32, j: u32) -> RatFunc {
        let mut f = self.clone();
        for _ in 0..i {
            f = f.partial(Var::X);
        }
        for _ in 0..j {
            f = f.partial(Var::Y);
        }
        f
    }

    pub fn dx(&self) -> RatFunc {
        self.partial(Var::X)
    }

    pub fn dy(&self) -> RatFunc {
        self.partial(Var::Y)
    }

    /// Substitutes `x ↔ y`.
    pub fn swap_vars(&self) -> RatFunc {
        RatFunc::reduced(self.num.swap_vars(), self.den.swap_vars())
    }

    /// True when the grlex-leading coefficient of the numerator is negative.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading_is_negative()
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<BivarPoly> for RatFunc {
    fn from(p: BivarPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::reduced(n, BivarPoly::one());
            }
            return RatFunc::canonical(n, self.den.clone());
        }
        if self.den.is_constant() || rhs.den.is_constant() {
            let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::canonical(n, &self.den * &rhs.den);
        }
        // only gcd(den1, den2) can share factors with the new numerator
        let g = poly_gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = rhs.den.div_exact(&g).expect("gcd divides");
        let n = &(&self.num * &b) + &(&rhs.num * &a);
        if n.is_zero() {
            return RatFunc::zero();
        }
        if g.is_constant() {
            return RatFunc::reduced(n, &a * &rhs.den);
        }
        let g2 = poly_gcd(&n, &g);
        if g2.is_constant() {
            return RatFunc::reduced(n, &a * &rhs.den);
        }
        RatFunc::reduced(
            n.div_exact(&g2).expect("gcd divides"),
            (&a * &rhs.den).div_exact(&g2).expect("gcd divides"),
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel so the product stays reduced
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RatFunc::reduced(&n1 * &n2, &d1 * &d2)
    }
}

fn cancel(n: &BivarPoly, d: &BivarPoly) -> (BivarPoly, BivarPoly) {
    if d.is_constant() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = poly_gcd(n, d);
    if g.is_constant() {
        return (n.clone(), d.clone());
    }
    (
        n.div_exact(&g).expect("gcd divides"),
        d.div_exact(&g).expect("gcd divides"),
    )
}

/// Panics on division by zero; use [`RatFunc::checked_div`] for fallible input.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

fn needs_parens(p: &BivarPoly) -> bool {
    p.num_terms() > 1
        || p.terms().next().is_some_and(|(m, c)| {
            !c.is_integer() || (m.degree() > 0 && !c.abs().is_one())
        })
}

/// Canonical `num/den` rendering, re-parseable by the operator parser.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}
