//! Sparse polynomials in `x`, `y` over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::Var;

/// Exponent pair `x^x * y^y`, ordered graded-lexicographically with `x > y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `Q[x, y]`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        BivarPoly::monomial(c, Monomial::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        BivarPoly::constant(BigRational::from_integer(n.into()))
    }

    pub fn monomial(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BivarPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let m = match v {
            Var::X => Monomial::new(1, 0),
            Var::Y => Monomial::new(0, 1),
        };
        BivarPoly::monomial(BigRational::one(), m)
    }

    /// Builds a polynomial from `(x_exp, y_exp, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigRational)>,
    {
        let mut p = BivarPoly::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial::new(i, j), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Returns the value if the polynomial has no `x` or `y` dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading term under grlex, `None` for the zero polynomial.
    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match v {
                Var::X => m.x,
                Var::Y => m.y,
            })
            .max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &BigRational) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &BigRational, mono: Monomial) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (Monomial::new(m.x + mono.x, m.y + mono.y), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> BivarPoly {
        let mut base = self.clone();
        let mut acc = BivarPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (m, c) in &self.terms {
            let (k, dm) = match v {
                Var::X if m.x > 0 => (m.x, Monomial::new(m.x - 1, m.y)),
                Var::Y if m.y > 0 => (m.y, Monomial::new(m.x, m.y - 1)),
                _ => continue,
            };
            out.add_term(dm, c * BigRational::from_integer(k.into()));
        }
        out
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_vars(&self) -> BivarPoly {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone()))
                .collect(),
        }
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &BivarPoly) -> Option<BivarPoly> {
        let (lm, lc) = divisor.leading()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quo = BivarPoly::zero();
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = Monomial::new(m.x - lm.x, m.y - lm.y);
            let qc = c * &lc_inv;
            rem = &rem - &divisor.mul_monomial(&qc, qm);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Least common multiple of all coefficient denominators.
    pub(crate) fn denominator_lcm(&self) -> BigInt {
        use num::Integer;
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of all coefficient numerators, assuming integral coefficients.
    pub(crate) fn numerator_gcd(&self) -> BigInt {
        use num::Integer;
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    pub(crate) fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(Monomial::new(ma.x + mb.x, ma.y + mb.y), a * b);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", m.x), ("y", m.y)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Terms in descending grlex order, e.g. `x^2*y - 3*x + 1/2`.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *m == Monomial::ONE {
                write_rational(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_rational(f, &mag)?;
                    f.write_str("*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}
