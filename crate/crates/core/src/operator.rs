//! The operator ring `K[Dx, Dy]` over `K = Q(x, y)`.
//!
//! An operator `Σ a_ij Dx^i Dy^j` is stored as a sparse map from `(i, j)` to
//! its coefficient. `Dx` and `Dy` commute with each other but not with
//! coefficients: `Dx ∘ a = a Dx + ∂x(a)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One};

use crate::arith::RatFunc;
use crate::error::LpdoError;

/// A linear partial differential operator with rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Lpdo {
    coeffs: BTreeMap<(u32, u32), RatFunc>,
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| acc * BigInt::from(n - t) / BigInt::from(t + 1))
}

impl Lpdo {
    pub fn zero() -> Self {
        Lpdo::default()
    }

    pub fn one() -> Self {
        Lpdo::scalar(RatFunc::one())
    }

    /// The order-0 operator "multiply by `f`".
    pub fn scalar(f: RatFunc) -> Self {
        Lpdo::term(f, 0, 0)
    }

    /// `f · Dx^i Dy^j`.
    pub fn term(f: RatFunc, i: u32, j: u32) -> Self {
        let mut l = Lpdo::zero();
        l.add_term(i, j, f);
        l
    }

    /// `Dx^i Dy^j`.
    pub fn d(i: u32, j: u32) -> Self {
        Lpdo::term(RatFunc::one(), i, j)
    }

    pub fn dx() -> Self {
        Lpdo::d(1, 0)
    }

    pub fn dy() -> Self {
        Lpdo::d(0, 1)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), RatFunc)>,
    {
        let mut l = Lpdo::zero();
        for ((i, j), c) in terms {
            l.add_term(i, j, c);
        }
        l
    }

    pub(crate) fn add_term(&mut self, i: u32, j: u32, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&(i, j)) {
            Some(slot) => {
                let sum = &*slot + &c;
                if sum.is_zero() {
                    self.coeffs.remove(&(i, j));
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.coeffs.insert((i, j), c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order of the operator; `None` stands for the zero operator (order −∞).
    pub fn order(&self) -> Option<usize> {
        self.coeffs.keys().map(|(i, j)| (i + j) as usize).max()
    }

    /// Coefficient of `Dx^i Dy^j`.
    pub fn coeff(&self, i: u32, j: u32) -> RatFunc {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &RatFunc)> {
        self.coeffs.iter()
    }

    /// Terms of total order exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> Lpdo {
        Lpdo {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((i, j), _)| (i + j) as usize == d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Multiplication on the left by the function `f`, i.e. `f ∘ self`.
    pub fn scale_left(&self, f: &RatFunc) -> Lpdo {
        Lpdo::from_terms(self.coeffs.iter().map(|(k, c)| (*k, c * f)))
    }

    /// Non-commutative product `self ∘ rhs`.
    pub fn compose(&self, rhs: &Lpdo) -> Lpdo {
        let max_i = self.coeffs.keys().map(|k| k.0).max().unwrap_or(0);
        let max_j = self.coeffs.keys().map(|k| k.1).max().unwrap_or(0);
        let mut out = Lpdo::zero();
        for (&(k, l), b) in &rhs.coeffs {
            // ∂x^s ∂y^t b for s ≤ max_i, t ≤ max_j, built incrementally
            let mut derivs: HashMap<(u32, u32), RatFunc> = HashMap::new();
            let mut row = b.clone();
            for s in 0..=max_i {
                let mut d = row.clone();
                for t in 0..=max_j {
                    derivs.insert((s, t), d.clone());
                    if t < max_j {
                        d = d.dy();
                    }
                }
                if s < max_i {
                    row = row.dx();
                }
            }
            for (&(i, j), a) in &self.coeffs {
                for s in 0..=i {
                    for t in 0..=j {
                        let db = &derivs[&(s, t)];
                        if db.is_zero() {
                            continue;
                        }
                        let c = BigRational::from_integer(binomial(i, s) * binomial(j, t));
                        out.add_term(i - s + k, j - t + l, (a * db).scale(&c));
                    }
                }
            }
        }
        out
    }

    /// Composes a sequence left to right; the empty product is the identity.
    pub fn compose_all<'a, I>(ops: I) -> Lpdo
    where
        I: IntoIterator<Item = &'a Lpdo>,
    {
        ops.into_iter().fold(Lpdo::one(), |acc, op| acc.compose(op))
    }

    pub fn pow(&self, e: u32) -> Lpdo {
        (0..e).fold(Lpdo::one(), |acc, _| acc.compose(self))
    }

    /// Principal symbol: the top-order part with `Dx, Dy` read as commuting `X, Y`.
    pub fn symbol(&self) -> Result<SymbolForm, LpdoError> {
        let d = self.order().ok_or(LpdoError::ZeroOperator)?;
        Ok(SymbolForm {
            degree: d,
            coeffs: self.homogeneous_part(d).coeffs,
        })
    }

    /// Gauge transformation `g⁻¹ ∘ self ∘ g`.
    pub fn gauge(&self, g: &RatFunc) -> Result<Lpdo, LpdoError> {
        if g.is_zero() {
            return Err(LpdoError::ZeroGauge);
        }
        let inv = g.recip()?;
        Ok(self.compose(&Lpdo::scalar(g.clone())).scale_left(&inv))
    }

    /// Relabels `x ↔ y` and `Dx ↔ Dy`.
    pub fn swap_xy(&self) -> Lpdo {
        Lpdo::from_terms(self.coeffs.iter().map(|(&(i, j), c)| ((j, i), c.swap_vars())))
    }

    /// Terms in display order: descending total order, then descending `Dx` power.
    fn display_order(&self) -> Vec<(&(u32, u32), &RatFunc)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| {
            let (ka, kb) = (a.0, b.0);
            (kb.0 + kb.1).cmp(&(ka.0 + ka.1)).then(kb.0.cmp(&ka.0))
        });
        v
    }
}

impl Add for &Lpdo {
    type Output = Lpdo;
    fn add(self, rhs: &Lpdo) -> Lpdo {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.coeffs {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &Lpdo {
    type Output = Lpdo;
    fn sub(self, rhs: &Lpdo) -> Lpdo {
        self + &(-rhs)
    }
}

impl Neg for &Lpdo {
    type Output = Lpdo;
    fn neg(self) -> Lpdo {
        Lpdo {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

/// Composition.
impl Mul for &Lpdo {
    type Output = Lpdo;
    fn mul(self, rhs: &Lpdo) -> Lpdo {
        self.compose(rhs)
    }
}

impl Add for Lpdo {
    type Output = Lpdo;
    fn add(self, rhs: Lpdo) -> Lpdo {
        &self + &rhs
    }
}

impl Sub for Lpdo {
    type Output = Lpdo;
    fn sub(self, rhs: Lpdo) -> Lpdo {
        &self - &rhs
    }
}

impl Mul for Lpdo {
    type Output = Lpdo;
    fn mul(self, rhs: Lpdo) -> Lpdo {
        self.compose(&rhs)
    }
}

impl Neg for Lpdo {
    type Output = Lpdo;
    fn neg(self) -> Lpdo {
        -&self
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, name: &str, e: u32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    f.write_str(name)?;
    if e > 1 {
        write!(f, "^{e}")?;
    }
    Ok(())
}

/// Renders `c * <vx>^i * <vy>^j` without a leading sign separator.
fn term_string(c: &RatFunc, i: u32, j: u32, vx: &str, vy: &str) -> String {
    struct Mono<'a>(u32, u32, &'a str, &'a str);
    impl fmt::Display for Mono<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let mut first = true;
            write_power(f, self.2, self.0, &mut first)?;
            write_power(f, self.3, self.1, &mut first)
        }
    }
    let mono = Mono(i, j, vx, vy);
    if i + j == 0 {
        return c.to_string();
    }
    if c.is_one() {
        return mono.to_string();
    }
    if (-c).is_one() {
        return format!("-{mono}");
    }
    if c.is_polynomial() && c.numer().num_terms() == 1 {
        return format!("{c}*{mono}");
    }
    format!("({c})*{mono}")
}

fn write_sum<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = String>,
{
    let mut any = false;
    for (k, t) in terms.into_iter().enumerate() {
        any = true;
        if k == 0 {
            f.write_str(&t)?;
        } else if let Some(rest) = t.strip_prefix('-') {
            write!(f, " - {rest}")?;
        } else {
            write!(f, " + {t}")?;
        }
    }
    if !any {
        f.write_str("0")?;
    }
    Ok(())
}

/// Canonical printout such as `Dx^2*Dy + x*Dx*Dy + (2*x + 2)*Dy - 1`.
impl fmt::Display for Lpdo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.display_order()
                .into_iter()
                .map(|(&(i, j), c)| term_string(c, i, j, "Dx", "Dy")),
        )
    }
}

/// A nonzero homogeneous form in the formal symbols `X`, `Y` over `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolForm {
    degree: usize,
    coeffs: BTreeMap<(u32, u32), RatFunc>,
}

impl SymbolForm {
    /// Builds a form from `(i, j) → c`; all `i + j` must equal `degree`.
    pub fn new<I>(degree: usize, terms: I) -> Result<Self, LpdoError>
    where
        I: IntoIterator<Item = ((u32, u32), RatFunc)>,
    {
        let mut coeffs = BTreeMap::new();
        for ((i, j), c) in terms {
            assert_eq!((i + j) as usize, degree, "form must be homogeneous");
            if !c.is_zero() {
                coeffs.insert((i, j), c);
            }
        }
        if coeffs.is_empty() {
            return Err(LpdoError::ZeroOperator);
        }
        Ok(SymbolForm { degree, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `X^i Y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> RatFunc {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &RatFunc)> {
        self.coeffs.iter()
    }

    /// The operator `Σ c_ij Dx^i Dy^j` with this form as its symbol.
    pub fn to_operator(&self) -> Lpdo {
        Lpdo {
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn mul(&self, other: &SymbolForm) -> SymbolForm {
        let mut acc = Lpdo::zero();
        for (&(i, j), a) in &self.coeffs {
            for (&(k, l), b) in &other.coeffs {
                acc.add_term(i + k, j + l, a * b);
            }
        }
        SymbolForm {
            degree: self.degree + other.degree,
            coeffs: acc.coeffs,
        }
    }

    /// True when `other = c · self` for some nonzero `c ∈ K`.
    pub fn is_proportional_to(&self, other: &SymbolForm) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let (&k, a) = self.coeffs.iter().next().expect("nonzero form");
        let b = other.coeff(k.0, k.1);
        if b.is_zero() {
            return false;
        }
        // other == (b / a) · self
        let ratio = &b / a;
        let keys: std::collections::BTreeSet<_> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter()
            .all(|&(i, j)| &self.coeff(i, j) * &ratio == other.coeff(i, j))
    }

    pub fn as_linear(&self) -> Option<LinearForm> {
        (self.degree == 1).then(|| LinearForm {
            cx: self.coeff(1, 0),
            cy: self.coeff(0, 1),
        })
    }
}

impl fmt::Display for SymbolForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| b.0 .0.cmp(&a.0 .0));
        write_sum(f, v.into_iter().map(|(&(i, j), c)| term_string(c, i, j, "X", "Y")))
    }
}

/// A linear form `cx·X + cy·Y`, not both zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub cx: RatFunc,
    pub cy: RatFunc,
}

impl LinearForm {
    pub fn new(cx: RatFunc, cy: RatFunc) -> Result<Self, LpdoError> {
        if cx.is_zero() && cy.is_zero() {
            return Err(LpdoError::ZeroOperator);
        }
        Ok(LinearForm { cx, cy })
    }

    pub fn x() -> Self {
        LinearForm {
            cx: RatFunc::one(),
            cy: RatFunc::zero(),
        }
    }

    pub fn y() -> Self {
        LinearForm {
            cx: RatFunc::zero(),
            cy: RatFunc::one(),
        }
    }

    /// `cx·Dx + cy·Dy`.
    pub fn to_operator(&self) -> Lpdo {
        Lpdo::from_terms([((1, 0), self.cx.clone()), ((0, 1), self.cy.clone())])
    }

    pub fn to_form(&self) -> SymbolForm {
        SymbolForm::new(1, [((1, 0), self.cx.clone()), ((0, 1), self.cy.clone())])
            .expect("linear form is nonzero")
    }

    /// `cx·X + cy·Y` and `other` are proportional over `K`.
    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        (&(&self.cx * &other.cy) - &(&self.cy * &other.cx)).is_zero()
    }

    /// Applies the derivation `cx ∂x + cy ∂y` to `f`.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        &(&self.cx * &f.dx()) + &(&self.cy * &f.dy())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_form())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> RatFunc {
        RatFunc::x()
    }
    fn y() -> RatFunc {
        RatFunc::y()
    }
    fn c(n: i64) -> Lpdo {
        Lpdo::scalar(RatFunc::from_int(n))
    }
    fn f(r: RatFunc) -> Lpdo {
        Lpdo::scalar(r)
    }

    fn landau() -> Lpdo {
        let dx = Lpdo::dx();
        let dy = Lpdo::dy();
        &(&(&(&dx.pow(3) + &(&f(x()) * &(&dx.pow(2) * &dy))) + &(&c(2) * &dx.pow(2)))
            + &(&f(&x().scale_int(2) + &RatFunc::from_int(2)) * &(&dx * &dy)))
            + &(&dx + &(&f(&RatFunc::from_int(2) + &x()) * &dy))
    }

    #[test]
    fn landau_composition() {
        let q = &Lpdo::dx() + &c(1);
        let p = &Lpdo::dx() + &(&f(x()) * &Lpdo::dy());
        assert_eq!(Lpdo::compose_all([&q, &q, &p]), landau());
    }

    #[test]
    fn first_order_product_formula() {
        // (Dx + b)∘(Dy + a) = Dxy + a Dx + b Dy + a_x + ab
        let a = &(&x() * &y()) + &RatFunc::one();
        let b = y().pow(2);
        let lhs = &(&Lpdo::dx() + &f(b.clone())) * &(&Lpdo::dy() + &f(a.clone()));
        let rhs = Lpdo::from_terms([
            ((1, 1), RatFunc::one()),
            ((1, 0), a.clone()),
            ((0, 1), b.clone()),
            ((0, 0), &a.dx() + &(&a * &b)),
        ]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_composition() {
        let l = landau();
        assert_eq!(&l * &Lpdo::one(), l);
        assert_eq!(&Lpdo::one() * &l, l);
    }

    #[test]
    fn symbols() {
        let two_types = &(&Lpdo::d(2, 1) + &Lpdo::d(1, 2)) + &(&f(&x() - &y()) * &(&Lpdo::dx() + &Lpdo::dy()));
        let s = two_types.symbol().unwrap();
        assert_eq!(s.to_string(), "X^2*Y + X*Y^2");
        let p = &Lpdo::dx() + &(&f(x()) * &Lpdo::dy());
        assert_eq!(p.symbol().unwrap().to_string(), "X + x*Y");
        assert_eq!(Lpdo::zero().symbol(), Err(LpdoError::ZeroOperator));
    }

    #[test]
    fn gauge_cases() {
        let l = landau();
        assert_eq!(l.gauge(&RatFunc::one()).unwrap(), l);
        let g = &(&x() * &x()) + &y();
        assert_eq!(
            Lpdo::dx().gauge(&g).unwrap(),
            &Lpdo::dx() + &f(&g.dx() / &g)
        );
        let back = l.gauge(&g).unwrap().gauge(&g.recip().unwrap()).unwrap();
        assert_eq!(back, l);
        assert_eq!(l.gauge(&RatFunc::zero()), Err(LpdoError::ZeroGauge));
    }

    #[test]
    fn swap() {
        assert_eq!((&Lpdo::dx() + &f(y())).swap_xy(), &Lpdo::dy() + &f(x()));
        assert_eq!(Lpdo::d(2, 1).swap_xy(), Lpdo::d(1, 2));
        assert_eq!(landau().swap_xy().swap_xy(), landau());
    }

    #[test]
    fn display() {
        assert_eq!(
            landau().to_string(),
            "Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x + 2)*Dx*Dy + Dx + (x + 2)*Dy"
        );
        let l = &f(-x()) * &Lpdo::dy() - f(RatFunc::from_int(3));
        assert_eq!(l.to_string(), "-x*Dy - 3");
        assert_eq!(Lpdo::zero().to_string(), "0");
    }
}
