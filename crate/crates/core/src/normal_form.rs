//! Classification of third-order operators by the shape of their symbol.

use std::fmt;

use crate::arith::RatFunc;
use crate::error::LpdoError;
use crate::operator::{Lpdo, SymbolForm};

/// Shape of the symbol of a third-order operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    /// Symbol `X·Y·(p X + q Y)` with `p, q ≠ 0`: three pairwise coprime linear factors.
    Hyperbolic { p: RatFunc, q: RatFunc },
    /// Symbol `c·X²Y`, or `c·XY²` when `swapped`.
    RepeatedPair { swapped: bool },
    /// Symbol `c·X³`, or `c·Y³` when `swapped`.
    Cube { swapped: bool },
    /// Anything else, with the powers of `X` and `Y` split off, e.g. `X^2*(X + x*Y)`.
    Other { factored: String },
}

impl NormalForm {
    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, NormalForm::Hyperbolic { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            NormalForm::Hyperbolic { .. } => "hyperbolic",
            NormalForm::RepeatedPair { .. } => "repeated-pair",
            NormalForm::Cube { .. } => "cube",
            NormalForm::Other { .. } => "other",
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Hyperbolic { p, q } => write!(f, "hyperbolic: X*Y*(p*X + q*Y), p = {p}, q = {q}"),
            NormalForm::RepeatedPair { swapped: false } => f.write_str("repeated-pair: X^2*Y"),
            NormalForm::RepeatedPair { swapped: true } => f.write_str("repeated-pair: X*Y^2"),
            NormalForm::Cube { swapped: false } => f.write_str("cube: X^3"),
            NormalForm::Cube { swapped: true } => f.write_str("cube: Y^3"),
            NormalForm::Other { factored } => write!(f, "other: {factored}"),
        }
    }
}

fn require_order3(l: &Lpdo) -> Result<SymbolForm, LpdoError> {
    match l.order() {
        Some(3) => l.symbol(),
        other => Err(LpdoError::WrongOrder {
            expected: 3,
            found: other.map_or("-inf".into(), |o| o.to_string()),
        }),
    }
}

/// Pattern-matches the symbol of a third-order operator.
pub fn classify_normal_form(l: &Lpdo) -> Result<NormalForm, LpdoError> {
    let s = require_order3(l)?;
    let c: Vec<RatFunc> = (0..=3).map(|i| s.coeff(i, 3 - i)).collect();
    let nz: Vec<bool> = c.iter().map(|v| !v.is_zero()).collect();
    Ok(match (nz[3], nz[2], nz[1], nz[0]) {
        (false, true, true, false) => NormalForm::Hyperbolic {
            p: c[2].clone(),
            q: c[1].clone(),
        },
        (false, true, false, false) => NormalForm::RepeatedPair { swapped: false },
        (false, false, true, false) => NormalForm::RepeatedPair { swapped: true },
        (true, false, false, false) => NormalForm::Cube { swapped: false },
        (false, false, false, true) => NormalForm::Cube { swapped: true },
        _ => NormalForm::Other {
            factored: split_monomial_factors(&s),
        },
    })
}

/// Writes a form as `X^a*Y^b*(cofactor)`.
fn split_monomial_factors(s: &SymbolForm) -> String {
    let d = s.degree() as u32;
    let xs: Vec<u32> = s.terms().map(|(k, _)| k.0).collect();
    let a = *xs.iter().min().unwrap_or(&0);
    let b = d - *xs.iter().max().unwrap_or(&d);
    let cof = SymbolForm::new(
        (d - a - b) as usize,
        s.terms().map(|(&(i, j), c)| ((i - a, j - b), c.clone())),
    )
    .expect("nonzero form");
    let mut parts = Vec::new();
    for (name, e) in [("X", a), ("Y", b)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if cof.degree() > 0 {
        parts.push(format!("({cof})"));
    } else if parts.is_empty() || !cof.coeff(0, 0).is_one() {
        parts.insert(0, cof.coeff(0, 0).to_string());
    }
    parts.join("*")
}

/// Divides a hyperbolic operator on the left by `p`, so its symbol becomes `XY(X + qY)`.
///
/// Right factors are unchanged by this scaling.
pub fn normalize_form1(l: &Lpdo) -> Result<Lpdo, LpdoError> {
    match classify_normal_form(l)? {
        NormalForm::Hyperbolic { p, .. } => Ok(l.scale_left(&p.recip()?)),
        _ => Err(LpdoError::NotFormOne),
    }
}

/// The `q` of a hyperbolic operator already normalized to `p = 1`.
pub fn hyperbolic_q(l: &Lpdo) -> Result<RatFunc, LpdoError> {
    match classify_normal_form(l)? {
        NormalForm::Hyperbolic { p, q } if p.is_one() => Ok(q),
        NormalForm::Hyperbolic { .. } => Err(LpdoError::NotNormalized),
        _ => Err(LpdoError::NotFormOne),
    }
}
