//! Factorization types of hyperbolic third-order operators and the invariant
//! conditions deciding their existence.
//!
//! For `L` with symbol `X·Y·S`, `S = X + qY`, each of the twelve types below
//! exists if and only if a short list of differential polynomials in
//! `q, I1, …, I5` vanishes. The residuals are evaluated exactly; a type holds
//! when every residual is the zero rational function.
//!
//! Several blocks share equations: `(XS)(Y)` and `(X)(SY)` have the same
//! second equation, as do `(Y)(SX)` and `(YS)(X)`. The lone `I1·I2` term
//! belongs to the `(YS)(X)` / `(Y)(SX)` equation.

use std::fmt;
use std::str::FromStr;

use crate::arith::{sum_terms, RatFunc};
use crate::error::LpdoError;
use crate::invariants::{compute_invariants, InvariantSet};
use crate::normal_form::normalize_form1;
use crate::operator::Lpdo;

/// A product `X^x · Y^y · S^s` of the three linear factors of a hyperbolic symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymbolPattern {
    pub x: u32,
    pub y: u32,
    pub s: u32,
}

impl SymbolPattern {
    pub const X: SymbolPattern = SymbolPattern { x: 1, y: 0, s: 0 };
    pub const Y: SymbolPattern = SymbolPattern { x: 0, y: 1, s: 0 };
    pub const S: SymbolPattern = SymbolPattern { x: 0, y: 0, s: 1 };
    pub const XY: SymbolPattern = SymbolPattern { x: 1, y: 1, s: 0 };
    pub const SX: SymbolPattern = SymbolPattern { x: 1, y: 0, s: 1 };
    pub const SY: SymbolPattern = SymbolPattern { x: 0, y: 1, s: 1 };
    pub const SXY: SymbolPattern = SymbolPattern { x: 1, y: 1, s: 1 };

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.s
    }

    /// Slot-wise maximum.
    pub fn lcm(&self, other: &SymbolPattern) -> SymbolPattern {
        SymbolPattern {
            x: self.x.max(other.x),
            y: self.y.max(other.y),
            s: self.s.max(other.s),
        }
    }

    pub fn mul(&self, other: &SymbolPattern) -> SymbolPattern {
        SymbolPattern {
            x: self.x + other.x,
            y: self.y + other.y,
            s: self.s + other.s,
        }
    }
}

impl fmt::Display for SymbolPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        for (name, e) in [("S", self.s), ("X", self.x), ("Y", self.y)] {
            match e {
                0 => {}
                1 => f.write_str(name)?,
                _ => write!(f, "{name}^{e}")?,
            }
        }
        Ok(())
    }
}

/// The twelve factorization types of an operator with symbol `X·Y·S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactType {
    SThenXY,
    SThenXThenY,
    SThenYThenX,
    XThenSY,
    XThenSThenY,
    XThenYThenS,
    XYThenS,
    YSThenX,
    XSThenY,
    YThenSX,
    YThenXThenS,
    YThenSThenX,
}

impl FactType {
    pub const ALL: [FactType; 12] = [
        FactType::SThenXY,
        FactType::SThenXThenY,
        FactType::SThenYThenX,
        FactType::XThenSY,
        FactType::XThenSThenY,
        FactType::XThenYThenS,
        FactType::XYThenS,
        FactType::YSThenX,
        FactType::XSThenY,
        FactType::YThenSX,
        FactType::YThenXThenS,
        FactType::YThenSThenX,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FactType::SThenXY => "(S)(XY)",
            FactType::SThenXThenY => "(S)(X)(Y)",
            FactType::SThenYThenX => "(S)(Y)(X)",
            FactType::XThenSY => "(X)(SY)",
            FactType::XThenSThenY => "(X)(S)(Y)",
            FactType::XThenYThenS => "(X)(Y)(S)",
            FactType::XYThenS => "(XY)(S)",
            FactType::YSThenX => "(YS)(X)",
            FactType::XSThenY => "(XS)(Y)",
            FactType::YThenSX => "(Y)(SX)",
            FactType::YThenXThenS => "(Y)(X)(S)",
            FactType::YThenSThenX => "(Y)(S)(X)",
        }
    }

    /// Symbol patterns of the factors, left to right.
    pub fn factors(&self) -> Vec<SymbolPattern> {
        use SymbolPattern as P;
        match self {
            FactType::SThenXY => vec![P::S, P::XY],
            FactType::SThenXThenY => vec![P::S, P::X, P::Y],
            FactType::SThenYThenX => vec![P::S, P::Y, P::X],
            FactType::XThenSY => vec![P::X, P::SY],
            FactType::XThenSThenY => vec![P::X, P::S, P::Y],
            FactType::XThenYThenS => vec![P::X, P::Y, P::S],
            FactType::XYThenS => vec![P::XY, P::S],
            FactType::YSThenX => vec![P::SY, P::X],
            FactType::XSThenY => vec![P::SX, P::Y],
            FactType::YThenSX => vec![P::Y, P::SX],
            FactType::YThenXThenS => vec![P::Y, P::X, P::S],
            FactType::YThenSThenX => vec![P::Y, P::S, P::X],
        }
    }

    /// The two-factor type whose right factor has the given symbol.
    pub fn with_right_factor(p: SymbolPattern) -> Option<FactType> {
        use SymbolPattern as P;
        Some(match p {
            P::X => FactType::YSThenX,
            P::Y => FactType::XSThenY,
            P::S => FactType::XYThenS,
            P::XY => FactType::SThenXY,
            P::SX => FactType::YThenSX,
            P::SY => FactType::XThenSY,
            _ => return None,
        })
    }
}

impl fmt::Display for FactType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FactType {
    type Err = LpdoError;

    /// Accepts names such as `(S)(XY)`; whitespace and case are ignored and
    /// `SX`/`XS`, `SY`/`YS` are interchangeable inside one factor.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = canonical_type_key(s);
        FactType::ALL
            .into_iter()
            .find(|t| canonical_type_key(t.name()) == key)
            .ok_or_else(|| LpdoError::UnknownFactType(s.to_string()))
    }
}

fn canonical_type_key(s: &str) -> Vec<String> {
    let cleaned: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| c.to_ascii_uppercase())
        .collect();
    cleaned
        .split(['(', ')'])
        .filter(|p| !p.is_empty())
        .map(|p| {
            let mut chars: Vec<char> = p.chars().collect();
            chars.sort_unstable();
            chars.into_iter().collect()
        })
        .collect()
}

/// Outcome of evaluating one condition set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// Name of the factorization type or reducibility group.
    pub label: String,
    pub residuals: Vec<RatFunc>,
    /// True iff every residual is zero.
    pub holds: bool,
}

impl ConditionReport {
    pub fn new(label: impl Into<String>, residuals: Vec<RatFunc>) -> Self {
        let holds = residuals.iter().all(RatFunc::is_zero);
        ConditionReport {
            label: label.into(),
            residuals,
            holds,
        }
    }
}

/// Partial derivatives of the invariants that the conditions refer to.
pub(crate) struct Jets {
    pub q: RatFunc,
    pub qx: RatFunc,
    pub qy: RatFunc,
    pub qxx: RatFunc,
    pub qxy: RatFunc,
    pub qyy: RatFunc,
    pub qxxx: RatFunc,
    pub i1: RatFunc,
    pub i1x: RatFunc,
    pub i1y: RatFunc,
    pub i1xx: RatFunc,
    pub i1xy: RatFunc,
    pub i1yy: RatFunc,
    pub i2: RatFunc,
    pub i2x: RatFunc,
    pub i2y: RatFunc,
    pub i3: RatFunc,
    pub i3x: RatFunc,
    pub i3y: RatFunc,
    pub i4: RatFunc,
    pub i4x: RatFunc,
    pub i4y: RatFunc,
    pub i5: RatFunc,
}

impl Jets {
    pub fn new(inv: &InvariantSet) -> Self {
        let q = inv.q.clone();
        let qx = q.dx();
        let qxx = qx.dx();
        Jets {
            qy: q.dy(),
            qxy: qx.dy(),
            qyy: q.partial_n(0, 2),
            qxxx: qxx.dx(),
            qxx,
            qx,
            q,
            i1x: inv.i1.dx(),
            i1y: inv.i1.dy(),
            i1xx: inv.i1.partial_n(2, 0),
            i1xy: inv.i1.partial_n(1, 1),
            i1yy: inv.i1.partial_n(0, 2),
            i1: inv.i1.clone(),
            i2x: inv.i2.dx(),
            i2y: inv.i2.dy(),
            i2: inv.i2.clone(),
            i3x: inv.i3.dx(),
            i3y: inv.i3.dy(),
            i3: inv.i3.clone(),
            i4x: inv.i4.dx(),
            i4y: inv.i4.dy(),
            i4: inv.i4.clone(),
            i5: inv.i5.clone(),
        }
    }

    fn a1(&self) -> RatFunc {
        &self.i3 + &self.qyy
    }

    fn b1(&self) -> RatFunc {
        let j = self;
        sum_terms(&[
            (1, 1, &[&j.i3, &j.q, &j.q]),
            (-1, 1, &[&j.q, &j.i1y]),
            (1, 1, &[&j.qy, &j.i1]),
            (-2, 1, &[&j.i2]),
        ])
    }

    fn c1(&self) -> RatFunc {
        let j = self;
        sum_terms(&[
            (-2, 1, &[&j.qx, &j.i1]),
            (1, 1, &[&j.q, &j.i1x]),
            (-1, 1, &[&j.i4]),
            (-2, 1, &[&j.q, &j.i2]),
        ])
    }

    fn d1(&self) -> RatFunc {
        let j = self;
        sum_terms(&[
            (1, 1, &[&j.q, &j.qxx]),
            (-1, 1, &[&j.i4]),
            (-2, 1, &[&j.qx, &j.qx]),
        ])
    }

    /// `(S)(XY)`.
    fn s_xy(&self) -> Vec<RatFunc> {
        let j = self;
        let e1 = sum_terms(&[
            (1, 1, &[&j.i3, &j.q, &j.q, &j.q]),
            (-1, 1, &[&j.i1y, &j.q, &j.q]),
            (1, 1, &[&j.qy, &j.i1, &j.q]),
            (-1, 1, &[&j.i4]),
            (1, 1, &[&j.q, &j.i1x]),
            (-2, 1, &[&j.qx, &j.i1]),
            (-3, 1, &[&j.q, &j.i2]),
        ]);
        let e2 = sum_terms(&[
            (-1, 1, &[&j.q, &j.q, &j.i4y]),
            (1, 2, &[&j.q, &j.q, &j.q, &j.i1xy]),
            (-1, 1, &[&j.q, &j.i4x]),
            (-3, 2, &[&j.q, &j.q, &j.qx, &j.i1y]),
            (1, 1, &[&j.q, &j.q, &j.q, &j.i5]),
            (1, 1, &[&j.q, &j.q, &j.i1xx]),
            (-3, 2, &[&j.i1, &j.q, &j.q, &j.qxy]),
            (-2, 1, &[&j.i1, &j.q, &j.qxx]),
            (5, 1, &[&j.i1, &j.q, &j.qx, &j.qy]),
            (6, 1, &[&j.i1, &j.qx, &j.qx]),
            (3, 1, &[&j.i4, &j.qx]),
            (3, 1, &[&j.i4, &j.q, &j.qy]),
            (-1, 1, &[&j.q, &j.i1, &j.i1x]),
            (1, 1, &[&j.i1, &j.i4]),
            (2, 1, &[&j.qx, &j.i1, &j.i1]),
            (-4, 1, &[&j.i1x, &j.q, &j.qx]),
            (-3, 2, &[&j.i1x, &j.q, &j.q, &j.qy]),
            (-2, 1, &[&j.q, &j.q, &j.i2x]),
            (-1, 1, &[&j.q, &j.q, &j.q, &j.i2y]),
            (1, 1, &[&j.i2, &j.q, &j.i1]),
            (4, 1, &[&j.i2, &j.q, &j.qx]),
            (2, 1, &[&j.i2, &j.q, &j.q, &j.qy]),
        ]);
        vec![e1, e2]
    }

    /// Second equation shared by `(X)(SY)` and `(XS)(Y)`.
    fn x_sy_tail(&self) -> RatFunc {
        let j = self;
        sum_terms(&[
            (-3, 2, &[&j.qx, &j.q, &j.i1y]),
            (-1, 1, &[&j.q, &j.q, &j.q, &j.i3x]),
            (1, 1, &[&j.i5, &j.q, &j.q]),
            (1, 2, &[&j.q, &j.q, &j.i1xy]),
            (-1, 2, &[&j.q, &j.qy, &j.i1x]),
            (1, 1, &[&j.qx, &j.q, &j.q, &j.i3]),
            (2, 1, &[&j.i1, &j.qx, &j.qy]),
            (-1, 2, &[&j.i1, &j.qxy, &j.q]),
            (-4, 1, &[&j.qx, &j.i2]),
            (1, 1, &[&j.q, &j.i2x]),
        ])
    }

    /// Second equation shared by `(YS)(X)` and `(Y)(SX)`.
    fn ys_x_tail(&self) -> RatFunc {
        let j = self;
        sum_terms(&[
            (-1, 1, &[&j.q, &j.i4y]),
            (1, 2, &[&j.q, &j.q, &j.i1xy]),
            (1, 1, &[&j.i5, &j.q, &j.q]),
            (-1, 1, &[&j.i2, &j.i1]),
            (-1, 1, &[&j.q, &j.q, &j.i2y]),
            (2, 1, &[&j.qy, &j.i4]),
            (3, 1, &[&j.i1, &j.qx, &j.qy]),
            (-3, 2, &[&j.i1, &j.qxy, &j.q]),
            (-1, 2, &[&j.q, &j.qy, &j.i1x]),
            (-3, 2, &[&j.qx, &j.q, &j.i1y]),
        ])
    }

    /// `(XY)(S)`.
    fn xy_s(&self) -> Vec<RatFunc> {
        let j = self;
        let e1 = sum_terms(&[
            (-1, 1, &[&j.q, &j.i2]),
            (1, 1, &[&j.q, &j.qx, &j.qy]),
            (1, 1, &[&j.qyy, &j.q, &j.q, &j.q]),
            (-1, 1, &[&j.q, &j.q, &j.qxy]),
            (1, 1, &[&j.q, &j.qxx]),
            (1, 1, &[&j.i3, &j.q, &j.q, &j.q]),
            (-1, 1, &[&j.i4]),
            (-2, 1, &[&j.qx, &j.qx]),
        ]);
        let e2 = sum_terms(&[
            (1, 1, &[&j.q, &j.q, &j.q, &j.i5]),
            (1, 1, &[&j.q, &j.i4x]),
            (1, 2, &[&j.q, &j.q, &j.q, &j.i1xy]),
            (-3, 2, &[&j.q, &j.q, &j.qx, &j.i1y]),
            (1, 1, &[&j.i1, &j.i4]),
            (1, 1, &[&j.q, &j.q, &j.i2x]),
            (2, 1, &[&j.i1, &j.q, &j.qx, &j.qy]),
            (2, 1, &[&j.i1, &j.qx, &j.qx]),
            (-5, 1, &[&j.i4, &j.qx]),
            (-1, 2, &[&j.i1, &j.q, &j.q, &j.qxy]),
            (-1, 1, &[&j.i1, &j.q, &j.qxx]),
            (1, 1, &[&j.i4, &j.q, &j.qy]),
            (-1, 2, &[&j.i1x, &j.q, &j.q, &j.qy]),
            (-4, 1, &[&j.i2, &j.q, &j.qx]),
            (-10, 1, &[&j.qx, &j.qx, &j.qx]),
            (-1, 1, &[&j.q, &j.q, &j.qxxx]),
            (-1, 1, &[&j.q, &j.q, &j.q, &j.q, &j.i3x]),
            (1, 1, &[&j.i3, &j.q, &j.q, &j.q, &j.qx]),
            (2, 1, &[&j.q, &j.qx, &j.qx, &j.qy]),
            (-1, 1, &[&j.q, &j.q, &j.qy, &j.qxx]),
            (8, 1, &[&j.q, &j.qx, &j.qxx]),
        ]);
        vec![e1, e2]
    }

    pub fn residuals(&self, t: FactType) -> Vec<RatFunc> {
        let j = self;
        let with = |mut v: Vec<RatFunc>, extra: RatFunc| {
            v.push(extra);
            v
        };
        match t {
            FactType::SThenXY => j.s_xy(),
            FactType::SThenXThenY => {
                let extra = sum_terms(&[
                    (-1, 1, &[&j.i4]),
                    (1, 1, &[&j.q, &j.i1x]),
                    (-2, 1, &[&j.qx, &j.i1]),
                    (-1, 1, &[&j.q, &j.i2]),
                ]);
                with(j.s_xy(), extra)
            }
            FactType::SThenYThenX => with(j.s_xy(), j.c1()),
            FactType::XThenSY => vec![j.d1(), j.x_sy_tail()],
            FactType::XThenSThenY => vec![j.d1(), j.x_sy_tail(), j.b1()],
            FactType::XThenYThenS => {
                let first_xy_s = j.xy_s().swap_remove(0);
                vec![j.d1(), j.x_sy_tail(), first_xy_s]
            }
            FactType::XYThenS => j.xy_s(),
            FactType::YSThenX => vec![j.c1(), j.ys_x_tail()],
            FactType::XSThenY => vec![j.b1(), j.x_sy_tail()],
            FactType::YThenSX => vec![j.a1(), j.ys_x_tail()],
            FactType::YThenXThenS => {
                let extra = sum_terms(&[
                    (-1, 1, &[&j.q, &j.qxx]),
                    (1, 1, &[&j.i4]),
                    (2, 1, &[&j.qx, &j.qx]),
                    (1, 1, &[&j.q, &j.i2]),
                    (-1, 1, &[&j.q, &j.qx, &j.qy]),
                    (1, 1, &[&j.q, &j.q, &j.qxy]),
                ]);
                with(j.xy_s(), extra)
            }
            FactType::YThenSThenX => vec![j.c1(), j.ys_x_tail(), j.a1()],
        }
    }
}

/// Evaluates the existence conditions of one factorization type.
pub fn condition_residuals(inv: &InvariantSet, ftype: FactType) -> ConditionReport {
    ConditionReport::new(ftype.name(), Jets::new(inv).residuals(ftype))
}

/// Evaluates all twelve types, in [`FactType::ALL`] order.
pub fn type_sweep(inv: &InvariantSet) -> Vec<ConditionReport> {
    let jets = Jets::new(inv);
    FactType::ALL
        .iter()
        .map(|t| ConditionReport::new(t.name(), jets.residuals(*t)))
        .collect()
}

/// Normalizes a hyperbolic operator, computes its invariants and sweeps all types.
pub fn factorization_types(l: &Lpdo) -> Result<(InvariantSet, Vec<ConditionReport>), LpdoError> {
    let inv = compute_invariants(&normalize_form1(l)?)?;
    let sweep = type_sweep(&inv);
    Ok((inv, sweep))
}
