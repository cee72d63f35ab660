//! Complete reducibility of hyperbolic third-order operators.
//!
//! `L` is completely reducible by right factors `L1, …, Lk` when each `Li`
//! divides `L` exactly, every `Li` is irreducible, and the lcm of the factor
//! symbols equals `Sym(L) = X·Y·S`. Patterns are taken over the linear
//! factors `X`, `Y`, `S = X + qY` of the normalized symbol.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arith::{sum_terms, RatFunc};
use crate::division::{normalize_leading, right_divide_any};
use crate::error::LpdoError;
use crate::factorize::solve_order2_coprime;
use crate::facttype::{ConditionReport, FactType, Jets, SymbolPattern};
use crate::invariants::InvariantSet;
use crate::normal_form::{hyperbolic_q, normalize_form1};
use crate::operator::{LinearForm, Lpdo, SymbolForm};

/// A symbol pattern together with the `q` defining its `S` slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolFactorPattern {
    pub q: RatFunc,
    pub pattern: SymbolPattern,
}

/// Slot-wise maximum of the patterns. Patterns using `S` must share `q`.
pub fn symbol_lcm(patterns: &[SymbolFactorPattern]) -> Result<SymbolPattern, LpdoError> {
    let mut q: Option<&RatFunc> = None;
    let mut acc = SymbolPattern::default();
    for p in patterns {
        if p.pattern.s > 0 {
            match q {
                Some(q0) if q0 != &p.q => return Err(LpdoError::MixedQ),
                _ => q = Some(&p.q),
            }
        }
        acc = acc.lcm(&p.pattern);
    }
    Ok(acc)
}

/// The eight sets of right-factor symbols with explicit sufficient conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    I,
    IIa,
    IIb,
    IIc,
    IIIa,
    IIIb,
    IIIc,
    V,
}

impl Group {
    pub const ALL: [Group; 8] = [
        Group::I,
        Group::IIa,
        Group::IIb,
        Group::IIc,
        Group::IIIa,
        Group::IIIb,
        Group::IIIc,
        Group::V,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Group::I => "I",
            Group::IIa => "II.a",
            Group::IIb => "II.b",
            Group::IIc => "II.c",
            Group::IIIa => "III.a",
            Group::IIIb => "III.b",
            Group::IIIc => "III.c",
            Group::V => "V",
        }
    }

    /// Symbols of the right factors.
    pub fn patterns(&self) -> Vec<SymbolPattern> {
        use SymbolPattern as P;
        match self {
            Group::I => vec![P::X, P::Y, P::S],
            Group::IIa => vec![P::SX, P::SY],
            Group::IIb => vec![P::SX, P::XY],
            Group::IIc => vec![P::SY, P::XY],
            Group::IIIa => vec![P::X, P::SY],
            Group::IIIb => vec![P::Y, P::SX],
            Group::IIIc => vec![P::S, P::XY],
            Group::V => vec![P::SX, P::SY, P::XY],
        }
    }

    fn from_patterns(set: &BTreeSet<SymbolPattern>) -> Option<Group> {
        Group::ALL
            .into_iter()
            .find(|g| g.patterns().into_iter().collect::<BTreeSet<_>>() == *set)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Group {
    type Err = LpdoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_uppercase())
            .collect();
        Group::ALL
            .into_iter()
            .find(|g| g.label().replace('.', "").to_ascii_uppercase() == key)
            .ok_or_else(|| LpdoError::UnknownGroup(s.to_string()))
    }
}

/// The printed `q = 1` sufficient conditions of a group, as residuals.
///
/// For group I the operator condition `(Dy + I1)(2 I1x + I1y) = 0` is applied
/// as a scalar; for II.a "`I2` is a function of `y − x`" becomes
/// `(∂x + ∂y) I2 = 0`.
pub fn group_conditions(inv: &InvariantSet, group: Group) -> Result<ConditionReport, LpdoError> {
    if !inv.q.is_one() {
        return Err(LpdoError::QNotOne);
    }
    let j = Jets::new(inv);
    let (i1, i2, i3, i4, i5) = (&j.i1, &j.i2, &j.i3, &j.i4, &j.i5);
    let half = |a: RatFunc| a.scale(&num::BigRational::new(1.into(), 2.into()));
    let residuals = match group {
        Group::I => {
            let w = &j.i1x.scale_int(2) + &j.i1y;
            vec![
                &w.dy() + &(i1 * &w),
                &(i2 - &j.i1x) + i3,
                i3 - &sum_terms(&[(1, 3, &[&j.i1y]), (2, 3, &[&j.i1x])]),
                &(i4 + i2) - i3,
                i5 - &sum_terms(&[(1, 1, &[i1, &j.i1x]), (-2, 1, &[i1, i3]), (-1, 2, &[&j.i1xy])]),
            ]
        }
        Group::IIa => vec![
            &j.i2x + &j.i2y,
            i3.clone(),
            i4.clone(),
            i5 - &(&half(-&j.i1xy) + &j.i2y),
        ],
        Group::IIb => vec![
            sum_terms(&[
                (1, 1, &[&j.i1xy]),
                (1, 1, &[&j.i2x]),
                (-1, 1, &[i1, &j.i1y]),
                (-2, 1, &[i1, i2]),
            ]),
            i3.clone(),
            i4 - &sum_terms(&[(-1, 1, &[&j.i1y]), (1, 1, &[&j.i1x]), (-3, 1, &[i2])]),
            i5 - &sum_terms(&[(1, 1, &[&j.i4y]), (-1, 2, &[&j.i1xy]), (1, 1, &[&j.i2y])]),
        ],
        Group::IIc => vec![
            sum_terms(&[
                (1, 1, &[&j.i1xy]),
                (-1, 1, &[i1, &j.i1x]),
                (-1, 1, &[&j.i2y]),
                (1, 1, &[i1, i2]),
            ]),
            i3 - &sum_terms(&[(1, 1, &[&j.i1y]), (-1, 1, &[&j.i1x]), (3, 1, &[i2])]),
            i4.clone(),
            i5 - &sum_terms(&[(1, 1, &[&j.i3x]), (-1, 2, &[&j.i1xy]), (-1, 1, &[&j.i2x])]),
        ],
        Group::IIIa => vec![
            sum_terms(&[
                (-1, 1, &[&j.i3x]),
                (1, 2, &[&j.i1x, i1]),
                (1, 2, &[&j.i1xy]),
                (1, 2, &[&j.i1xx]),
            ]),
            i2 - &half(j.i1x.clone()),
            i4.clone(),
            i5 - &sum_terms(&[(-1, 2, &[&j.i1xy]), (1, 1, &[i2, i1]), (1, 1, &[&j.i2y])]),
        ],
        Group::IIIb => vec![
            sum_terms(&[
                (-1, 1, &[&j.i4y]),
                (-1, 2, &[&j.i1y, i1]),
                (1, 2, &[&j.i1xy]),
                (1, 2, &[&j.i1yy]),
            ]),
            i2 + &half(j.i1y.clone()),
            i3.clone(),
            i5 - &sum_terms(&[(1, 1, &[i2, i1]), (-1, 2, &[&j.i1xy]), (-1, 1, &[&j.i2x])]),
        ],
        Group::IIIc => vec![
            sum_terms(&[
                (-1, 1, &[&j.i3y]),
                (1, 2, &[&j.i1xy]),
                (1, 2, &[&j.i1xx]),
                (-1, 2, &[i1, &j.i1y]),
                (-1, 2, &[i1, &j.i1x]),
                (-1, 1, &[&j.i3x]),
            ]),
            i2 - &half(&j.i1x - &j.i1y),
            &(i4 + i2) - i3,
            i5 - &sum_terms(&[
                (1, 2, &[i1, &j.i1x]),
                (-1, 2, &[i1, &j.i1y]),
                (-1, 2, &[&j.i1xy]),
                (-1, 1, &[i1, i3]),
            ]),
        ],
        Group::V => vec![
            &j.i1xx - &j.i1yy,
            sum_terms(&[
                (1, 1, &[&j.i1xx]),
                (-2, 1, &[i1, &j.i1x]),
                (2, 1, &[&j.i1xy]),
                (-1, 1, &[i1, &j.i1y]),
            ]),
            i2 - &sum_terms(&[(1, 3, &[&j.i1x]), (-1, 3, &[&j.i1y])]),
            i3.clone(),
            i4.clone(),
            i5 - &sum_terms(&[(-1, 2, &[&j.i1xy]), (1, 1, &[&j.i2y])]),
        ],
    };
    Ok(ConditionReport::new(group.label(), residuals))
}

/// Existence of every right factor of the group, for any `q`.
///
/// Concatenates the two-factor type conditions whose right factor carries each
/// symbol of the group. Together with irreducibility of the order-2 members
/// this is necessary and sufficient for the group's intersection.
pub fn right_factor_conditions(inv: &InvariantSet, group: Group) -> ConditionReport {
    let jets = Jets::new(inv);
    let residuals = group
        .patterns()
        .into_iter()
        .filter_map(FactType::with_right_factor)
        .flat_map(|t| jets.residuals(t))
        .collect();
    ConditionReport::new(group.label(), residuals)
}

/// Overall outcome of a complete-reducibility check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducibilityStatus {
    CompletelyReducible,
    NotByTheseFactors,
    Unknown,
}

impl ReducibilityStatus {
    pub fn name(&self) -> &'static str {
        match self {
            ReducibilityStatus::CompletelyReducible => "CompletelyReducible",
            ReducibilityStatus::NotByTheseFactors => "NotByTheseFactors",
            ReducibilityStatus::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for ReducibilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Unknown,
}

/// Per-factor findings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCheck {
    pub factor: Lpdo,
    /// `None` when the symbol is not a product of `X`, `Y`, `S`.
    pub pattern: Option<SymbolPattern>,
    pub divides: bool,
    pub irreducibility: Irreducibility,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibilityVerdict {
    pub status: ReducibilityStatus,
    pub factors: Vec<FactorCheck>,
    pub lcm: SymbolPattern,
    pub lcm_matches: bool,
    pub group: Option<Group>,
}

fn linear(q: &RatFunc, slot: char) -> LinearForm {
    match slot {
        'X' => LinearForm::x(),
        'Y' => LinearForm::y(),
        _ => LinearForm {
            cx: RatFunc::one(),
            cy: q.clone(),
        },
    }
}

fn pattern_form(q: &RatFunc, p: SymbolPattern) -> Option<SymbolForm> {
    let slots = std::iter::repeat('X')
        .take(p.x as usize)
        .chain(std::iter::repeat('Y').take(p.y as usize))
        .chain(std::iter::repeat('S').take(p.s as usize));
    slots
        .map(|c| linear(q, c).to_form())
        .reduce(|a, b| a.mul(&b))
}

fn match_pattern(q: &RatFunc, sym: &SymbolForm) -> Option<SymbolPattern> {
    let d = sym.degree() as u32;
    (0..=d)
        .flat_map(|x| (0..=d - x).map(move |y| SymbolPattern { x, y, s: d - x - y }))
        .find(|&p| pattern_form(q, p).is_some_and(|f| f.is_proportional_to(sym)))
}

fn certify_irreducible(q: &RatFunc, f: &Lpdo, pattern: Option<SymbolPattern>) -> Irreducibility {
    let Some(p) = pattern else {
        return Irreducibility::Unknown;
    };
    if p.degree() == 1 {
        return Irreducibility::Irreducible;
    }
    if p.degree() != 2 || p.x > 1 || p.y > 1 || p.s > 1 {
        return Irreducibility::Unknown;
    }
    let slots: Vec<char> = [('X', p.x), ('Y', p.y), ('S', p.s)]
        .into_iter()
        .filter(|&(_, e)| e == 1)
        .map(|(c, _)| c)
        .collect();
    let (a, b) = (linear(q, slots[0]), linear(q, slots[1]));
    // products of X, Y, S all have leading coefficient 1, as does the monic factor
    let g = normalize_leading(f);
    for (s1, s2) in [(&a, &b), (&b, &a)] {
        match solve_order2_coprime(&g, s1, s2) {
            Ok(Some(_)) => return Irreducibility::Reducible,
            Ok(None) => {}
            Err(_) => return Irreducibility::Unknown,
        }
    }
    Irreducibility::Irreducible
}

/// Checks complete reducibility of `L` by the given right factors.
pub fn check_complete_reducibility(
    l: &Lpdo,
    factors: &[Lpdo],
) -> Result<ReducibilityVerdict, LpdoError> {
    let l = normalize_form1(l)?;
    let q = hyperbolic_q(&l)?;
    let mut seen: Vec<Lpdo> = Vec::new();
    let mut checks: Vec<FactorCheck> = Vec::new();
    for f in factors {
        match f.order() {
            Some(1) | Some(2) => {}
            other => return Err(LpdoError::UnsupportedFactorOrder(other.unwrap_or(0))),
        }
        let monic = normalize_leading(f);
        if seen.contains(&monic) {
            continue;
        }
        seen.push(monic);
        let pattern = match_pattern(&q, &f.symbol()?);
        if let Some(p) = pattern {
            if checks.iter().any(|c| c.pattern == Some(p)) {
                return Err(LpdoError::DuplicateFactorType(p));
            }
        }
        let divides = right_divide_any(&l, f)?.is_exact();
        checks.push(FactorCheck {
            factor: f.clone(),
            pattern,
            divides,
            irreducibility: certify_irreducible(&q, f, pattern),
        });
    }
    let tagged: Vec<SymbolFactorPattern> = checks
        .iter()
        .filter_map(|c| c.pattern)
        .map(|pattern| SymbolFactorPattern { q: q.clone(), pattern })
        .collect();
    let lcm = symbol_lcm(&tagged)?;
    let lcm_matches = lcm == SymbolPattern::SXY && tagged.len() == checks.len();
    let all_divide = checks.iter().all(|c| c.divides);
    let status = if !all_divide || !lcm_matches {
        ReducibilityStatus::NotByTheseFactors
    } else if checks.iter().any(|c| c.irreducibility == Irreducibility::Reducible) {
        ReducibilityStatus::NotByTheseFactors
    } else if checks.iter().any(|c| c.irreducibility == Irreducibility::Unknown) {
        ReducibilityStatus::Unknown
    } else {
        ReducibilityStatus::CompletelyReducible
    };
    let set: BTreeSet<SymbolPattern> = tagged.iter().map(|t| t.pattern).collect();
    Ok(ReducibilityVerdict {
        status,
        factors: checks,
        lcm,
        lcm_matches,
        group: Group::from_patterns(&set),
    })
}
