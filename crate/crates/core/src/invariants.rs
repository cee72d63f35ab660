//! Generating gauge invariants of hyperbolic third-order operators.
//!
//! For `L = (Dx + q Dy) Dx Dy + Σ_{i+j≤2} a_ij Dx^i Dy^j` the six quantities
//! `q, I1, …, I5` generate every differential invariant of `L` under
//! `L ↦ g⁻¹ ∘ L ∘ g`. Two operators with equal tuples are gauge equivalent.

use std::fmt;

use crate::arith::{sum_terms, RatFunc};
use crate::error::LpdoError;
use crate::normal_form::hyperbolic_q;
use crate::operator::Lpdo;

/// The invariant tuple `(q, I1, I2, I3, I4, I5)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet {
    pub q: RatFunc,
    pub i1: RatFunc,
    pub i2: RatFunc,
    pub i3: RatFunc,
    pub i4: RatFunc,
    pub i5: RatFunc,
}

impl InvariantSet {
    pub fn new(q: RatFunc, i: [RatFunc; 5]) -> Self {
        let [i1, i2, i3, i4, i5] = i;
        InvariantSet { q, i1, i2, i3, i4, i5 }
    }

    /// Entries in order `q, I1, …, I5`.
    pub fn as_array(&self) -> [&RatFunc; 6] {
        [&self.q, &self.i1, &self.i2, &self.i3, &self.i4, &self.i5]
    }

    pub const NAMES: [&'static str; 6] = ["q", "I1", "I2", "I3", "I4", "I5"];
}

impl fmt::Display for InvariantSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (name, v)) in Self::NAMES.iter().zip(self.as_array()).enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name} = {v}")?;
        }
        Ok(())
    }
}

/// Evaluates the invariants of a hyperbolic operator with `p = 1`.
pub fn compute_invariants(l: &Lpdo) -> Result<InvariantSet, LpdoError> {
    let q = hyperbolic_q(l)?;
    let a = |i, j| l.coeff(i, j);
    let (a20, a11, a02) = (a(2, 0), a(1, 1), a(0, 2));
    let (a10, a01, a00) = (a(1, 0), a(0, 1), a(0, 0));
    let (qx, qy, qxy) = (q.dx(), q.dy(), q.partial_n(1, 1));
    let (a20x, a20y) = (a20.dx(), a20.dy());
    let (a11x, a11y, a11xy) = (a11.dx(), a11.dy(), a11.partial_n(1, 1));
    let (a02x, a02y) = (a02.dx(), a02.dy());

    let i1 = sum_terms(&[
        (2, 1, &[&q, &q, &a20]),
        (-1, 1, &[&q, &a11]),
        (2, 1, &[&a02]),
    ]);
    let i2 = sum_terms(&[
        (-1, 1, &[&q, &a02y]),
        (1, 1, &[&a02, &qy]),
        (1, 1, &[&q, &q, &a20x]),
    ]);
    let i3 = sum_terms(&[
        (1, 1, &[&a10]),
        (2, 1, &[&qy, &a20]),
        (1, 1, &[&a20, &a20, &q]),
        (-1, 1, &[&a11y]),
        (1, 1, &[&q, &a20y]),
        (-1, 1, &[&a11, &a20]),
    ]);
    let i4 = sum_terms(&[
        (1, 1, &[&a01, &q, &q]),
        (-3, 1, &[&qx, &a02]),
        (1, 1, &[&a02, &a02]),
        (-1, 1, &[&a11x, &q, &q]),
        (1, 1, &[&a11, &q, &qx]),
        (1, 1, &[&q, &a02x]),
        (-1, 1, &[&a02, &a11, &q]),
    ]);
    let i5 = sum_terms(&[
        (1, 1, &[&a00, &q]),
        (2, 1, &[&a02, &a20x]),
        (-1, 1, &[&a02, &a10]),
        (-1, 1, &[&a01, &a20, &q]),
        (-1, 2, &[&a11xy, &q]),
        (1, 1, &[&q, &qx, &a20y]),
        (-1, 1, &[&a11, &q, &a20x]),
        (1, 1, &[&q, &qy, &a20x]),
        (2, 1, &[&q, &q, &a20, &a20x]),
        (1, 1, &[&q, &qxy, &a20]),
        (1, 1, &[&a20, &a11, &a02]),
    ]);
    Ok(InvariantSet { q, i1, i2, i3, i4, i5 })
}

/// Componentwise exact equality: the two tuples describe the same gauge class.
pub fn equivalence_class_equal(a: &InvariantSet, b: &InvariantSet) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(r: RatFunc) -> Lpdo {
        Lpdo::scalar(r)
    }

    fn two_types() -> Lpdo {
        let (x, y) = (RatFunc::x(), RatFunc::y());
        &(&Lpdo::d(2, 1) + &Lpdo::d(1, 2)) + &(&f(&x - &y) * &(&Lpdo::dx() + &Lpdo::dy()))
    }

    #[test]
    fn two_type_operator_invariants() {
        let xy = &RatFunc::x() - &RatFunc::y();
        let expected = InvariantSet::new(
            RatFunc::one(),
            [RatFunc::zero(), RatFunc::zero(), xy.clone(), xy, RatFunc::zero()],
        );
        assert!(equivalence_class_equal(&compute_invariants(&two_types()).unwrap(), &expected));
    }

    #[test]
    fn bare_symbol_has_zero_invariants() {
        let inv = compute_invariants(&(&Lpdo::d(2, 1) + &Lpdo::d(1, 2))).unwrap();
        assert!(inv.q.is_one());
        assert!([&inv.i1, &inv.i2, &inv.i3, &inv.i4, &inv.i5].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn constant_term_shifts_i5() {
        let a = compute_invariants(&two_types()).unwrap();
        let b = compute_invariants(&(&two_types() + &Lpdo::one())).unwrap();
        assert!(!equivalence_class_equal(&a, &b));
        assert_eq!(&b.i5 - &a.i5, a.q);
    }

    #[test]
    fn requires_unit_p() {
        let l = two_types().scale_left(&RatFunc::from_int(2));
        assert_eq!(compute_invariants(&l), Err(LpdoError::NotNormalized));
        assert_eq!(compute_invariants(&Lpdo::d(3, 0)), Err(LpdoError::NotFormOne));
    }
}
