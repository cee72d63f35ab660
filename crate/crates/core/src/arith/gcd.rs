//! Polynomial gcd over `Q[x, y]`.
//!
//! Inputs are scaled to integer coefficients and viewed as polynomials in `x`
//! over `Z[y]`. Contents in `Z[y]` come from a primitive remainder sequence;
//! the primitive parts are combined with the subresultant remainder sequence
//! in `x`, whose exact divisions keep coefficient growth polynomial.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::poly::{BivarPoly, Monomial};
use super::Var;

/// Dense polynomial in `y` over `Z`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.0.last().expect("lead of zero polynomial")
    }

    fn sub(&self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(BigInt::zero);
            match o.0.get(i) {
                Some(b) => v.push(a - b),
                None => v.push(a),
            }
        }
        ZPoly(v).trim()
    }

    fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly(Vec::new());
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        ZPoly(v).trim()
    }

    fn pow(&self, e: usize) -> ZPoly {
        (0..e).fold(ZPoly::one(), |acc, _| acc.mul(self))
    }

    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_int(&self, c: &BigInt) -> ZPoly {
        ZPoly(self.0.iter().map(|a| a / c).collect())
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.int_content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }

    /// `lead(d)^(δ+1) · self mod d`.
    fn prem(&self, d: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        if r.0.len() < d.0.len() {
            return r;
        }
        let ld = d.lead().clone();
        for k in (0..=self.degree() - d.degree()).rev() {
            let lr = r.0.get(d.degree() + k).cloned().unwrap_or_else(BigInt::zero);
            for c in r.0.iter_mut() {
                *c *= &ld;
            }
            if !lr.is_zero() {
                for (i, b) in d.0.iter().enumerate() {
                    r.0[i + k] -= &lr * b;
                }
            }
        }
        r.trim()
    }

    /// Exact quotient; the caller guarantees divisibility in `Z[y]`.
    fn div_exact(&self, d: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.0.len() - d.0.len() + 1];
        while !r.is_zero() && r.0.len() >= d.0.len() {
            let shift = r.0.len() - d.0.len();
            let c = r.lead() / d.lead();
            for (i, b) in d.0.iter().enumerate() {
                r.0[i + shift] -= &c * b;
            }
            q[shift] = c;
            r = r.trim();
        }
        debug_assert!(r.is_zero(), "inexact division in Z[y]");
        ZPoly(q).trim()
    }

    fn gcd(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return o.primitive_with_content();
        }
        if o.is_zero() {
            return self.primitive_with_content();
        }
        let g_int = self.int_content().gcd(&o.int_content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == 0 {
                a = ZPoly::one();
                break;
            }
            let r = a.prem(&b).primitive();
            a = b;
            b = r;
        }
        ZPoly(a.0.iter().map(|c| c * &g_int).collect())
    }

    fn primitive_with_content(&self) -> ZPoly {
        let p = self.primitive();
        let c = self.int_content();
        ZPoly(p.0.iter().map(|a| a * &c).collect())
    }
}

/// `Z[y][x]`: index is the power of `x`.
type Rec = Vec<ZPoly>;

fn to_rec(p: &BivarPoly) -> Rec {
    let scale = BigRational::from_integer(p.denominator_lcm());
    let dx = p.degree_in(Var::X).unwrap_or(0) as usize;
    let dy = p.degree_in(Var::Y).unwrap_or(0) as usize;
    let mut rec = vec![ZPoly(vec![BigInt::zero(); dy + 1]); dx + 1];
    for (m, c) in p.terms() {
        rec[m.x as usize].0[m.y as usize] = (c * &scale).to_integer();
    }
    rec.into_iter().map(ZPoly::trim).collect()
}

fn from_rec(r: &Rec) -> BivarPoly {
    BivarPoly::from_terms(r.iter().enumerate().flat_map(|(i, u)| {
        u.0.iter()
            .enumerate()
            .map(move |(j, c)| (i as u32, j as u32, BigRational::from_integer(c.clone())))
    }))
}

fn rec_trim(mut r: Rec) -> Rec {
    while r.last().is_some_and(ZPoly::is_zero) {
        r.pop();
    }
    r
}

fn content(r: &Rec) -> ZPoly {
    let mut g = ZPoly(Vec::new());
    for c in r.iter().filter(|c| !c.is_zero()) {
        g = g.gcd(c);
        if g.degree() == 0 && g.lead().abs().is_one() {
            break;
        }
    }
    g
}

fn primitive(r: &Rec, cont: &ZPoly) -> Rec {
    r.iter().map(|c| c.div_exact(cont)).collect()
}

/// `lead(b)^(δ+1) · a mod b` in `x`.
fn prem(a: &Rec, b: &Rec) -> Rec {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    for k in (0..=a.len() - b.len()).rev() {
        let lr = r[db + k].clone();
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        if !lr.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                r[i + k] = r[i + k].sub(&bc.mul(&lr));
            }
        }
    }
    rec_trim(r)
}

/// A gcd of `a` and `b` in `Q[x, y]`, determined up to a nonzero rational factor.
pub fn poly_gcd(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return BivarPoly::one();
    }
    if a.num_terms() == 1 && b.num_terms() == 1 {
        let (ma, _) = a.leading().unwrap();
        let (mb, _) = b.leading().unwrap();
        return BivarPoly::monomial(
            BigRational::one(),
            Monomial::new(ma.x.min(mb.x), ma.y.min(mb.y)),
        );
    }
    let (ra, rb) = (to_rec(a), to_rec(b));
    let (ca, cb) = (content(&ra), content(&rb));
    let g_cont = ca.gcd(&cb);
    let mut p = primitive(&ra, &ca);
    let mut s = primitive(&rb, &cb);
    if p.len() < s.len() {
        std::mem::swap(&mut p, &mut s);
    }
    // subresultant remainder sequence
    let mut g = ZPoly::one();
    let mut h = ZPoly::one();
    let g_prim = loop {
        if s.len() == 1 {
            break vec![ZPoly::one()];
        }
        let delta = p.len() - s.len();
        let r = prem(&p, &s);
        if r.is_empty() {
            let c = content(&s);
            break primitive(&s, &c);
        }
        let divisor = g.mul(&h.pow(delta));
        p = s;
        s = r.iter().map(|c| c.div_exact(&divisor)).collect();
        g = p.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1))
        };
    };
    let g: Rec = g_prim.iter().map(|c| c.mul(&g_cont)).collect();
    from_rec(&g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Var;

    fn x() -> BivarPoly {
        BivarPoly::var(Var::X)
    }
    fn y() -> BivarPoly {
        BivarPoly::var(Var::Y)
    }
    fn c(n: i64) -> BivarPoly {
        BivarPoly::from_int(n)
    }

    fn assert_associate(g: &BivarPoly, expected: &BivarPoly) {
        let (_, lg) = g.leading().unwrap();
        let (_, le) = expected.leading().unwrap();
        assert_eq!(g.scale(&(le / lg)), *expected, "gcd {g} vs {expected}");
    }

    #[test]
    fn gcd_of_common_linear_factor() {
        let f = &x() + &y();
        let a = &f * &(&x() - &c(1));
        let b = &f * &(&(&y() * &y()) + &c(3));
        assert_associate(&poly_gcd(&a, &b), &f);
    }

    #[test]
    fn gcd_with_content_in_y() {
        // y*(x+1) and y^2*(x-1)
        let a = &y() * &(&x() + &c(1));
        let b = &(&y() * &y()) * &(&x() - &c(1));
        assert_associate(&poly_gcd(&a, &b), &y());
    }

    #[test]
    fn coprime_gives_constant() {
        let a = &(&x() * &y()) + &c(1);
        let b = &x() - &y();
        assert!(poly_gcd(&a, &b).is_constant());
    }

    #[test]
    fn gcd_of_powers() {
        let f = &(&x() * &y()) + &c(2);
        let a = f.pow(3);
        let b = &f.pow(2) * &(&x() + &c(5));
        assert_associate(&poly_gcd(&a, &b), &f.pow(2));
    }
}
