#![allow(dead_code)]

use lpdo::{parse_operator, Lpdo, RatFunc};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn op(s: &str) -> Lpdo {
    parse_operator(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn scalar(f: RatFunc) -> Lpdo {
    Lpdo::scalar(f)
}

/// Polynomial of total degree at most `deg` with coefficients in `-3..=3`.
pub fn poly(rng: &mut ChaCha8Rng, deg: u32) -> RatFunc {
    let (x, y) = (RatFunc::x(), RatFunc::y());
    let mut acc = RatFunc::zero();
    for i in 0..=deg {
        for j in 0..=deg - i {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                acc = &acc + &(&x.pow(i) * &y.pow(j)).scale_int(c);
            }
        }
    }
    acc
}

pub fn nonzero_poly(rng: &mut ChaCha8Rng, deg: u32) -> RatFunc {
    loop {
        let p = poly(rng, deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Operator of order exactly `order` with polynomial coefficients.
pub fn operator(rng: &mut ChaCha8Rng, order: u32, deg: u32) -> Lpdo {
    loop {
        let mut l = Lpdo::zero();
        for i in 0..=order {
            for j in 0..=order - i {
                l = &l + &Lpdo::term(poly(rng, deg), i, j);
            }
        }
        if l.order() == Some(order as usize) {
            return l;
        }
    }
}

/// `a·Dx + b·Dy + c` with `(a, b) ≠ (0, 0)`.
pub fn first_order(rng: &mut ChaCha8Rng, deg: u32) -> Lpdo {
    operator(rng, 1, deg)
}

/// Hyperbolic operator `Dx Dy (Dx + q Dy) + Σ_{i+j≤2} a_ij Dx^i Dy^j`.
pub fn hyperbolic(rng: &mut ChaCha8Rng, q: &RatFunc, deg: u32) -> Lpdo {
    let mut l = &Lpdo::d(2, 1) + &Lpdo::term(q.clone(), 1, 2);
    for i in 0..=2 {
        for j in 0..=2 - i {
            l = &l + &Lpdo::term(poly(rng, deg), i, j);
        }
    }
    l
}

/// Values of `q` used for families with a non-constant symbol.
pub fn sample_qs() -> Vec<RatFunc> {
    ["1", "2", "1 + x", "x*y + 2", "x + y^2 + 1"]
        .iter()
        .map(|s| op(s).coeff(0, 0))
        .collect()
}

/// Operator with symbol `X^a Y^b (X + qY)^c` and random lower-order terms.
pub fn with_pattern(rng: &mut ChaCha8Rng, q: &RatFunc, p: lpdo::SymbolPattern, deg: u32) -> Lpdo {
    let s = &Lpdo::dx() + &Lpdo::term(q.clone(), 0, 1);
    let mut top = Lpdo::one();
    for _ in 0..p.x {
        top = &top * &Lpdo::dx();
    }
    for _ in 0..p.y {
        top = &top * &Lpdo::dy();
    }
    for _ in 0..p.s {
        top = &top * &s;
    }
    let order = p.degree() as usize;
    let mut l = top.homogeneous_part(order);
    for k in 0..order as u32 {
        for i in 0..=k {
            l = &l + &Lpdo::term(poly(rng, deg), i, k - i);
        }
    }
    l
}

pub fn report(n: u32, ok: bool, what: &str) {
    println!("criterion {n:>2}: {} {what}", if ok { "PASS" } else { "FAIL" });
}
