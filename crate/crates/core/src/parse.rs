//! Text syntax for operators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 'x' | 'y' | D-name | '(' expr ')'
//! ```
//!
//! `*` is composition, so `Dx*x` is `x*Dx + 1`. D-names are `D` followed by
//! `x`/`y` letters: `Dx`, `Dy`, `Dxy`, `Dxxy`, …. Both sides of `/` must be
//! free of `Dx`, `Dy`.

use std::fmt;

use num::{BigInt, BigRational};
use thiserror::Error;

use crate::arith::RatFunc;
use crate::operator::Lpdo;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at column {}", pos + 1)]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unknown identifier {name:?} at column {}", pos + 1)]
    UnknownIdentifier { name: String, pos: usize },
    #[error("expected {expected} at column {}", pos + 1)]
    Expected { expected: &'static str, pos: usize },
    #[error("negative exponent at column {}", pos + 1)]
    NegativeExponent { pos: usize },
    #[error("exponent too large at column {}", pos + 1)]
    ExponentTooLarge { pos: usize },
    #[error("operator used in a quotient at column {}; write (1/f)*D instead of D/f", pos + 1)]
    OperatorInQuotient { pos: usize },
    #[error("division by zero at column {}", pos + 1)]
    DivisionByZero { pos: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    D(u32, u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '∘' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().map(|p| p.1).collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), pos));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_alphanumeric() {
                k += 1;
            }
            let name: String = chars[start..k].iter().map(|p| p.1).collect();
            out.push((ident(&name, pos)?, pos));
        } else {
            return Err(ParseError::UnexpectedChar { ch: c, pos });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

fn ident(name: &str, pos: usize) -> Result<Tok, ParseError> {
    match name {
        "x" => return Ok(Tok::X),
        "y" => return Ok(Tok::Y),
        _ => {}
    }
    let unknown = || ParseError::UnknownIdentifier {
        name: name.to_string(),
        pos,
    };
    let rest = name.strip_prefix('D').ok_or_else(unknown)?;
    if rest.is_empty() {
        return Err(unknown());
    }
    let (mut i, mut j) = (0, 0);
    for c in rest.chars() {
        match c {
            'x' => i += 1,
            'y' => j += 1,
            _ => return Err(unknown()),
        }
    }
    Ok(Tok::D(i, j))
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    X,
    Y,
    D(u32, u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Compose(Box<Expr>, Box<Expr>),
    /// Quotient of two scalar subexpressions; `pos` is the `/` column.
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// True when the subtree mentions `Dx` or `Dy`.
    pub fn has_operator(&self) -> bool {
        match self {
            Expr::Int(_) | Expr::X | Expr::Y => false,
            Expr::D(..) => true,
            Expr::Neg(a) | Expr::Pow(a, _) => a.has_operator(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Compose(a, b) | Expr::Div(a, b, _) => {
                a.has_operator() || b.has_operator()
            }
        }
    }

    /// Evaluates the tree to an operator.
    pub fn eval(&self) -> Result<Lpdo, ParseError> {
        Ok(match self {
            Expr::Int(n) => Lpdo::scalar(RatFunc::from_rational(BigRational::from_integer(n.clone()))),
            Expr::X => Lpdo::scalar(RatFunc::x()),
            Expr::Y => Lpdo::scalar(RatFunc::y()),
            Expr::D(i, j) => Lpdo::d(*i, *j),
            Expr::Neg(a) => -&a.eval()?,
            Expr::Add(a, b) => &a.eval()? + &b.eval()?,
            Expr::Sub(a, b) => &a.eval()? - &b.eval()?,
            Expr::Compose(a, b) => &a.eval()? * &b.eval()?,
            Expr::Div(a, b, pos) => {
                let num = a.eval()?.coeff(0, 0);
                let den = b.eval()?.coeff(0, 0);
                let q = num
                    .checked_div(&den)
                    .map_err(|_| ParseError::DivisionByZero { pos: *pos })?;
                Lpdo::scalar(q)
            }
            Expr::Pow(a, e) => a.eval()?.pow(*e),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::X => f.write_str("x"),
            Expr::Y => f.write_str("y"),
            Expr::D(i, j) => write!(f, "D{}{}", "x".repeat(*i as usize), "y".repeat(*j as usize)),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Compose(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b, _) => write!(f, "({a} / {b})"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Compose(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    let (_, pos) = self.bump();
                    let rhs = self.unary()?;
                    if lhs.has_operator() || rhs.has_operator() {
                        return Err(ParseError::OperatorInQuotient { pos });
                    }
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump().0 {
            Tok::Int(n) => {
                let e = u32::try_from(&n).map_err(|_| ParseError::ExponentTooLarge { pos })?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            Tok::Minus => Err(ParseError::NegativeExponent { pos }),
            _ => Err(ParseError::Expected {
                expected: "integer exponent",
                pos,
            }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump().0 {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::X => Ok(Expr::X),
            Tok::Y => Ok(Expr::Y),
            Tok::D(i, j) => Ok(Expr::D(i, j)),
            Tok::LParen => {
                let e = self.expr()?;
                let close = self.pos();
                match self.bump().0 {
                    Tok::RParen => Ok(e),
                    _ => Err(ParseError::Expected {
                        expected: "')'",
                        pos: close,
                    }),
                }
            }
            _ => Err(ParseError::Expected {
                expected: "operand",
                pos,
            }),
        }
    }
}

/// Parses `src` into an expression tree.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => Err(ParseError::Expected {
            expected: "end of input",
            pos: p.pos(),
        }),
    }
}

/// Parses and evaluates `src`.
pub fn parse_operator(src: &str) -> Result<Lpdo, ParseError> {
    parse(src)?.eval()
}

/// Parses an order-0 expression as a rational function.
pub fn parse_function(src: &str) -> Result<RatFunc, ParseError> {
    let e = parse(src)?;
    if e.has_operator() {
        return Err(ParseError::Expected {
            expected: "a function of x and y",
            pos: 0,
        });
    }
    Ok(e.eval()?.coeff(0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> Lpdo {
        parse_operator(s).unwrap()
    }

    #[test]
    fn landau_expanded() {
        let l = op("Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x+2)*Dx*Dy + Dx + (2+x)*Dy");
        let q = op("Dx + 1");
        let p = op("Dx + x*Dy");
        assert_eq!(l, Lpdo::compose_all([&q, &q, &p]));
    }

    #[test]
    fn composition_is_not_commutative() {
        assert_eq!(op("Dx*x"), op("x*Dx + 1"));
        assert_eq!(op("Dxxy"), op("Dx^2*Dy"));
        assert_eq!(op("Dxy"), op("Dx*Dy"));
    }

    #[test]
    fn precedence() {
        assert_eq!(op("-x^2"), op("0 - x*x"));
        assert_eq!(op("2*x - 3 - 1"), op("2*x - 4"));
        assert_eq!(op("1/2/x"), Lpdo::scalar(&RatFunc::x().scale_int(2).recip().unwrap() * &RatFunc::one()));
        assert_eq!(op("(1/y)*Dx"), Lpdo::term(RatFunc::y().recip().unwrap(), 1, 0));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("Dx / y"), Err(ParseError::OperatorInQuotient { pos: 3 }));
        assert_eq!(parse("x^-1"), Err(ParseError::NegativeExponent { pos: 2 }));
        assert_eq!(parse("x + # "), Err(ParseError::UnexpectedChar { ch: '#', pos: 4 }));
        assert!(matches!(parse("Dz"), Err(ParseError::UnknownIdentifier { .. })));
        assert!(matches!(parse("(x + y"), Err(ParseError::Expected { pos: 6, .. })));
        assert!(matches!(parse("x y"), Err(ParseError::Expected { pos: 2, .. })));
        assert_eq!(parse_operator("1/(x - x)"), Err(ParseError::DivisionByZero { pos: 1 }));
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x+2)*Dx*Dy + Dx + (2+x)*Dy",
            "(Dx + Dy + x) * (Dx*Dy + y*Dx + y^2*Dy + y^3)",
            "(1/(x - y))*Dx - (3/2)*x*y*Dy + (x^2 + 1)/(2*x*y)",
            "-Dx + (-x - 1)/(x + y)",
        ] {
            let l = op(s);
            assert_eq!(op(&l.to_string()), l, "{l}");
        }
    }

    #[test]
    fn function_parsing() {
        assert_eq!(parse_function("x^2 + 1").unwrap(), &RatFunc::x().pow(2) + &RatFunc::one());
        assert!(parse_function("Dx").is_err());
    }
}
