//! Text syntax for polynomials, algebraic numbers, sets and functions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' integer)?
//! atom     := number | 'x' | '(' expr ')' | abs(expr) | min(expr, expr) | max(expr, expr)
//! number   := integer ('/' integer)? | integer '.' digits
//! alg      := ['-'] number | root(expr, ['-'] number, ['-'] number)
//! set      := 'empty' | '{}' | part ('u' part)*
//! part     := ('(' | '[') alg ',' alg (')' | ']') | '{' alg '}'
//! function := expr | piece(set, expr) (';' piece(set, expr))*
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{AlgebraicNumber, Polynomial, Rational};
use crate::pwfun::{PiecewiseFunction, RationalFunction};
use crate::topology::{IntervalSet, Piece};

/// Parsed arithmetic expression in the variable `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Abs(Box<Expr>),
    Min(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Evaluates as a rational function. Lattice sugar is rejected.
    pub fn to_ratfn(&self) -> Result<RationalFunction> {
        Ok(match self {
            Expr::Num(r) => RationalFunction::constant(r.clone()),
            Expr::X => RationalFunction::x(),
            Expr::Neg(a) => a.to_ratfn()?.neg(),
            Expr::Add(a, b) => a.to_ratfn()?.add(&b.to_ratfn()?),
            Expr::Sub(a, b) => a.to_ratfn()?.sub(&b.to_ratfn()?),
            Expr::Mul(a, b) => a.to_ratfn()?.mul(&b.to_ratfn()?),
            Expr::Div(a, b) => a.to_ratfn()?.div(&b.to_ratfn()?)?,
            Expr::Pow(a, k) => a.to_ratfn()?.pow(*k),
            Expr::Abs(_) | Expr::Min(..) | Expr::Max(..) => {
                return Err(Error::Parse { pos: 0, msg: "abs/min/max are not rational functions".into() })
            }
        })
    }

    pub fn to_poly(&self) -> Result<Polynomial> {
        let r = self.to_ratfn()?;
        match r.den().constant_value() {
            Some(d) => Ok(r.num().scale(&d.recip())),
            None => Err(Error::Parse { pos: 0, msg: format!("{} is not a polynomial", r.render()) }),
        }
    }

    /// Evaluates pointwise on `domain`; division shrinks the domain to the
    /// cozero set of the divisor.
    pub fn to_function(&self, domain: &IntervalSet) -> Result<PiecewiseFunction> {
        Ok(match self {
            Expr::Num(r) => PiecewiseFunction::constant(domain, r.clone()),
            Expr::X => PiecewiseFunction::polynomial(domain, Polynomial::x()),
            Expr::Neg(a) => a.to_function(domain)?.neg(),
            Expr::Add(a, b) => a.to_function(domain)?.add(&b.to_function(domain)?)?,
            Expr::Sub(a, b) => a.to_function(domain)?.sub(&b.to_function(domain)?)?,
            Expr::Mul(a, b) => a.to_function(domain)?.mul(&b.to_function(domain)?)?,
            Expr::Div(a, b) => a.to_function(domain)?.div(&b.to_function(domain)?)?,
            Expr::Pow(a, k) => a.to_function(domain)?.pow(*k),
            Expr::Abs(a) => a.to_function(domain)?.abs(),
            Expr::Min(a, b) => a.to_function(domain)?.meet(&b.to_function(domain)?),
            Expr::Max(a, b) => a.to_function(domain)?.join(&b.to_function(domain)?),
        })
    }
}

/// Byte-level recursive-descent parser shared by every text format.
pub struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.error("unexpected trailing input")
        }
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    /// Next identifier, without consuming it.
    pub fn peek_ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || c == '_' || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        (len > 0).then(|| &rest[..len])
    }

    pub fn eat_ident(&mut self, word: &str) -> bool {
        if self.peek_ident() == Some(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    pub fn ident(&mut self) -> Result<&'a str> {
        match self.peek_ident() {
            Some(w) => {
                self.pos += w.len();
                Ok(w)
            }
            None => self.error("expected identifier"),
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return self.error("expected digits");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    pub fn integer(&mut self) -> Result<BigInt> {
        let d = self.digits()?;
        Ok(d.parse().expect("digits"))
    }

    pub fn usize(&mut self) -> Result<usize> {
        let at = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Parse { pos: at, msg: "integer too large".into() })
    }

    fn integer_or_decimal(&mut self) -> Result<Rational> {
        let n = self.integer()?;
        if !self.src[self.pos..].starts_with('.') {
            return Ok(Rational::from_integer(n));
        }
        self.pos += 1;
        let frac = self.digits()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let f: BigInt = frac.parse().expect("digits");
        Ok(Rational::new(n * &scale + f, scale))
    }

    /// Unsigned integer, fraction or decimal literal.
    pub fn number(&mut self) -> Result<Rational> {
        let n = self.integer_or_decimal()?;
        if !n.is_integer() {
            return Ok(n);
        }
        let n = n.to_integer();
        let save = self.pos;
        if self.eat('/') {
            if let Some(c) = self.peek() {
                if c.is_ascii_digit() {
                    let d = self.integer()?;
                    if d.is_zero() {
                        return self.error("zero denominator");
                    }
                    return Ok(Rational::new(n, d));
                }
            }
            self.pos = save;
        }
        Ok(Rational::from_integer(n))
    }

    pub fn signed_number(&mut self) -> Result<Rational> {
        if self.eat('-') {
            Ok(-self.number()?)
        } else {
            self.number()
        }
    }

    pub fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.pos;
            let k = self.usize()?;
            let k = u32::try_from(k).map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(self.integer_or_decimal()?)),
            Some(_) => match self.peek_ident() {
                Some("x") => {
                    self.pos += 1;
                    Ok(Expr::X)
                }
                Some(f @ ("abs" | "min" | "max")) => {
                    self.pos += f.len();
                    self.expect('(')?;
                    let a = self.expr()?;
                    let out = if f == "abs" {
                        Expr::Abs(Box::new(a))
                    } else {
                        self.expect(',')?;
                        let b = self.expr()?;
                        if f == "min" {
                            Expr::Min(Box::new(a), Box::new(b))
                        } else {
                            Expr::Max(Box::new(a), Box::new(b))
                        }
                    };
                    self.expect(')')?;
                    Ok(out)
                }
                Some(w) => self.error(format!("unknown name '{w}'")),
                None => self.error("expected expression"),
            },
            None => self.error("unexpected end of input"),
        }
    }

    /// Rational literal or `root(p, lo, hi)`.
    pub fn algebraic(&mut self) -> Result<AlgebraicNumber> {
        if self.eat_ident("root") {
            let at = self.pos;
            self.expect('(')?;
            let p = self.expr()?.to_poly().map_err(|e| relocate(e, at))?;
            self.expect(',')?;
            let lo = self.signed_number()?;
            self.expect(',')?;
            let hi = self.signed_number()?;
            self.expect(')')?;
            return AlgebraicNumber::root(&p, &lo, &hi);
        }
        Ok(self.signed_number()?.into())
    }

    pub fn set(&mut self) -> Result<IntervalSet> {
        if self.eat_ident("empty") {
            return Ok(IntervalSet::empty());
        }
        let mut pieces = Vec::new();
        loop {
            let at = self.pos;
            match self.peek() {
                Some('{') => {
                    self.pos += 1;
                    if !self.eat('}') {
                        pieces.push(Piece::point(self.algebraic()?));
                        self.expect('}')?;
                    }
                }
                Some(open @ ('(' | '[')) => {
                    self.pos += 1;
                    let lo = self.algebraic()?;
                    self.expect(',')?;
                    let hi = self.algebraic()?;
                    let close = match self.peek() {
                        Some(c @ (')' | ']')) => {
                            self.pos += 1;
                            c
                        }
                        _ => return self.error("expected ')' or ']'"),
                    };
                    if lo > hi || (lo == hi && !(open == '[' && close == ']')) {
                        return Err(Error::Parse { pos: at, msg: "empty or reversed interval".into() });
                    }
                    pieces.push(Piece::new(lo, hi, open == '[', close == ']'));
                }
                _ => return self.error("expected interval"),
            }
            if !(self.eat_ident("u") || self.eat_ident("U")) {
                break;
            }
        }
        IntervalSet::from_pieces(pieces).map_err(|e| relocate(e, 0))
    }

    /// A bare expression on `[0, 1]` or a `;`-separated list of pieces.
    pub fn function(&mut self) -> Result<PiecewiseFunction> {
        if self.peek_ident() != Some("piece") {
            return self.expr()?.to_function(&IntervalSet::full());
        }
        let mut parts = Vec::new();
        loop {
            if !self.eat_ident("piece") {
                return self.error("expected 'piece'");
            }
            self.expect('(')?;
            let set = self.set()?;
            self.expect(',')?;
            let e = self.expr()?;
            self.expect(')')?;
            parts.push(e.to_function(&set)?);
            if !self.eat(';') || self.at_end() {
                break;
            }
        }
        PiecewiseFunction::union_of(&parts)
    }
}

fn relocate(e: Error, pos: usize) -> Error {
    match e {
        Error::Parse { pos: 0, msg } => Error::Parse { pos, msg },
        other => other,
    }
}

pub(crate) fn whole<T>(text: &str, f: impl FnOnce(&mut Parser<'_>) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(text);
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    whole(text, |p| p.expr())
}

pub fn parse_poly(text: &str) -> Result<Polynomial> {
    parse_expr(text)?.to_poly()
}

pub fn parse_ratfn(text: &str) -> Result<RationalFunction> {
    parse_expr(text)?.to_ratfn()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    whole(text, |p| p.signed_number())
}

pub fn parse_algebraic(text: &str) -> Result<AlgebraicNumber> {
    whole(text, |p| p.algebraic())
}

pub fn parse_set(text: &str) -> Result<IntervalSet> {
    whole(text, |p| p.set())
}

pub fn parse_function(text: &str) -> Result<PiecewiseFunction> {
    whole(text, |p| p.function())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("x^2 - 1/2").unwrap().render(), "x^2 - 1/2");
        assert_eq!(parse_poly("(x+1)*(x-1)").unwrap(), Polynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(parse_poly("-x").unwrap(), Polynomial::from_ints(&[0, -1]));
        assert_eq!(parse_poly("0.25*x").unwrap(), Polynomial::new(vec![rat(0, 1), rat(1, 4)]));
        assert!(parse_poly("1/x").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x + + y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_set("[0,1/2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_set("(1/2,1/4)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn algebraic_literals() {
        let a = parse_algebraic("root(2*x^2 - 1, 0, 1)").unwrap();
        assert!(a > rat(7, 10).into() && a < rat(71, 100).into());
        assert_eq!(parse_algebraic("-3/4").unwrap(), rat(-3, 4).into());
        assert!(parse_algebraic("root(x^2 - 1, -2, 2)").is_err());
    }

    #[test]
    fn sets_and_functions() {
        let s = parse_set("[0,1/4) u {1/2} u (3/4,1]").unwrap();
        assert_eq!(s.render(), "[0,1/4) u {1/2} u (3/4,1]");
        assert!(parse_set("empty").unwrap().is_empty());
        assert!(parse_set("{}").unwrap().is_empty());
        let f = parse_function("piece([0,1/2], x); piece([1/2,1], 1 - x)").unwrap();
        assert_eq!(f.evaluate(&rat(3, 4).into()).unwrap(), rat(1, 4).into());
        assert!(parse_function("piece([0,1/2], x); piece([1/2,1], x + 1)").is_err());
    }
}
