//! Polynomial expression language for potentials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := rational | 'i' | 'x0' | 'x1' | 'x2' | 'x3' | '(' expr ')' | '-' atom
//! ```
//!
//! `*` is the star product of the evaluation context and `f^n` is the n-fold
//! star product, so operand order matters when θ couples the variables.
//! Since negation binds to an atom, `-x1^2` means `(-x1)^2`; write
//! `-(x1^2)` or `-1*x1^2` for the other reading.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::complex::{fmt_rational, ComplexRational};
use crate::context::AlgebraContext;
use crate::error::ParseError;
use crate::scalar::{Axis, MoyalScalar};

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 64;

/// Parsed expression. Rational literals are non-negative; signs are `Neg` nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Rational(BigRational),
    I,
    Var(Axis),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Evaluates with `*` as the star product of `ctx`.
    pub fn evaluate(&self, ctx: &AlgebraContext) -> MoyalScalar {
        match self {
            Expr::Rational(r) => MoyalScalar::constant(ComplexRational::real(r.clone())),
            Expr::I => MoyalScalar::constant(ComplexRational::i()),
            Expr::Var(a) => MoyalScalar::var(*a),
            Expr::Neg(e) => -e.evaluate(ctx),
            Expr::Add(a, b) => a.evaluate(ctx) + b.evaluate(ctx),
            Expr::Sub(a, b) => a.evaluate(ctx) - b.evaluate(ctx),
            Expr::Mul(a, b) => ctx.star(&a.evaluate(ctx), &b.evaluate(ctx)),
            Expr::Pow(a, n) => {
                let base = a.evaluate(ctx);
                let mut out = MoyalScalar::one();
                for _ in 0..*n {
                    out = ctx.star(&out, &base);
                }
                out
            }
        }
    }

    /// Evaluates with `*` as the ordinary product.
    pub fn evaluate_commutative(&self) -> MoyalScalar {
        self.evaluate(&AlgebraContext::commutative())
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Pow(..) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Rational(r) => f.write_str(&fmt_rational(r)),
            Expr::I => f.write_str("i"),
            Expr::Var(a) => write!(f, "x{}", a.index()),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.write_at(f, 4)
            }
            Expr::Add(a, b) => {
                a.write_at(f, 1)?;
                f.write_str(" + ")?;
                b.write_at(f, 2)
            }
            Expr::Sub(a, b) => {
                a.write_at(f, 1)?;
                f.write_str(" - ")?;
                b.write_at(f, 2)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, 2)?;
                f.write_str("*")?;
                b.write_at(f, 3)
            }
            Expr::Pow(a, n) => {
                a.write_at(f, 4)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for Expr {
    /// Minimal parenthesisation; parsing the output gives back the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(b'-') => return Err(self.err("negative exponent")),
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.err("expected exponent")),
        }
        let start = self.pos;
        let text = self.digits();
        if matches!(self.src.get(self.pos), Some(b'/' | b'.')) {
            return Err(self.err("fractional exponent"));
        }
        let n: u32 = text
            .parse()
            .ok()
            .filter(|n| *n <= MAX_EXPONENT)
            .ok_or_else(|| ParseError::new(start, format!("exponent exceeds {MAX_EXPONENT}")))?;
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Expr::I)
            }
            Some(b'x') => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(c @ b'0'..=b'3') if !matches!(self.src.get(self.pos + 1), Some(d) if d.is_ascii_digit()) => {
                        self.pos += 1;
                        Ok(Expr::Var(Axis::ALL[(c - b'0') as usize]))
                    }
                    _ => Err(self.err("expected variable x0, x1, x2 or x3")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let num = BigInt::from(self.digits().parse::<u64>().map_err(|_| self.err("integer literal too large"))?);
                if self.src.get(self.pos) != Some(&b'/') {
                    return Ok(Expr::Rational(BigRational::from_integer(num)));
                }
                self.pos += 1;
                let den_pos = self.pos;
                let den = self.digits();
                if den.is_empty() {
                    return Err(self.err("expected denominator"));
                }
                let den = BigInt::from(den.parse::<u64>().map_err(|_| ParseError::new(den_pos, "denominator too large"))?);
                if den.is_zero() {
                    return Err(ParseError::new(den_pos, "zero denominator"));
                }
                Ok(Expr::Rational(BigRational::new(num, den)))
            }
            Some(c) => Err(self.err(format!("unexpected character {:?}", c as char))),
        }
    }
}

pub fn parse_polynomial(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => Err(p.err(format!("unexpected character {:?}", c as char))),
    }
}

/// Parses and evaluates in `ctx`.
pub fn parse_scalar(text: &str, ctx: &AlgebraContext) -> Result<MoyalScalar, ParseError> {
    Ok(parse_polynomial(text)?.evaluate(ctx))
}

/// Expression tree whose commutative value is `f`, in the canonical term order.
pub fn expr_of_scalar(f: &MoyalScalar) -> Expr {
    let mut out: Option<Expr> = None;
    for (m, c) in f.terms() {
        let mut factors = Vec::new();
        let (negative, coeff) = coefficient_expr(c);
        let is_unit = coeff.is_none();
        if let Some(e) = coeff {
            factors.push(e);
        }
        for ax in Axis::ALL {
            let e = m.0[ax.index()];
            if e == 1 {
                factors.push(Expr::Var(ax));
            } else if e > 1 {
                factors.push(Expr::Pow(Box::new(Expr::Var(ax)), e));
            }
        }
        if factors.is_empty() && is_unit {
            factors.push(Expr::Rational(BigRational::from_integer(1.into())));
        }
        let term = factors.into_iter().reduce(|a, b| Expr::Mul(Box::new(a), Box::new(b))).expect("nonempty");
        out = Some(match (out, negative) {
            (None, false) => term,
            (None, true) => Expr::Neg(Box::new(term)),
            (Some(acc), false) => Expr::Add(Box::new(acc), Box::new(term)),
            (Some(acc), true) => Expr::Sub(Box::new(acc), Box::new(term)),
        });
    }
    out.unwrap_or_else(|| Expr::Rational(BigRational::zero()))
}

/// Splits a coefficient into an overall sign and a factor, `None` for ±1.
fn coefficient_expr(c: &ComplexRational) -> (bool, Option<Expr>) {
    let lit = |r: &BigRational| Expr::Rational(r.abs());
    let one = BigRational::from_integer(1.into());
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        return (neg, (c.re.abs() != one).then(|| lit(&c.re)));
    }
    if c.re.is_zero() {
        let neg = c.im.is_negative();
        let e = if c.im.abs() == one { Expr::I } else { Expr::Mul(Box::new(lit(&c.im)), Box::new(Expr::I)) };
        return (neg, Some(e));
    }
    let re = if c.re.is_negative() { Expr::Neg(Box::new(lit(&c.re))) } else { lit(&c.re) };
    let im = if c.im.abs() == one { Expr::I } else { Expr::Mul(Box::new(lit(&c.im)), Box::new(Expr::I)) };
    let sum = if c.im.is_negative() { Expr::Sub(Box::new(re), Box::new(im)) } else { Expr::Add(Box::new(re), Box::new(im)) };
    (false, Some(sum))
}
