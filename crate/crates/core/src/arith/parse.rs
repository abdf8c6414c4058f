//! Coefficient expression grammar.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ("^" signed-int)?
//! atom   := unsigned-int | ident | "(" expr ")" | "-" atom
//! ```
//!
//! Identifiers must be generators of the context; whitespace is ignored. Unary
//! minus binds tighter than `^`, so `-x^2` reads as `(-x)^2`. The printer
//! emits the same grammar and never relies on that reading for a leading
//! negative term.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::poly::{LaurentPoly, Monomial};
use super::ratfn::RatFn;
use super::ring::Ctx;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{other}`") })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a Ctx,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<RatFn> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFn> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.factor()?;
                    acc = acc.try_div(&d)?.reduced();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFn> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(k)) => {
                let k: i32 = i32::try_from(&k)
                    .map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })?;
                base.pow(if negative { -k } else { k })
            }
            _ => Err(Error::Syntax { pos: at, msg: "expected integer exponent".into() }),
        }
    }

    fn atom(&mut self) -> Result<RatFn> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(RatFn::constant(self.ctx, BigRational::from_integer(v))),
            Some(Tok::Ident(name)) => match self.ctx.index_of(&name) {
                Some(_) => RatFn::var(self.ctx, &name),
                None => Err(Error::UnknownGenerator(name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.pos -= 1;
                        self.err("expected `)`")
                    }
                }
            }
            Some(Tok::Minus) => Ok(-self.atom()?),
            Some(t) => Err(Error::Syntax { pos: at, msg: format!("unexpected token {t:?}") }),
            None => Err(Error::Syntax { pos: at, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parses a coefficient expression into a rational function over `ctx`.
pub fn parse_coeff(src: &str, ctx: &Ctx) -> Result<RatFn> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), ctx };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ctx: &Ctx, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in ctx.names().iter().zip(m.exps()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

fn leading_power(m: &Monomial) -> i32 {
    m.exps().iter().copied().find(|&e| e != 0).unwrap_or(0)
}

impl fmt::Display for LaurentPoly {
    /// Terms in ascending lexicographic monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write_rational(f, &mag)?;
            } else if mag.is_one() {
                // `-x^2` would read back as `(-x)^2`.
                if i == 0 && neg && leading_power(m) != 1 {
                    f.write_str("1*")?;
                }
                write_monomial(f, self.ctx(), m)?;
            } else {
                write_rational(f, &mag)?;
                f.write_str("*")?;
                write_monomial(f, self.ctx(), m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.den_factors();
        if factors.is_empty() {
            return write!(f, "{}", self.numer());
        }
        write!(f, "({})/", self.numer())?;
        let single = factors.len() == 1 && factors[0].1 == 1;
        if !single {
            f.write_str("(")?;
        }
        for (i, (p, e)) in factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "({p})")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if !single {
            f.write_str(")")?;
        }
        Ok(())
    }
}
