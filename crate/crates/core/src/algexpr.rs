//! Exact algebraic constants: integers, the four operations and nested square
//! roots.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := ['-'] (integer | 'sqrt' '(' expr ')' | '(' expr ')')
//! ```
//!
//! Whitespace is ignored and there is no implicit multiplication.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::real::Real;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgExpr {
    Int(BigInt),
    Neg(Box<AlgExpr>),
    Add(Box<AlgExpr>, Box<AlgExpr>),
    Sub(Box<AlgExpr>, Box<AlgExpr>),
    Mul(Box<AlgExpr>, Box<AlgExpr>),
    Div(Box<AlgExpr>, Box<AlgExpr>),
    Sqrt(Box<AlgExpr>),
}

impl AlgExpr {
    pub fn int(v: impl Into<BigInt>) -> Self {
        AlgExpr::Int(v.into())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        p.skip_ws();
        if p.at_end() {
            return Err(Error::Syntax { offset: 0, message: "empty expression".into() });
        }
        let e = p.expr()?;
        p.skip_ws();
        if !p.at_end() {
            let message = if p.peek() == Some(b')') {
                "unbalanced ')'".to_string()
            } else {
                format!("unexpected `{}`", p.peek_char())
            };
            return Err(Error::Syntax { offset: p.pos, message });
        }
        Ok(e)
    }

    /// Evaluates to `digits` decimal digits (plus internal guard bits).
    pub fn eval(&self, digits: u32) -> Result<Real> {
        Ok(match self {
            AlgExpr::Int(v) => Real::from_int(v.clone(), digits),
            AlgExpr::Neg(a) => -a.eval(digits)?,
            AlgExpr::Add(a, b) => a.eval(digits)? + b.eval(digits)?,
            AlgExpr::Sub(a, b) => a.eval(digits)? - b.eval(digits)?,
            AlgExpr::Mul(a, b) => a.eval(digits)? * b.eval(digits)?,
            AlgExpr::Div(a, b) => a.eval(digits)?.checked_div(&b.eval(digits)?)?,
            AlgExpr::Sqrt(a) => a.eval(digits)?.sqrt()?,
        })
    }

    pub fn to_f64(&self) -> Result<f64> {
        Ok(self.eval(30)?.to_f64())
    }

    pub(crate) fn precedence(&self) -> u8 {
        match self {
            AlgExpr::Add(..) | AlgExpr::Sub(..) => 1,
            AlgExpr::Mul(..) | AlgExpr::Div(..) => 2,
            AlgExpr::Neg(_) => 3,
            AlgExpr::Int(v) if v.sign() == num_bigint::Sign::Minus => 3,
            AlgExpr::Int(_) | AlgExpr::Sqrt(_) => 4,
        }
    }
}

impl FromStr for AlgExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlgExpr::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        std::str::from_utf8(&self.src[self.pos..]).ok().and_then(|s| s.chars().next()).unwrap_or('?')
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.pos, message: message.into() }
    }

    fn expr(&mut self) -> Result<AlgExpr> {
        let mut lhs = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = AlgExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = AlgExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<AlgExpr> {
        let mut lhs = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = AlgExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    lhs = AlgExpr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<AlgExpr> {
        self.skip_ws();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let inner = self.atom()?;
            return Ok(AlgExpr::Neg(Box::new(inner)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<AlgExpr> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                Ok(AlgExpr::Int(digits.parse().expect("digit run parses")))
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(Error::Syntax { offset: open, message: "unbalanced '('".into() });
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b's') if self.src[self.pos..].starts_with(b"sqrt") => {
                self.pos += 4;
                self.skip_ws();
                if self.peek() != Some(b'(') {
                    return Err(self.err("expected '(' after sqrt"));
                }
                let open = self.pos;
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(Error::Syntax { offset: open, message: "unbalanced '('".into() });
                }
                self.pos += 1;
                Ok(AlgExpr::Sqrt(Box::new(e)))
            }
            Some(b')') => Err(self.err("unbalanced ')'")),
            Some(_) => Err(self.err(format!("unexpected `{}`", self.peek_char()))),
        }
    }
}

/// Canonical rendering. Parenthesizes only where precedence requires it, so
/// the output parses back to a tree with the same value.
impl fmt::Display for AlgExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(f: &mut fmt::Formatter<'_>, e: &AlgExpr, min: u8) -> fmt::Result {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            AlgExpr::Int(v) if v.sign() == num_bigint::Sign::Minus => write!(f, "-{}", -v),
            AlgExpr::Int(v) => write!(f, "{v}"),
            // The grammar allows one leading '-' per factor, so the operand
            // must be an atom.
            AlgExpr::Neg(a) => {
                f.write_str("-")?;
                side(f, a, 4)
            }
            AlgExpr::Add(a, b) => {
                side(f, a, 1)?;
                f.write_str("+")?;
                side(f, b, 2)
            }
            AlgExpr::Sub(a, b) => {
                side(f, a, 1)?;
                f.write_str("-")?;
                side(f, b, 2)
            }
            AlgExpr::Mul(a, b) => {
                side(f, a, 2)?;
                f.write_str("*")?;
                side(f, b, 3)
            }
            AlgExpr::Div(a, b) => {
                side(f, a, 2)?;
                f.write_str("/")?;
                side(f, b, 3)
            }
            AlgExpr::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}
