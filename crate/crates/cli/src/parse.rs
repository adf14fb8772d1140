//! Element expressions:
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" uint)?
//! atom   := rational | ("x" | "y") uint | "E(" uint ";" uint "," uint ")"
//!         | "e(" uint ("," uint)* ")" | "(" expr ")"
//! rational := uint ("/" uint)?
//! ```
//!
//! The leading minus lets the canonical printer's output parse back.

use std::fmt;
use std::str::FromStr;

use snk1_core::algebra::SnElement;
use snk1_core::index::IndexSet;
use snk1_core::{Error, QElement, Q};

#[derive(Clone, PartialEq, Debug)]
pub struct ParseError {
    /// Byte offset of the offending input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, PartialEq, Debug)]
pub enum Expr {
    Rational(Q),
    X(usize),
    Y(usize),
    Unit { k: usize, p: u32, q: u32 },
    Idempotent(Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// The largest component index mentioned, 0 if none.
    pub fn max_index(&self) -> usize {
        match self {
            Expr::Rational(_) => 0,
            Expr::X(k) | Expr::Y(k) | Expr::Unit { k, .. } => *k,
            Expr::Idempotent(ks) => ks.iter().copied().max().unwrap_or(0),
            Expr::Neg(a) | Expr::Pow(a, _) => a.max_index(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.max_index().max(b.max_index()),
        }
    }

    /// Exact value in `S_n`.
    pub fn eval(&self, n: usize) -> Result<QElement, Error> {
        Ok(match self {
            Expr::Rational(c) => SnElement::scalar(n, c.clone()),
            Expr::X(k) => SnElement::x(n, *k)?,
            Expr::Y(k) => SnElement::y(n, *k)?,
            Expr::Unit { k, p, q } => SnElement::matrix_unit(n, &IndexSet::from([*k]), &[*p], &[*q])?,
            Expr::Idempotent(ks) => SnElement::idempotent(n, &ks.iter().copied().collect())?,
            Expr::Neg(a) => -&a.eval(n)?,
            Expr::Add(a, b) => &a.eval(n)? + &b.eval(n)?,
            Expr::Sub(a, b) => &a.eval(n)? - &b.eval(n)?,
            Expr::Mul(a, b) => a.eval(n)?.nf_mul(&b.eval(n)?)?,
            Expr::Pow(a, k) => a.eval(n)?.pow(*k),
        })
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

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.pos, message: message.into() })
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an unsigned integer");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn uint<T: FromStr>(&mut self) -> Result<T, ParseError> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().or_else(|_| Err(ParseError { offset: start, message: format!("integer {d} out of range") }))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let a = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.uint()?;
            return Ok(Expr::Pow(Box::new(a), k));
        }
        Ok(a)
    }

    fn component(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let k: usize = self.uint()?;
        if k == 0 {
            return Err(ParseError { offset: start, message: "component indices start at 1".into() });
        }
        Ok(k)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let mut text = num.to_string();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let start = self.pos;
                    let den = self.digits()?;
                    if den.bytes().all(|b| b == b'0') {
                        return Err(ParseError { offset: start, message: "zero denominator".into() });
                    }
                    text = format!("{num}/{den}");
                }
                Ok(Expr::Rational(Q::from_str(&text).expect("validated rational")))
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Expr::X(self.component()?))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Expr::Y(self.component()?))
            }
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(')?;
                let k = self.component()?;
                self.expect(b';')?;
                let p = self.uint()?;
                self.expect(b',')?;
                let q = self.uint()?;
                self.expect(b')')?;
                Ok(Expr::Unit { k, p, q })
            }
            Some(b'e') => {
                self.pos += 1;
                self.expect(b'(')?;
                let mut ks = vec![self.component()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    ks.push(self.component()?);
                }
                self.expect(b')')?;
                Ok(Expr::Idempotent(ks))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

/// Why an element could not be read.
#[derive(Clone, PartialEq, Debug)]
pub enum ReadError {
    Syntax(ParseError),
    Core(Error),
}

impl fmt::Display for ReadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadError::Syntax(e) => write!(f, "{e}"),
            ReadError::Core(e) => write!(f, "{e}"),
        }
    }
}

/// Parses and evaluates `text` in `S_n`; without `n` the ambient index is
/// the largest one mentioned (at least 1).
pub fn parse_element(text: &str, n: Option<usize>) -> Result<QElement, ReadError> {
    let e = parse_expr(text).map_err(ReadError::Syntax)?;
    let n = n.unwrap_or_else(|| e.max_index().max(1));
    e.eval(n).map_err(ReadError::Core)
}
