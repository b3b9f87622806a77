//! Polynomial text grammar.
//!
//! ```text
//! expr    = term { ("+" | "-") term }
//! term    = unary { "*" unary }
//! unary   = ("-" | "+") unary | power
//! power   = atom [ "^" integer ]
//! atom    = integer [ "/" integer ] | variable | "(" expr ")"
//! ```
//!
//! Whitespace (including newlines) is ignored between tokens. Variable
//! names are `[A-Za-z_][A-Za-z0-9_]*` and must belong to the ring.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{MultiPoly, PolyRing};
use crate::error::{Error, Result};
use crate::field::Field;

/// Largest total degree a parsed expression may reach.
const MAX_PARSE_DEGREE: u32 = 120;

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn skip_ws(&mut self) {
        while let Some(&c) = self.src.get(self.pos) {
            match c {
                b'\n' => {
                    self.line += 1;
                    self.col = 1;
                }
                b' ' | b'\t' | b'\r' => self.col += 1,
                _ => return,
            }
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
        self.col += 1;
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax { line: self.line, column: self.col, msg: msg.to_string() }
    }

    fn expr(&mut self) -> Result<MultiPoly<F::Elem>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<F::Elem>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.bump();
            let (line, col) = (self.line, self.col);
            let rhs = self.unary()?;
            if acc.total_degree().unwrap_or(0) + rhs.total_degree().unwrap_or(0) > MAX_PARSE_DEGREE {
                return Err(Error::Syntax { line, column: col, msg: "degree too large".into() });
            }
            acc = self.ring.mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly<F::Elem>> {
        match self.peek() {
            Some(b'-') => {
                self.bump();
                let inner = self.unary()?;
                Ok(self.ring.neg(&inner))
            }
            Some(b'+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly<F::Elem>> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.bump();
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.err("expected an exponent"));
        }
        let (line, col) = (self.line, self.col);
        let e = self.integer()?;
        let e: u32 = u32::try_from(&e).ok().filter(|&e| e <= MAX_PARSE_DEGREE).ok_or(Error::Syntax {
            line,
            column: col,
            msg: "exponent too large".into(),
        })?;
        if base.total_degree().unwrap_or(0) * e > MAX_PARSE_DEGREE {
            return Err(Error::Syntax { line, column: col, msg: "degree too large".into() });
        }
        Ok(self.ring.pow(&base, e))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| self.err("expected an integer"))
    }

    fn atom(&mut self) -> Result<MultiPoly<F::Elem>> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut q = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.bump();
                    let (line, column) = (self.line, self.col);
                    if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        return Err(self.err("expected a denominator"));
                    }
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(Error::ZeroDenominator { line, column });
                    }
                    q /= BigRational::from_integer(den);
                }
                let c = self.ring.field().from_rational(&q).ok_or_else(|| {
                    Error::FieldMismatch(alloc::format!("coefficient {q} has no image in the field"))
                })?;
                Ok(self.ring.constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let (line, column) = (self.line, self.col);
                let start = self.pos;
                while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_alphanumeric() || *c == b'_') {
                    self.bump();
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(Error::UnknownVariable { name: String::from(name), line, column }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl<F: Field> PolyRing<F> {
    /// Parses `text` into this ring.
    pub fn parse(&self, text: &str) -> Result<MultiPoly<F::Elem>> {
        let mut p = Parser { ring: self, src: text.as_bytes(), pos: 0, line: 1, col: 1 };
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}
