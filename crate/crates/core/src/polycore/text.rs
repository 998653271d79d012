//! Plain-text polynomial format: `x11*x22 - x12*x21`, `b^2 - 4*a*c`,
//! `1/2*x11^3 + 3`. Terms are printed in decreasing graded-lex order.

use alloc::format;
use alloc::string::ToString;
use core::fmt;

use num_traits::{One, Signed};

use super::polynomial::Polynomial;
use super::ring::{Ring, Var};
use super::Rational;
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring().vars();
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors = alloc::vec::Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].to_string()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Parses the text format into `ring`. Parentheses are accepted on input.
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(poly)
    }
}

/// Parses a single variable name (`x12`, `a`, `t_3`).
pub fn parse_var(name: &str) -> Option<Var> {
    let bytes = name.as_bytes();
    let (&tag, rest) = bytes.split_first()?;
    if !tag.is_ascii_lowercase() {
        return None;
    }
    if rest.is_empty() {
        return Some(Var::Coef(tag - b'a'));
    }
    if let Some(digits) = rest.strip_prefix(b"_") {
        let index = core::str::from_utf8(digits).ok()?.parse().ok()?;
        return digits.iter().all(u8::is_ascii_digit).then_some(Var::Aux { tag, index });
    }
    match rest {
        [r, c] if r.is_ascii_digit() && c.is_ascii_digit() && *r != b'0' && *c != b'0' => {
            Some(Var::Matrix { tag, row: r - b'0', col: c - b'0' })
        }
        _ => None,
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        return Err(self.error("expected denominator"));
                    }
                    let den = self.integer()?;
                    if den == 0.into() {
                        return Err(self.error("zero denominator"));
                    }
                    Polynomial::constant(self.ring, Rational::new(num, den))
                } else {
                    Polynomial::constant(self.ring, Rational::from_integer(num))
                }
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let var = parse_var(name).ok_or(Error::Parse {
                    position: start,
                    message: format!("malformed variable name '{name}'"),
                })?;
                Polynomial::variable(self.ring, var).map_err(|_| Error::Parse {
                    position: start,
                    message: format!("variable '{name}' is not in {}", self.ring.describe()),
                })?
            }
            Some(_) => return Err(self.error("expected a number, variable or '('")),
            None => return Err(self.error("unexpected end of input")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.error("expected exponent"));
            }
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        digits.parse().map_err(|_| Error::Parse { position: start, message: "expected digits".into() })
    }
}
