//! Polynomial input parsing.
//!
//! Expression grammar (whitespace ignored, no implicit multiplication, a
//! single leading minus allowed per (sub)expression):
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nonneg-int)?
//! base     := rational | 'x' | '(' expr ')'
//! rational := int ('/' positive-int)?
//! ```
//!
//! The coefficient form is a comma-separated list of rationals in ascending
//! power order, e.g. `-1,0,1` for x^2 - 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rootcert_core::rational::Rat;
use rootcert_core::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

/// Parse an expression in x into a polynomial.
pub fn parse_expression(src: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return err(p.pos, "unexpected trailing input");
    }
    Ok(poly)
}

/// Parse a comma-separated ascending coefficient list, rationals as `p/q`.
pub fn parse_coeff_list(src: &str) -> Result<Polynomial, ParseError> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return err(0, "empty coefficient list");
    }
    for part in src.split(',') {
        let local = part.trim();
        if local.is_empty() {
            return err(offset, "empty coefficient");
        }
        let rat = parse_rational(local)
            .map_err(|e| ParseError { pos: offset + e.pos, message: e.message })?;
        coeffs.push(rat);
        offset += part.len() + 1;
    }
    Ok(Polynomial::new(coeffs))
}

/// Parse a single rational: `p`, `p/q`, a decimal like `0.125`, or
/// scientific notation like `1e-14` / `2.5e-9`, all converted exactly.
pub fn parse_rational(src: &str) -> Result<Rat, ParseError> {
    let s = src.trim();
    if s.is_empty() {
        return err(0, "empty number");
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (mantissa, exp10) = match body.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i32 = e
                .parse()
                .map_err(|_| ParseError { pos: 0, message: format!("bad exponent '{e}'") })?;
            (m, exp)
        }
        None => (body, 0),
    };
    let value = if let Some((num, den)) = mantissa.split_once('/') {
        let n = parse_bigint(num)?;
        let d = parse_bigint(den)?;
        if d == BigInt::from(0) {
            return err(0, "zero denominator");
        }
        Rat::new(n, d)
    } else if let Some((int_part, frac_part)) = mantissa.split_once('.') {
        let digits = format!("{int_part}{frac_part}");
        let n = parse_bigint(&digits)?;
        let d = BigInt::from(10u32).pow(frac_part.len() as u32);
        Rat::new(n, d)
    } else {
        Rat::from_integer(parse_bigint(mantissa)?)
    };
    let scaled = match exp10 {
        0 => value,
        e if e > 0 => value * Rat::from_integer(BigInt::from(10u32).pow(e as u32)),
        e => value / Rat::from_integer(BigInt::from(10u32).pow((-e) as u32)),
    };
    Ok(if neg { -scaled } else { scaled })
}

fn parse_bigint(s: &str) -> Result<BigInt, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return err(0, format!("expected an integer, got '{s}'"));
    }
    BigInt::from_str(s).map_err(|_| ParseError { pos: 0, message: format!("bad integer '{s}'") })
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.bump();
            -&self.term()?
        } else {
            self.term()?
        };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let at = self.pos;
            let exp = self.uint()?;
            let exp: u32 = exp
                .try_into()
                .map_err(|_| ParseError { pos: at, message: "exponent too large".into() })?;
            let mut acc = Polynomial::one();
            for _ in 0..exp {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.bump();
                Ok(Polynomial::x())
            }
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return err(self.pos, "expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                if self.peek() == Some(b'/') {
                    self.bump();
                    let at = self.pos;
                    let d = self.uint()?;
                    if d == BigInt::from(0u32) {
                        return err(at, "zero denominator");
                    }
                    Ok(Polynomial::constant(Rat::new(n, d)))
                } else {
                    Ok(Polynomial::constant(Rat::from_integer(n)))
                }
            }
            Some(c) => err(self.pos, format!("unexpected character '{}'", c as char)),
            None => err(self.pos, "unexpected end of input"),
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return err(start, "expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(BigInt::from_str(digits).unwrap())
    }
}
