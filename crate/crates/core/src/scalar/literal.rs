//! Scalar literal grammar.
//!
//! ```text
//! literal := term (('+' | '-') term)?
//! term    := ('+' | '-')? (number 'i'? | 'i')
//! number  := digits ('/' digits | '.' digits)?
//! ```
//!
//! Examples: `0`, `-1/2`, `i`, `-i`, `2+3i`, `-3/4+9/4i`, `0.25`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid literal {input:?} at position {position}: {message}")]
pub struct LiteralError {
    pub input: String,
    /// Character offset into `input`.
    pub position: usize,
    pub message: String,
}

impl LiteralError {
    pub fn new(input: &str, position: usize, message: impl Into<String>) -> Self {
        LiteralError { input: input.to_string(), position, message: message.into() }
    }

    /// Re-anchor the error inside an enclosing literal.
    pub fn shifted(mut self, enclosing: &str, offset: usize) -> Self {
        self.input = enclosing.to_string();
        self.position += offset;
        self
    }
}

struct Cursor<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> LiteralError {
        LiteralError::new(self.src, self.pos, message)
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn number(&mut self) -> Result<Option<Rational>, LiteralError> {
        let Some(whole) = self.digits() else {
            return Ok(None);
        };
        match self.peek() {
            Some('/') => {
                self.pos += 1;
                let denom = self.digits().ok_or_else(|| self.err("expected denominator digits"))?;
                if denom.is_zero() {
                    return Err(LiteralError::new(self.src, self.pos - 1, "zero denominator"));
                }
                Ok(Some(Rational::from_bigints(whole, denom)))
            }
            Some('.') => {
                self.pos += 1;
                let start = self.pos;
                let frac = self.digits().ok_or_else(|| self.err("expected fractional digits"))?;
                let scale = BigInt::from(10u32).pow((self.pos - start) as u32);
                Ok(Some(Rational::from_bigints(whole * &scale + frac, scale)))
            }
            _ => Ok(Some(Rational::from_bigints(whole, BigInt::one()))),
        }
    }
}

/// Parse a scalar literal into its real and imaginary parts.
pub(crate) fn parse_scalar(src: &str) -> Result<(Rational, Rational), LiteralError> {
    let mut cur = Cursor { src, chars: src.chars().collect(), pos: 0 };
    if cur.chars.is_empty() {
        return Err(cur.err("empty literal"));
    }
    let mut re = Rational::integer(0);
    let mut im = Rational::integer(0);
    let mut terms = 0;
    while cur.pos < cur.chars.len() {
        if terms == 2 {
            return Err(cur.err("at most a real and an imaginary term are allowed"));
        }
        let negative = match cur.peek() {
            Some('-') => {
                cur.pos += 1;
                true
            }
            Some('+') => {
                cur.pos += 1;
                false
            }
            _ if terms > 0 => return Err(cur.err("expected '+' or '-' between terms")),
            _ => false,
        };
        let value = cur.number()?;
        let imaginary = if cur.peek() == Some('i') {
            cur.pos += 1;
            true
        } else {
            false
        };
        let value = match (value, imaginary) {
            (Some(v), _) => v,
            (None, true) => Rational::integer(1),
            (None, false) => {
                return Err(match cur.peek() {
                    Some(c) if c.is_whitespace() => cur.err("whitespace is not allowed"),
                    Some(c) => cur.err(format!("unexpected character {c:?}")),
                    None => cur.err("expected a number or 'i'"),
                })
            }
        };
        let value = if negative { -value } else { value };
        if imaginary {
            im = im + value;
        } else {
            re = re + value;
        }
        terms += 1;
        if let Some(c) = cur.peek() {
            if c != '+' && c != '-' {
                return Err(cur.err(format!("unexpected character {c:?}")));
            }
        }
    }
    Ok((re, im))
}

/// Split a parenthesized, comma-separated literal into component slices with
/// their character offsets.
pub(crate) fn split_tuple(src: &str) -> Result<Vec<(usize, &str)>, LiteralError> {
    let inner = src
        .strip_prefix('(')
        .ok_or_else(|| LiteralError::new(src, 0, "expected '('"))?
        .strip_suffix(')')
        .ok_or_else(|| LiteralError::new(src, src.chars().count().saturating_sub(1), "expected ')'"))?;
    let mut parts = Vec::new();
    let mut offset = 1;
    for piece in inner.split(',') {
        parts.push((offset, piece));
        offset += piece.chars().count() + 1;
    }
    Ok(parts)
}
