//! Literal grammar for group elements.
//!
//! ```text
//! int       -?[0-9]+
//! rational  p | p/q          (q ≠ 0, sign normalized onto p)
//! dyadic    p | p/2^k
//! triadic   p | p/3^k
//! zsqrt2    a,b              (a + b√2)
//! lex-int   x:y
//! ```
//! Formatting always emits the canonical form in the same grammar.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{GroupElement, GroupError, GroupId, Repr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }

    /// Shifts the reported position by `offset`, for literals embedded in a
    /// longer string.
    pub fn offset(mut self, offset: usize) -> Self {
        self.position += offset;
        self
    }
}

fn parse_integer(text: &str, offset: usize) -> Result<BigInt, ParseError> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    let sign_len = text.len() - digits.len();
    if digits.is_empty() {
        return Err(ParseError::new(offset + sign_len, "expected decimal digits"));
    }
    if let Some(i) = digits.bytes().position(|c| !c.is_ascii_digit()) {
        return Err(ParseError::new(
            offset + sign_len + i,
            format!("unexpected character `{}`", digits[i..].chars().next().unwrap_or('?')),
        ));
    }
    Ok(text.parse().expect("validated decimal literal"))
}

fn parse_exponent(text: &str, offset: usize) -> Result<u32, ParseError> {
    if text.is_empty() || !text.bytes().all(|c| c.is_ascii_digit()) {
        return Err(ParseError::new(offset, "expected a non-negative decimal exponent"));
    }
    text.parse().map_err(|_| ParseError::new(offset, "exponent out of range"))
}

fn split_pair<'a>(text: &'a str, sep: char, what: &str) -> Result<(&'a str, &'a str, usize), ParseError> {
    match text.find(sep) {
        Some(i) => Ok((&text[..i], &text[i + 1..], i + 1)),
        None => Err(ParseError::new(text.len(), format!("expected `{sep}` in {what} literal"))),
    }
}

fn parse_power(text: &str, base: u32) -> Result<(BigInt, u32), ParseError> {
    match text.find('/') {
        None => Ok((parse_integer(text, 0)?, 0)),
        Some(i) => {
            let num = parse_integer(&text[..i], 0)?;
            let rest = &text[i + 1..];
            let prefix = format!("{base}^");
            match rest.strip_prefix(prefix.as_str()) {
                Some(exp) => Ok((num, parse_exponent(exp, i + 1 + prefix.len())?)),
                None => Err(ParseError::new(i + 1, format!("expected denominator `{base}^k`"))),
            }
        }
    }
}

impl GroupElement {
    /// Parses a literal of `group`, normalizing to canonical form.
    pub fn parse(group: GroupId, text: &str) -> Result<Self, GroupError> {
        Ok(match group {
            GroupId::Int => GroupElement::int(parse_integer(text, 0)?),
            GroupId::Rational => match text.find('/') {
                None => GroupElement::from_int(GroupId::Rational, parse_integer(text, 0)?),
                Some(i) => {
                    let num = parse_integer(&text[..i], 0)?;
                    let den = parse_integer(&text[i + 1..], i + 1)?;
                    if den.is_zero() {
                        return Err(ParseError::new(i + 1, "zero denominator").into());
                    }
                    GroupElement::rational(num, den)?
                }
            },
            GroupId::Dyadic => {
                let (num, exp) = parse_power(text, 2)?;
                GroupElement::dyadic(num, exp)
            }
            GroupId::Triadic => {
                let (num, exp) = parse_power(text, 3)?;
                GroupElement::triadic(num, exp)
            }
            GroupId::Zsqrt2 => {
                let (a, b, at) = split_pair(text, ',', "zsqrt2")?;
                GroupElement::zsqrt2(parse_integer(a, 0)?, parse_integer(b, at)?)
            }
            GroupId::LexInt => {
                let (x, y, at) = split_pair(text, ':', "lex-int")?;
                GroupElement::lex(parse_integer(x, 0)?, parse_integer(y, at)?)
            }
        })
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Int(n) => write!(f, "{n}"),
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Dyadic(p) if p.exp > 0 => write!(f, "{}/2^{}", p.num, p.exp),
            Repr::Triadic(p) if p.exp > 0 => write!(f, "{}/3^{}", p.num, p.exp),
            Repr::Dyadic(p) | Repr::Triadic(p) => write!(f, "{}", p.num),
            Repr::Zsqrt2(a, b) => write!(f, "{a},{b}"),
            Repr::LexInt(x, y) => write!(f, "{x}:{y}"),
        }
    }
}
