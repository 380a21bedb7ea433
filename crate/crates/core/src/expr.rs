//! Concrete syntax for polynomials in `X` and `Y`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (("+" | "-") product)*
//! product := unary ("*" unary)*
//! unary   := "-" unary | "+" unary | power
//! power   := atom ("^" exponent)?
//! exponent:= INT ("^" exponent)? | "(" ["-"|"+"] INT ")"
//! atom    := INT ["/" INT] | "X" | "Y" | "(" sum ")"
//! ```
//!
//! `^` is right-associative and its exponent must be a nonnegative integer
//! literal. `p/q` is a rational literal, not a division operator. Variables are
//! case-insensitive; implicit multiplication is rejected.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{LatticePoint, Polynomial, Rational};

/// Exponents above this bound are rejected before any expansion happens.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Character offset into the source.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent must be an integer literal")]
    NonNumericExponent,
    #[error("exponent exceeds {MAX_EXPONENT}")]
    ExponentTooLarge,
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.offset(),
            kind,
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken {
                found: t.to_string(),
                expected,
            }),
            None => self.err(ParseErrorKind::UnexpectedEnd(expected)),
        }
    }

    fn sum(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.product()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        let value: BigInt = match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(n)) = self.bump() else {
                    unreachable!()
                };
                if let Some(Tok::Caret) = self.peek() {
                    self.bump();
                    let inner = self.exponent()?;
                    checked_pow(&n, inner).ok_or(ParseError {
                        position: at,
                        kind: ParseErrorKind::ExponentTooLarge,
                    })?
                } else {
                    n
                }
            }
            Some(Tok::LParen) => {
                self.bump();
                let negative = match self.peek() {
                    Some(Tok::Minus) => {
                        self.bump();
                        true
                    }
                    Some(Tok::Plus) => {
                        self.bump();
                        false
                    }
                    _ => false,
                };
                let n = match self.bump() {
                    Some(Tok::Int(n)) => n,
                    None => return Err(self.err(ParseErrorKind::UnexpectedEnd("exponent"))),
                    Some(_) => {
                        self.pos -= 1;
                        return Err(self.err(ParseErrorKind::NonNumericExponent));
                    }
                };
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                    }
                    Some(Tok::Slash) => return Err(self.err(ParseErrorKind::NonNumericExponent)),
                    _ => return Err(self.unexpected("')'")),
                }
                if negative && !n.is_zero() {
                    return Err(ParseError {
                        position: at,
                        kind: ParseErrorKind::NegativeExponent,
                    });
                }
                n
            }
            Some(Tok::Minus) => return Err(self.err(ParseErrorKind::NegativeExponent)),
            Some(_) => return Err(self.err(ParseErrorKind::NonNumericExponent)),
            None => return Err(self.err(ParseErrorKind::UnexpectedEnd("exponent"))),
        };
        if let Some(Tok::Slash) = self.peek() {
            return Err(self.err(ParseErrorKind::NonNumericExponent));
        }
        match value.to_u32() {
            Some(v) if v <= MAX_EXPONENT => Ok(v),
            _ => Err(ParseError {
                position: at,
                kind: ParseErrorKind::ExponentTooLarge,
            }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let den_at = self.offset();
                    let d = match self.bump() {
                        Some(Tok::Int(d)) => d,
                        _ => {
                            self.pos -= 1;
                            return Err(self.unexpected("integer denominator"));
                        }
                    };
                    if d.is_zero() {
                        return Err(ParseError {
                            position: den_at,
                            kind: ParseErrorKind::ZeroDenominator,
                        });
                    }
                    return Ok(Polynomial::constant(Rational::new(n, d)));
                }
                Ok(Polynomial::constant(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "X" | "x" => Ok(Polynomial::monomial(
                    Rational::one(),
                    LatticePoint::new(1, 0),
                )),
                "Y" | "y" => Ok(Polynomial::monomial(
                    Rational::one(),
                    LatticePoint::new(0, 1),
                )),
                _ => Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::UnknownIdentifier(name),
                }),
            },
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(self.unexpected("')'")),
                }
            }
            Some(_) => {
                self.pos -= 1;
                Err(self.unexpected("a number, X, Y or '('"))
            }
            None => Err(self.err(ParseErrorKind::UnexpectedEnd("a number, X, Y or '('"))),
        }
    }
}

fn checked_pow(base: &BigInt, exp: u32) -> Option<BigInt> {
    if exp > MAX_EXPONENT && base.abs() > BigInt::one() {
        return None;
    }
    let bits = base.bits();
    if bits > 1 && bits.saturating_mul(exp as u64) > 64 {
        return None;
    }
    Some(num_traits::pow(base.clone(), exp as usize))
}

/// Parses and fully expands an expression in `X` and `Y`.
pub fn parse_polynomial(src: &str) -> Result<Polynomial, ParseError> {
    let toks = lex(src)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: src.chars().count(),
    };
    let f = parser.sum()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected("end of input"));
    }
    Ok(f)
}

/// Prints terms in descending graded-lex order, e.g. `X^3 + X^2*Y - X - Y`.
/// The output parses back to the same polynomial.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (exp, c)) in f.terms_grlex_desc().into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mono = monomial_str(exp);
        if mono.is_empty() {
            write!(out, "{abs}").unwrap();
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            write!(out, "{abs}*{mono}").unwrap();
        }
    }
    out
}

fn monomial_str(e: LatticePoint) -> String {
    let var = |name: &str, k: i64| match k {
        0 => None,
        1 => Some(name.to_string()),
        k => Some(format!("{name}^{k}")),
    };
    [var("X", e.alpha), var("Y", e.beta)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}
