//! Polynomial expressions in `x`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary | power)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x`, `3(x+1)`) multiplies at the same precedence as `*`.
//! A divisor must evaluate to a nonzero constant.

use std::fmt;

use num_bigint::BigInt;

use crate::polyring::{Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken(String),
    UnknownIdentifier(String),
    BadExponent,
    DivisionByZero,
    NonConstantDivisor,
    NotConstant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Empty => write!(f, "empty expression"),
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character `{c}` at position {}", self.pos)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "unexpected end of input at position {}", self.pos)
            }
            ParseErrorKind::UnexpectedToken(t) => {
                write!(f, "unexpected `{t}` at position {}", self.pos)
            }
            ParseErrorKind::UnknownIdentifier(id) => {
                write!(f, "unknown identifier `{id}` at position {}", self.pos)
            }
            ParseErrorKind::BadExponent => {
                write!(
                    f,
                    "exponent must be a nonnegative integer literal at position {}",
                    self.pos
                )
            }
            ParseErrorKind::DivisionByZero => {
                write!(f, "division by zero at position {}", self.pos)
            }
            ParseErrorKind::NonConstantDivisor => {
                write!(f, "divisor at position {} is not a constant", self.pos)
            }
            ParseErrorKind::NotConstant => write!(f, "expected a rational constant"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => f.write_str(s),
            Tok::Op(c) => write!(f, "{c}"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            let ch = src[i..].chars().next().unwrap_or(c);
            return Err(ParseError {
                pos: i,
                kind: ParseErrorKind::UnexpectedChar(ch),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            kind,
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.at += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Op('/')) => {
                    self.at += 1;
                    let pos = self.pos();
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(ParseError {
                            pos,
                            kind: ParseErrorKind::DivisionByZero,
                        });
                    }
                    if !d.is_constant() {
                        return Err(ParseError {
                            pos,
                            kind: ParseErrorKind::NonConstantDivisor,
                        });
                    }
                    acc = acc.scale(&(Rational::from_integer(1.into()) / d.constant_term()));
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::Op('(')) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek() {
            Some(Tok::Int(n)) => {
                let Ok(k) = u32::try_from(n) else {
                    return self.err(ParseErrorKind::BadExponent);
                };
                self.at += 1;
                Ok(base.pow(k))
            }
            _ => self.err(ParseErrorKind::BadExponent),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err(ParseErrorKind::UnexpectedEnd);
        };
        match tok {
            Tok::Int(n) => {
                self.at += 1;
                Ok(Poly::constant(Rational::from_integer(n)))
            }
            Tok::Ident(id) if id == "x" => {
                self.at += 1;
                Ok(Poly::x())
            }
            Tok::Ident(id) => self.err(ParseErrorKind::UnknownIdentifier(id)),
            Tok::Op('(') => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return match self.peek() {
                        None => self.err(ParseErrorKind::UnexpectedEnd),
                        Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.to_string())),
                    };
                }
                Ok(inner)
            }
            t => self.err(ParseErrorKind::UnexpectedToken(t.to_string())),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            kind: ParseErrorKind::Empty,
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    match p.peek() {
        None => Ok(out),
        Some(t) => {
            let t = t.to_string();
            p.err(ParseErrorKind::UnexpectedToken(t))
        }
    }
}

/// A constant expression such as `-3/2` or `7`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let p = parse_poly(text)?;
    if p.is_constant() {
        Ok(p.constant_term())
    } else {
        Err(ParseError {
            pos: 0,
            kind: ParseErrorKind::NotConstant,
        })
    }
}
