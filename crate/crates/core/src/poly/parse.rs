//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! sum   := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' INT)?
//! atom  := INT ('/' INT)? | IDENT | '(' sum ')'
//! ```
//!
//! Implicit multiplication is rejected: `2x` is a syntax error at `x`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::bipoly::BiPoly;
use super::rational::Rational;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdentifier { name: String, offset: usize },
    #[error("exponent at byte {offset} exceeds the cap of {MAX_EXPONENT}")]
    ExponentOverflow { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownIdentifier { offset, .. }
            | ParseError::ExponentOverflow { offset } => *offset,
        }
    }
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
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().unwrap()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::Syntax {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: (&'a str, &'a str),
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) {
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            t => format!("{t:?}"),
        };
        ParseError::Syntax {
            offset: self.offset(),
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn sum(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let off = self.offset();
        let Tok::Int(n) = self.peek().clone() else {
            return Err(self.unexpected("a nonnegative integer exponent"));
        };
        self.bump();
        let e = u64::try_from(&n).ok().filter(|&e| e <= MAX_EXPONENT);
        let e = e.ok_or(ParseError::ExponentOverflow { offset: off })?;
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<BiPoly, ParseError> {
        let off = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(BiPoly::constant(Rational::from_integer(n)));
                }
                self.bump();
                let doff = self.offset();
                match self.peek().clone() {
                    Tok::Int(d) if d.is_zero() => Err(ParseError::Syntax {
                        offset: doff,
                        message: "zero denominator".to_string(),
                    }),
                    Tok::Int(d) => {
                        self.bump();
                        Ok(BiPoly::constant(Rational::new(n, d)))
                    }
                    _ => Err(self.unexpected("an integer denominator")),
                }
            }
            Tok::Ident(name) => {
                self.bump();
                if name == self.vars.0 {
                    Ok(BiPoly::x())
                } else if name == self.vars.1 {
                    Ok(BiPoly::y())
                } else {
                    Err(ParseError::UnknownIdentifier { name, offset: off })
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or `(`")),
        }
    }
}

/// Parses `text` in the variables `x`, `y`.
pub fn parse_poly(text: &str) -> Result<BiPoly, ParseError> {
    parse_poly_in(text, ("x", "y"))
}

/// Parses `text`, reading `vars.0` as the first and `vars.1` as the second
/// variable.
pub fn parse_poly_in(text: &str, vars: (&str, &str)) -> Result<BiPoly, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        vars,
    };
    let out = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}
