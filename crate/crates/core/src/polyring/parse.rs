//! Recursive-descent parser for the ASCII polynomial grammar:
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := integer ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' positive-integer)?
//! ```
//!
//! Whitespace between tokens is ignored. Positions in errors are byte offsets.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Monomial, Polynomial, VariableSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("SyntaxError at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("UnknownVariable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => toks.push((start, Tok::Plus)),
            b'-' => toks.push((start, Tok::Minus)),
            b'*' => toks.push((start, Tok::Star)),
            b'^' => toks.push((start, Tok::Caret)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                toks.push((start, Tok::Int(n)));
                continue;
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::SyntaxError {
                    pos: start,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        }
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: VariableSet,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), Tok::describe);
        Err(ParseError::SyntaxError {
            pos: self.pos(),
            msg: format!("expected {expected}, found {found}"),
        })
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero(self.vars);
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            negate = true;
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, if negate { -c } else { c });
            match self.peek() {
                None => return Ok(out),
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => return self.error("`+`, `-`, `*` or end of input"),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), ParseError> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::ONE;
        match self.peek() {
            Some(Tok::Int(n)) => {
                coeff = n.clone();
                self.at += 1;
            }
            Some(Tok::Ident(_)) => mono = self.factor()?,
            _ => return self.error("a term"),
        }
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            mono = mono * self.factor()?;
        }
        Ok((mono, coeff))
    }

    fn factor(&mut self) -> Result<Monomial, ParseError> {
        let pos = self.pos();
        let name = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return self.error("a variable"),
        };
        let var = self
            .vars
            .index_of(&name)
            .ok_or(ParseError::UnknownVariable { pos, name })?;
        self.at += 1;
        let mut exp = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            let pos = self.pos();
            exp = match self.peek() {
                Some(Tok::Int(n)) if !n.is_zero() => {
                    u32::try_from(n).map_err(|_| ParseError::SyntaxError {
                        pos,
                        msg: format!("exponent `{n}` is too large"),
                    })?
                }
                _ => return self.error("a positive integer exponent"),
            };
            self.at += 1;
        }
        let mut e = [0; 3];
        e[var.index()] = exp;
        Ok(Monomial(e))
    }
}

pub(super) fn parse(text: &str, vars: VariableSet) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        at: 0,
        end: text.len(),
        vars,
    };
    parser.poly()
}
