//! Parser for polynomials such as `x1^2 + 2/3*x1*x2^3 - x2^5`.
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'x' integer
//! ```
//! Whitespace between tokens is ignored; positions in errors are byte
//! offsets into the input.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::lattice::{ExponentVector, DEFAULT_DEGREE_CAP};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Token::Plus)),
            b'-' => out.push((start, Token::Minus)),
            b'*' => out.push((start, Token::Star)),
            b'/' => out.push((start, Token::Slash)),
            b'^' => out.push((start, Token::Caret)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value = text[start..i].parse::<BigInt>().map_err(|_| err(start, "bad integer"))?;
                out.push((start, Token::Int(value)));
                continue;
            }
            b'x' => {
                i += 1;
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits == i {
                    return Err(err(start, "expected variable index after 'x'"));
                }
                let index = text[digits..i].parse::<usize>().map_err(|_| err(digits, "variable index too large"))?;
                out.push((start, Token::Var(index)));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(err(start, format!("unexpected character {ch:?}")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    at: usize,
    end: usize,
    n: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn poly(&mut self) -> Result<Vec<(ExponentVector, Rational)>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                -Rational::one()
            }
            Some(Token::Plus) => {
                self.bump();
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let (e, c) = self.term()?;
            terms.push((e, c * &sign));
            sign = match self.peek() {
                Some(Token::Plus) => Rational::one(),
                Some(Token::Minus) => -Rational::one(),
                None => return Ok(terms),
                Some(_) => return Err(err(self.pos(), "expected '+', '-' or end of input")),
            };
            self.bump();
        }
    }

    fn term(&mut self) -> Result<(ExponentVector, Rational)> {
        let mut exps = vec![0u32; self.n];
        let mut coeff = Rational::one();
        loop {
            self.factor(&mut exps, &mut coeff)?;
            if self.peek() == Some(&Token::Star) {
                self.bump();
            } else {
                break;
            }
        }
        let degree: u64 = exps.iter().map(|&e| e as u64).sum();
        if degree > DEFAULT_DEGREE_CAP as u64 {
            return Err(err(self.pos(), format!("term degree {degree} exceeds {DEFAULT_DEGREE_CAP}")));
        }
        Ok((ExponentVector::new(exps)?, coeff))
    }

    fn factor(&mut self, exps: &mut [u32], coeff: &mut Rational) -> Result<()> {
        let pos = self.pos();
        let atom = match self.bump() {
            Some(Token::Int(p)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    let qpos = self.pos();
                    match self.bump() {
                        Some(Token::Int(q)) if !q.is_zero() => Atom::Number(Rational::new(p, q)),
                        Some(Token::Int(_)) => return Err(err(qpos, "zero denominator")),
                        _ => return Err(err(qpos, "expected denominator")),
                    }
                } else {
                    Atom::Number(Rational::from_integer(p))
                }
            }
            Some(Token::Var(i)) => {
                if i == 0 || i > self.n {
                    return Err(Error::VariableOutOfRange { index: i, n: self.n });
                }
                Atom::Var(i - 1)
            }
            Some(_) => return Err(err(pos, "expected a number or a variable")),
            None => return Err(err(pos, "unexpected end of input")),
        };
        let mut power = 1u32;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let ppos = self.pos();
            power = match self.bump() {
                Some(Token::Int(k)) => {
                    u32::try_from(&k).ok().filter(|&k| k <= DEFAULT_DEGREE_CAP).ok_or_else(|| err(ppos, "exponent too large"))?
                }
                _ => return Err(err(ppos, "expected an integer exponent")),
            };
        }
        match atom {
            Atom::Number(r) => *coeff *= num_traits::pow(r, power as usize),
            Atom::Var(v) => {
                exps[v] = exps[v].checked_add(power).ok_or_else(|| err(pos, "exponent overflow"))?;
            }
        }
        Ok(())
    }
}

enum Atom {
    Number(Rational),
    Var(usize),
}

/// Parses `text` as a polynomial in `x1, …, xn`.
pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut parser = Parser { tokens: &tokens, at: 0, end: text.len(), n };
    let terms = parser.poly()?;
    Polynomial::new(n, terms)
}
