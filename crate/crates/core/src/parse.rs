//! Expression grammar for fields and multivectors.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'x' integer | 'e[' (integer (',' integer)*)? ']' | '(' expr ')'
//! ```
//!
//! Products keep operand order (the algebra is non-commutative). Division is
//! only by nonzero scalar constants, which is how rational literals such as
//! `3/5` are written. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multivector::{check_dim, Blade, Multivector};
use crate::polyfield::{MultiIndex, PolyField};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Blade(Vec<usize>),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    let digits = |i: &mut usize| -> Option<String> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        (*i > start).then(|| chars[start..*i].iter().collect())
    };
    loop {
        skip_ws(&mut i);
        if i >= chars.len() {
            break;
        }
        let pos = i;
        let c = chars[i];
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let s = digits(&mut i).expect("at least one digit");
                out.push((pos, Tok::Int(s.parse().expect("digits"))));
                continue;
            }
            'x' => {
                i += 1;
                let s = digits(&mut i).ok_or_else(|| err(i, "expected variable index after 'x'"))?;
                let idx: usize = s.parse().map_err(|_| err(pos, "variable index too large"))?;
                out.push((pos, Tok::Var(idx)));
                continue;
            }
            'e' => {
                i += 1;
                skip_ws(&mut i);
                if i >= chars.len() || chars[i] != '[' {
                    return Err(err(i, "expected '[' after 'e'"));
                }
                i += 1;
                let mut idx = Vec::new();
                skip_ws(&mut i);
                if i < chars.len() && chars[i] == ']' {
                    i += 1;
                } else {
                    loop {
                        skip_ws(&mut i);
                        let at = i;
                        let s = digits(&mut i).ok_or_else(|| err(at, "expected blade index"))?;
                        idx.push(s.parse().map_err(|_| err(at, "blade index too large"))?);
                        skip_ws(&mut i);
                        match chars.get(i) {
                            Some(',') => i += 1,
                            Some(']') => {
                                i += 1;
                                break;
                            }
                            _ => return Err(err(i, "expected ',' or ']' in blade")),
                        }
                    }
                }
                out.push((pos, Tok::Blade(idx)));
                continue;
            }
            other => return Err(err(pos, format!("unexpected character {other:?}"))),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    m: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<PolyField> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PolyField> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Star => {
                    self.bump();
                    acc = acc.try_mul(&self.unary()?)?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let divisor = self.unary()?;
                    let c = divisor
                        .constant_value()
                        .filter(|v| v.is_pure_grade(0))
                        .map(|v| v.scalar_part())
                        .ok_or_else(|| err(pos, "division only by scalar constants"))?;
                    if c.is_zero() {
                        return Err(err(pos, "division by zero"));
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<PolyField> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PolyField> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let exp = match self.bump() {
            Some(Tok::Int(n)) => u32::try_from(n).map_err(|_| err(pos, "exponent too large"))?,
            _ => return Err(err(pos, "expected integer exponent")),
        };
        let mut acc = PolyField::constant(Multivector::one(self.m));
        for _ in 0..exp {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<PolyField> {
        let pos = self.pos();
        let m = self.m;
        match self.bump() {
            Some(Tok::Int(n)) => Ok(PolyField::constant(Multivector::scalar(m, Rational::from_integer(n)))),
            Some(Tok::Var(i)) => {
                if i == 0 || i > m {
                    return Err(err(pos, format!("unknown variable x{i} in dimension {m}")));
                }
                Ok(PolyField::monomial(MultiIndex::variable(m, i), Multivector::one(m)))
            }
            Some(Tok::Blade(idx)) => {
                if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > m) {
                    return Err(err(pos, format!("blade index {bad} out of range for dimension {m}")));
                }
                let blade = Blade::from_indices(&idx, m).map_err(|e| err(pos, e.to_string()))?;
                Ok(PolyField::constant(Multivector::from_blade(m, blade, Rational::from_integer(1.into()))))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(err(self.toks.get(self.at - 1).map_or(self.end, |(p, _)| *p), "expected ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(err(pos, format!("unexpected token {t:?}"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

/// Parses a field expression over R^m.
pub fn parse_field(text: &str, m: usize) -> Result<PolyField> {
    check_dim(m)?;
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.chars().count(), m };
    if p.peek().is_none() {
        return Err(err(0, "empty expression"));
    }
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(f)
}
