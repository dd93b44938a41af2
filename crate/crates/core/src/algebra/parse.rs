//! Text syntax for free-algebra polynomials.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication; `X Y` is a syntax error.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::generators::GeneratorSet;
use super::poly::FreePoly;
use super::ring::CoefficientRing;
use super::word::Word;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_owned())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{ch}`") });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    gens: &'a GeneratorSet,
    ring: &'a CoefficientRing,
}

impl Parser<'_> {
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

    fn expr(&mut self) -> Result<FreePoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FreePoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FreePoly> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<FreePoly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            let exp = match self.bump() {
                Some(Tok::Int(n)) => n,
                Some(Tok::Minus) => return Err(Error::NegativeExponent { pos }),
                _ => {
                    return Err(Error::Syntax {
                        pos,
                        msg: "exponent must be a nonnegative integer literal".into(),
                    })
                }
            };
            let exp: u64 = u64::try_from(&exp)
                .map_err(|_| Error::Syntax { pos, msg: "exponent too large".into() })?;
            if let Some(Tok::Caret) = self.peek() {
                return Err(Error::Syntax {
                    pos: self.pos(),
                    msg: "chained `^` is ambiguous; use parentheses".into(),
                });
            }
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FreePoly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(FreePoly::constant(self.gens, self.ring, n)),
            Some(Tok::Ident(name)) => match self.gens.index_of(&name) {
                Some(i) => Ok(FreePoly::monomial(self.gens, self.ring, Word::letter(i), 1)),
                None => Err(Error::UnknownGenerator { name, pos }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Syntax { pos: self.pos_of_prev(), msg: "expected `)`".into() }),
                }
            }
            Some(t) => Err(Error::Syntax { pos, msg: format!("unexpected token {t:?}") }),
            None => Err(Error::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }

    fn pos_of_prev(&self) -> usize {
        self.toks.get(self.at.saturating_sub(1)).map_or(self.end, |(p, _)| *p)
    }
}

/// Parses `text` into a canonical polynomial over `ring`.
pub fn parse(text: &str, gens: &GeneratorSet, ring: &CoefficientRing) -> Result<FreePoly> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.len(), gens, ring };
    let f = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::Syntax { pos: p.pos(), msg: "trailing input".into() });
    }
    Ok(f)
}

/// Renders terms in the order given as `c*W1*W2 + ...`; the inverse of
/// [`parse`] for canonical term sequences.
pub(crate) fn format_terms<'a, I>(gens: &GeneratorSet, terms: I) -> String
where
    I: IntoIterator<Item = (&'a Word, &'a BigInt)>,
{
    let mut out = String::new();
    for (w, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if w.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&w.render_product(gens));
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(&w.render_product(gens));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
