//! Text form of polynomials.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   :=  [sign] term { ('+' | '-') term }
//! term   :=  factor { '*' factor }
//! factor :=  base [ '^' uint ]
//! base   :=  '(' expr ')' | coeff | variable
//! coeff  :=  int [ '/' uint ]
//! ```
//!
//! Variables must be names declared by the ring; coefficients are integers
//! or integer fractions and are read into the ring's field.  The printer in
//! [`super::Polynomial`]'s `Display` emits a subset of this grammar, so
//! printing and re-parsing round-trips.

use super::{Polynomial, Ring};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &s[start..i];
                let v: i64 = text
                    .parse()
                    .map_err(|_| Error::Parse(format!("integer `{text}` out of range")))?;
                out.push(Token::Int(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Token::Ident(s[start..i].to_string()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        // Optional leading sign.
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(e)) if (0..=u16::MAX as i64).contains(&e) => base.pow(e as u32),
                got => Err(Error::Parse(format!("expected exponent, found {got:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::Int(n)) => {
                // Optional denominator.
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Int(d)) if d != 0 => {
                            let c = self.ring.field().from_fraction(n, d)?;
                            Ok(self.ring.one().scale(&c))
                        }
                        got => Err(Error::Parse(format!("expected denominator, found {got:?}"))),
                    }
                } else {
                    Ok(self.ring.one().scale(&self.ring.field().from_i64(n)))
                }
            }
            Some(Token::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(self.ring.var(i)),
                None => Err(Error::Parse(format!(
                    "unknown variable `{name}` (ring variables: {})",
                    self.ring.vars().join(", ")
                ))),
            },
            got => Err(Error::Parse(format!("expected a factor, found {got:?}"))),
        }
    }
}

/// Parses the textual form of a polynomial relative to a ring.
pub fn parse_polynomial(ring: &Ring, input: &str) -> Result<Polynomial> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".to_string()));
    }
    let mut p = Parser { ring, tokens, pos: 0 };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input after polynomial: {:?}",
            &p.tokens[p.pos..]
        )));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;

    fn ring_q() -> Ring {
        Ring::standard(&["x0", "x1", "x2"], FieldDescriptor::Rationals)
    }

    #[test]
    fn parses_spec_shapes() {
        let r = ring_q();
        let p = parse_polynomial(&r, "x1^2*x2 - 3*x0*x1 + 1/2*x2^3").unwrap();
        assert_eq!(p.num_terms(), 3);
        let q = parse_polynomial(&r, "(x0 + x1)^3 - x2^3").unwrap();
        assert_eq!(q.total_degree(), Some(3));
        // (x0+x1)^3 expands to 4 terms, minus x2^3 gives 5.
        assert_eq!(q.num_terms(), 5);
    }

    #[test]
    fn rejects_garbage() {
        let r = ring_q();
        assert!(parse_polynomial(&r, "").is_err());
        assert!(parse_polynomial(&r, "y9 + 1").is_err());
        assert!(parse_polynomial(&r, "x0 +").is_err());
        assert!(parse_polynomial(&r, "x0 $ x1").is_err());
        assert!(parse_polynomial(&r, "x0 x1").is_err());
    }

    #[test]
    fn unary_minus_and_constants() {
        let r = ring_q();
        let p = parse_polynomial(&r, "-x0 + 2").unwrap();
        assert_eq!(p.num_terms(), 2);
        let z = parse_polynomial(&r, "x0 - x0").unwrap();
        assert!(z.is_zero());
        assert_eq!(parse_polynomial(&r, "0").unwrap(), r.zero());
    }

    #[test]
    fn print_parse_round_trip() {
        let r = ring_q();
        for text in [
            "x0^3 + 3*x0^2*x1 - 1/2*x2^3",
            "x0*x1*x2",
            "-x0 - x1 - 7",
            "x1^2 - 4*x0*x2",
        ] {
            let p = parse_polynomial(&r, text).unwrap();
            let q = parse_polynomial(&r, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }
}
