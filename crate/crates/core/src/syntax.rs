//! Textual polynomials such as `x^2*y - 1/2*y*x + 3`.
//!
//! `*` is juxtaposition. Factors are kept in order so the same parse serves
//! noncommutative words and commutative monomials.

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::{Coeff, parse_coeff};
use crate::error::{Error, Result};

/// One parsed term: coefficient and ordered `(name, power)` factors.
pub type Term = (Coeff, Vec<(String, u32)>);

pub fn parse_polynomial(src: &str) -> Result<Vec<Term>> {
    let text = src.replace('\u{2212}', "-");
    let mut p = Parser { s: text.as_bytes(), i: 0, src };
    let terms = p.polynomial()?;
    p.skip_ws();
    if p.i != p.s.len() {
        return Err(p.error("trailing input"));
    }
    Ok(terms)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} in `{}`", self.i, self.src))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn polynomial(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                true
            }
            Some(b'+') => {
                self.i += 1;
                false
            }
            None => return Err(self.error("empty polynomial")),
            _ => false,
        };
        loop {
            let (c, factors) = self.term()?;
            terms.push((if negate { -c } else { c }, factors));
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => break,
            }
            self.i += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term> {
        let mut coeff = Coeff::one();
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => coeff *= self.rational()?,
                Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                    let name = self.name();
                    let power = if self.peek() == Some(b'^') {
                        self.i += 1;
                        self.skip_ws();
                        self.digits()?
                            .to_string()
                            .parse::<u32>()
                            .map_err(|_| self.error("exponent too large"))?
                    } else {
                        1
                    };
                    if power > 0 {
                        factors.push((name, power));
                    }
                }
                _ => return Err(self.error("expected a factor")),
            }
            if self.peek() == Some(b'*') {
                self.i += 1;
            } else {
                return Ok((coeff, factors));
            }
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.error("expected digits"));
        }
        let text = std::str::from_utf8(&self.s[start..self.i]).expect("ascii");
        Ok(text.parse().expect("digits"))
    }

    fn rational(&mut self) -> Result<Coeff> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.i += 1;
            self.skip_ws();
            let den = self.digits()?;
            parse_coeff(&format!("{num}/{den}"))
        } else {
            Ok(Coeff::from_integer(num))
        }
    }

    fn name(&mut self) -> String {
        let start = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
            self.i += 1;
        }
        String::from_utf8(self.s[start..self.i].to_vec()).expect("ascii")
    }
}
