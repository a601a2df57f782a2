//! Text form of polynomials: signed terms `c*x1*x3^2` with rational `c = p/q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::general::Poly;
use super::monomial::Monomial;
use super::squarefree::SquareFreePoly;
use crate::error::{Error, Result};

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a Monomial, &'a BigRational)>,
{
    let mut first = true;
    for (m, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if m.is_one() {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{m}")?;
        } else {
            write!(f, "{a}*{m}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Higher degrees first, lexicographically largest first within a degree.
fn display_order(p: &Poly) -> Vec<(&Monomial, &BigRational)> {
    let mut v: Vec<_> = p.terms().collect();
    v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
    v
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, display_order(self).into_iter())
    }
}

impl fmt::Display for SquareFreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn number(&mut self) -> Result<BigRational> {
        let n = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.digits()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(n, d));
        }
        Ok(BigRational::from(n))
    }

    fn variable(&mut self) -> Result<Monomial> {
        self.pos += 1; // 'x'
        let i = self.digits()?;
        let i: usize = match usize::try_from(&i) {
            Ok(i) if (1..=crate::set::MAX_GROUND).contains(&i) => i,
            _ => return self.err("variable index out of range"),
        };
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = match u32::try_from(&self.digits()?) {
                Ok(e) if e <= 64 => e,
                _ => return self.err("exponent too large"),
            };
        }
        let mut v = vec![0; i];
        v[i - 1] = e;
        Ok(Monomial::new(v))
    }

    fn factor(&mut self, coeff: &mut BigRational, mono: &mut Monomial) -> Result<()> {
        match self.peek() {
            Some(b'x') => {
                *mono = mono.mul(&self.variable()?);
                Ok(())
            }
            Some(c) if c.is_ascii_digit() => {
                *coeff *= self.number()?;
                Ok(())
            }
            _ => self.err("expected a number or a variable"),
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut coeff = BigRational::one();
        let mut mono = Monomial::one();
        self.factor(&mut coeff, &mut mono)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok((mono, coeff))
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut p = Poly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                None => return self.err("empty polynomial"),
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return self.err("expected + or -"),
            };
            first = false;
            let (m, c) = self.term()?;
            p.add_term(m, if sign < 0 { -c } else { c });
        }
        Ok(p)
    }
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    p.poly()
}

pub fn parse_squarefree(text: &str) -> Result<SquareFreePoly> {
    parse_poly(text)?
        .to_squarefree()
        .ok_or_else(|| Error::Parse { pos: 0, msg: "polynomial is not square-free".into() })
}
