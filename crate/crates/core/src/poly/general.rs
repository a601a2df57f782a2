use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::squarefree::SquareFreePoly;
use crate::error::{Error, Result};

/// Sparse polynomial with rational coefficients in variables `x1, x2, ...`.
/// Used both for Q-side differential operators and for symbolic
/// determinants on the P side.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

/// Q-side elements acting on P by `X_i = ∂/∂x_i`.
pub type DiffPoly = Poly;

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(m, BigRational::one())
    }

    pub fn var(i: usize) -> Self {
        Poly::monomial(Monomial::var(i))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of monomials.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Number of variables touched (index of the last one + 1).
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    /// Leading term in lexicographic order.
    pub fn lex_leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), -a)).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::constant(BigRational::one());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (lm, lc) = d
            .lex_leading()
            .ok_or_else(|| Error::InvalidInput("division by the zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.lex_leading() {
            if !lm.divides(m) {
                return Err(Error::Consistency("inexact polynomial division".into()));
            }
            let qm = lm.quotient_of(m);
            let qc = c / lc;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Converts to a square-free polynomial when every exponent is at most 1.
    pub fn to_squarefree(&self) -> Option<SquareFreePoly> {
        let mut f = SquareFreePoly::zero();
        for (m, c) in &self.terms {
            if !m.is_squarefree() {
                return None;
            }
            f.add_term(m.support(), c.clone());
        }
        Some(f)
    }

    /// Multiplies by the least common denominator and divides out the content
    /// so that the coefficients are coprime integers with positive leading
    /// (lexicographically largest) coefficient.
    pub fn primitive(&self) -> Poly {
        let Some((_, lead)) = self.lex_leading() else {
            return Poly::zero();
        };
        let sign = if lead < &BigRational::zero() { -BigInt::one() } else { BigInt::one() };
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> =
            self.terms.values().map(|c| (c * BigRational::from(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| num_integer::gcd(g, x.clone()));
        let k = BigRational::new(sign * lcm, g);
        self.scale(&k)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
