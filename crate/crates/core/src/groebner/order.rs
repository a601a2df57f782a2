use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::clear_denominators;
use crate::poly::{Monomial, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tiebreak {
    Lex,
    GrLex,
    GRevLex,
}

/// A monomial order on `x1..xn`: optionally a weight (compared after total
/// degree, so the order stays admissible for any sign pattern), then a fixed
/// tiebreak over a variable priority list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    nvars: usize,
    weight: Option<Vec<i64>>,
    tiebreak: Tiebreak,
    /// `perm[0]` is the most significant variable.
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(nvars: usize, tiebreak: Tiebreak) -> Self {
        MonomialOrder { nvars, weight: None, tiebreak, perm: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(nvars, Tiebreak::Lex)
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::new(nvars, Tiebreak::GrLex)
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(nvars, Tiebreak::GRevLex)
    }

    /// Weight order refined by `tiebreak`; a rational weight is rescaled by a
    /// positive factor to integers.
    pub fn weighted(w: &[BigRational], tiebreak: Tiebreak) -> Result<Self> {
        Self::weighted_int(&clear_denominators(w), tiebreak)
    }

    pub fn weighted_int(w: &[BigInt], tiebreak: Tiebreak) -> Result<Self> {
        let ints = w
            .iter()
            .map(|x| i64::try_from(x).map_err(|_| Error::InvalidInput("weight entry too large".into())))
            .collect::<Result<Vec<_>>>()?;
        let mut o = Self::new(w.len(), tiebreak);
        o.weight = Some(ints);
        Ok(o)
    }

    /// Reorders variable priority; `perm` must be a permutation of `0..n`.
    pub fn with_perm(mut self, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; self.nvars];
        if perm.len() != self.nvars || perm.iter().any(|&i| i >= self.nvars || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::InvalidInput("variable priority is not a permutation".into()));
        }
        self.perm = perm;
        Ok(self)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weight(&self) -> Option<&[i64]> {
        self.weight.as_deref()
    }

    pub fn tiebreak(&self) -> Tiebreak {
        self.tiebreak
    }

    fn weight_of(w: &[i64], m: &Monomial) -> i128 {
        m.exps().iter().zip(w).map(|(&e, &x)| e as i128 * x as i128).sum()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if let Some(w) = &self.weight {
            let o = a
                .degree()
                .cmp(&b.degree())
                .then_with(|| Self::weight_of(w, a).cmp(&Self::weight_of(w, b)));
            if o != Ordering::Equal {
                return o;
            }
        }
        let lex = || {
            for &v in &self.perm {
                match a.exp(v).cmp(&b.exp(v)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        };
        match self.tiebreak {
            Tiebreak::Lex => lex(),
            Tiebreak::GrLex => a.degree().cmp(&b.degree()).then_with(lex),
            Tiebreak::GRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.perm.iter().rev() {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn leading(&self, p: &Poly) -> Option<(Monomial, BigRational)> {
        p.terms()
            .max_by(|x, y| self.cmp(x.0, y.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Terms sorted from largest to smallest.
    pub fn sorted_terms(&self, p: &Poly) -> Vec<(Monomial, BigRational)> {
        let mut v: Vec<(Monomial, BigRational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|x, y| self.cmp(&y.0, &x.0));
        v
    }

    pub fn describe(&self) -> String {
        let base = match self.tiebreak {
            Tiebreak::Lex => "lex",
            Tiebreak::GrLex => "grlex",
            Tiebreak::GRevLex => "grevlex",
        };
        let perm: Vec<String> = self.perm.iter().map(|v| format!("x{}", v + 1)).collect();
        match &self.weight {
            Some(w) => format!("weight {w:?} then {base} on {}", perm.join(">")),
            None => format!("{base} on {}", perm.join(">")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn standard_orders() {
        let (a, b) = (m(&[1, 0, 1]), m(&[0, 2]));
        assert_eq!(MonomialOrder::lex(3).cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::grevlex(3).cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::grlex(3).cmp(&m(&[1]), &m(&[0, 2])), Ordering::Less);
        let rev = MonomialOrder::lex(3).with_perm(vec![2, 1, 0]).unwrap();
        assert_eq!(rev.cmp(&m(&[1]), &m(&[0, 0, 1])), Ordering::Less);
        assert!(MonomialOrder::lex(3).with_perm(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn weights_after_degree() {
        let o = MonomialOrder::weighted(&[q(-1), q(5), q(0)], Tiebreak::GrLex).unwrap();
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Less);
        // degree wins over weight
        assert_eq!(o.cmp(&m(&[2]), &m(&[0, 1])), Ordering::Greater);
        let p = Poly::from_terms([(m(&[1, 1]), q(2)), (m(&[0, 1, 1]), q(3))]);
        assert_eq!(o.leading(&p).unwrap().0, m(&[0, 1, 1]));
    }
}
