use std::cmp::Ordering;
use std::fmt;

use crate::set::ElemSet;

/// Exponent vector with trailing zeros removed, so equal monomials compare
/// equal regardless of the number of variables in scope. The derived order is
/// lexicographic with `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        Monomial(v)
    }

    /// The square-free monomial `x_S`.
    pub fn from_set(s: ElemSet) -> Self {
        let mut v = vec![0; s.max_elem().map_or(0, |m| m + 1)];
        for e in s.iter() {
            v[e] = 1;
        }
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of exponent slots actually stored (index of last variable + 1).
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> ElemSet {
        ElemSet::from_elems(self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial::new((0..other.0.len()).map(|i| other.exp(i) - self.exp(i)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial((0..n).map(|i| self.exp(i).max(other.exp(i))).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison with `x1 > x2 > ...`.
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in (0..n).rev() {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_ignored() {
        assert_eq!(Monomial::new(vec![1, 0, 0]), Monomial::var(0));
        assert_eq!(Monomial::var(2).to_string(), "x3");
        assert_eq!(Monomial::new(vec![2, 0, 1]).to_string(), "x1^2*x3");
    }

    #[test]
    fn lex_and_grevlex() {
        let x1x3 = Monomial::new(vec![1, 0, 1]);
        let x2sq = Monomial::new(vec![0, 2]);
        assert!(x1x3 > x2sq);
        // grevlex: x2^2 > x1*x3 (x3 has the larger exponent in x1*x3)
        assert_eq!(x2sq.grevlex_cmp(&x1x3), Ordering::Greater);
        assert!(Monomial::var(0) > Monomial::var(1));
    }

    #[test]
    fn divisibility() {
        let a = Monomial::new(vec![1, 1]);
        let b = Monomial::new(vec![2, 1, 3]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Monomial::new(vec![1, 0, 3]));
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&Monomial::var(2)), Monomial::new(vec![1, 1, 1]));
    }
}
