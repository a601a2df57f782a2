use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::general::{DiffPoly, Poly};
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::matroid::{EquivClass, Matroid};
use crate::set::ElemSet;

/// Multilinear polynomial: a rational combination of monomials `x_S`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SquareFreePoly {
    terms: BTreeMap<ElemSet, BigRational>,
}

impl SquareFreePoly {
    pub fn zero() -> Self {
        SquareFreePoly::default()
    }

    pub fn monomial(s: ElemSet) -> Self {
        let mut f = SquareFreePoly::zero();
        f.add_term(s, BigRational::one());
        f
    }

    /// Sum of `x_S` over `sets`, each with coefficient 1.
    pub fn sum_of<I: IntoIterator<Item = ElemSet>>(sets: I) -> Self {
        let mut f = SquareFreePoly::zero();
        for s in sets {
            f.add_term(s, BigRational::one());
        }
        f
    }

    pub fn add_term(&mut self, s: ElemSet, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(s).or_insert_with(BigRational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&s);
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

    pub fn terms(&self) -> impl Iterator<Item = (ElemSet, &BigRational)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn coeff(&self, s: ElemSet) -> BigRational {
        self.terms.get(&s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> ElemSet {
        self.terms.keys().fold(ElemSet::EMPTY, |a, s| a | *s)
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|s| s.len());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn require_homogeneous(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::InvalidInput("the zero polynomial has no degree".into()));
        }
        self.homogeneous_degree().ok_or(Error::Inhomogeneous)
    }

    pub fn add(&self, other: &SquareFreePoly) -> SquareFreePoly {
        let mut r = self.clone();
        for (s, c) in &other.terms {
            r.add_term(*s, c.clone());
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> SquareFreePoly {
        if c.is_zero() {
            return SquareFreePoly::zero();
        }
        SquareFreePoly { terms: self.terms.iter().map(|(s, a)| (*s, a * c)).collect() }
    }

    /// Product of polynomials in disjoint sets of variables.
    pub fn mul_disjoint(&self, other: &SquareFreePoly) -> Result<SquareFreePoly> {
        if !self.support().is_disjoint(other.support()) {
            return Err(Error::InvalidInput("factors share a variable".into()));
        }
        let mut r = SquareFreePoly::zero();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                r.add_term(*s | *t, a * b);
            }
        }
        Ok(r)
    }

    /// Moves variable `i` to `i + offset`.
    pub fn shift(&self, offset: usize) -> SquareFreePoly {
        SquareFreePoly { terms: self.terms.iter().map(|(s, c)| (ElemSet(s.0 << offset), c.clone())).collect() }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(s, c)| (Monomial::from_set(*s), c.clone())))
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (s, c) in &self.terms {
            let mut v = c.clone();
            for e in s.iter() {
                v *= &point[e];
            }
            total += v;
        }
        total
    }

    /// `∂^S f`.
    pub fn partial(&self, s: ElemSet) -> SquareFreePoly {
        let mut r = SquareFreePoly::zero();
        for (b, c) in &self.terms {
            if s.is_subset(*b) {
                r.add_term(*b - s, c.clone());
            }
        }
        r
    }
}

/// The action of a Q-side polynomial on P: `X^a x_B = x_{B∖S}` when the
/// exponent vector `a` is the indicator of `S ⊆ B`, and 0 for any squared
/// variable.
pub fn apply_diff(op: &DiffPoly, f: &SquareFreePoly) -> SquareFreePoly {
    let mut r = SquareFreePoly::zero();
    for (m, c) in op.terms() {
        if !m.is_squarefree() {
            continue;
        }
        let s = m.support();
        for (b, d) in &f.terms {
            if s.is_subset(*b) {
                r.add_term(*b - s, c * d);
            }
        }
    }
    r
}

/// `Φ_M`: the sum of `x_B` over the bases.
pub fn phi(m: &Matroid) -> SquareFreePoly {
    SquareFreePoly::sum_of(m.bases().iter().copied())
}

/// `Φ_M^(i)`: the sum of `x_G` over independent sets of size `i`.
pub fn phi_level(m: &Matroid, i: usize) -> Result<SquareFreePoly> {
    if i > m.rank_total() {
        return Err(Error::IndexOutOfRange { index: i, limit: m.rank_total() });
    }
    Ok(SquareFreePoly::sum_of(m.level(i).iter().copied()))
}

/// `f_τ`: the sum of `x_F` over the members of a class.
pub fn f_tau(class: &EquivClass) -> SquareFreePoly {
    SquareFreePoly::sum_of(class.members.iter().copied())
}

impl fmt::Debug for SquareFreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::linalg::q;
    use proptest::prelude::*;

    fn set(elems: &[usize]) -> ElemSet {
        ElemSet::from_elems(elems.iter().map(|e| e - 1))
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&builtins::m22()).to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert_eq!(phi(&Matroid::boolean(3).unwrap()).to_string(), "x1*x2*x3");
        let m = builtins::five_vector();
        let p = phi(&m);
        assert_eq!(p.len(), 8);
        assert_eq!(phi_level(&m, 3).unwrap(), p);
        assert!(phi_level(&m, 4).is_err());
    }

    #[test]
    fn f_tau_examples() {
        let m = builtins::five_vector();
        let classes = m.equivalence_classes().unwrap();
        let (l, i) = classes.locate(set(&[1, 2])).unwrap();
        assert_eq!(f_tau(classes.class(l, i)).to_string(), "x1*x2 + x1*x4 + x2*x4");
        let (l, i) = classes.locate(set(&[1, 3])).unwrap();
        assert_eq!(f_tau(classes.class(l, i)), SquareFreePoly::monomial(set(&[1, 3])));
        let m22 = builtins::m22();
        let c22 = m22.equivalence_classes().unwrap();
        assert_eq!(f_tau(&c22.levels[2][0]), phi(&m22));
    }

    #[test]
    fn apply_diff_examples() {
        let p = phi(&builtins::five_vector());
        let d12 = DiffPoly::monomial(Monomial::from_set(set(&[1, 2])));
        assert_eq!(apply_diff(&d12, &p).to_string(), "x3 + x5");
        for e in 0..5 {
            let sq = DiffPoly::monomial(Monomial::var(e).mul(&Monomial::var(e)));
            assert!(apply_diff(&sq, &p).is_zero());
        }
        let x123 = SquareFreePoly::monomial(set(&[1, 2, 3]));
        assert_eq!(apply_diff(&DiffPoly::var(0), &x123), SquareFreePoly::monomial(set(&[2, 3])));
    }

    #[test]
    fn class_sums_give_level_polynomials() {
        for m in [builtins::five_vector(), Matroid::projective_geometry(2, 3).unwrap()] {
            let classes = m.equivalence_classes().unwrap();
            for l in 0..=m.rank_total() {
                let total = classes.levels[l]
                    .iter()
                    .fold(SquareFreePoly::zero(), |acc, c| acc.add(&f_tau(c)));
                assert_eq!(total, phi_level(&m, l).unwrap());
            }
        }
    }

    #[test]
    fn phi_of_direct_sum_is_product() {
        let m1 = builtins::five_vector();
        let m2 = builtins::m22();
        let s = m1.direct_sum(&m2).unwrap();
        let prod = phi(&m1).mul_disjoint(&phi(&m2).shift(m1.size())).unwrap();
        assert_eq!(phi(&s), prod);
    }

    fn small_diff() -> impl Strategy<Value = DiffPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 0..5), -3i64..4), 0..5).prop_map(|ts| {
            DiffPoly::from_terms(ts.into_iter().map(|(e, c)| (Monomial::new(e), q(c))))
        })
    }

    proptest! {
        #[test]
        fn composition_law(a in small_diff(), b in small_diff()) {
            let f = phi(&builtins::five_vector()).add(&SquareFreePoly::monomial(set(&[1, 2, 4, 5])));
            prop_assert_eq!(apply_diff(&a.mul(&b), &f), apply_diff(&a, &apply_diff(&b, &f)));
        }

        #[test]
        fn bilinearity(a in small_diff(), b in small_diff(), c in -5i64..5) {
            let f = phi(&Matroid::projective_geometry(2, 3).unwrap());
            let lhs = apply_diff(&a.add(&b.scale(&q(c))), &f);
            let rhs = apply_diff(&a, &f).add(&apply_diff(&b, &f).scale(&q(c)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
