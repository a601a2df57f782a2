//! Initial forms, initial ideals and Gröbner cones of general ideals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::order::{MonomialOrder, Tiebreak};
use super::reduce::reduced_groebner_basis;
use crate::error::Result;
use crate::linalg::{clear_denominators, dot_q};
use crate::poly::{Monomial, Poly};
use crate::polyhedral::{IVec, RationalCone};

fn exps_q(m: &Monomial, n: usize) -> Vec<BigRational> {
    (0..n).map(|i| BigRational::from_integer(BigInt::from(m.exp(i)))).collect()
}

/// Terms of `f` of maximal `w`-weight.
pub fn initial_form(f: &Poly, w: &[BigRational]) -> Poly {
    let n = w.len();
    let weights: Vec<(BigRational, &Monomial, &BigRational)> =
        f.terms().map(|(m, c)| (dot_q(&exps_q(m, n), w), m, c)).collect();
    let Some(max) = weights.iter().map(|x| &x.0).max().cloned() else {
        return Poly::zero();
    };
    Poly::from_terms(weights.into_iter().filter(|x| x.0 == max).map(|(_, m, c)| (m.clone(), c.clone())))
}

/// The weight order of `w` refined by grevlex.
pub fn weight_order(w: &[BigRational]) -> Result<MonomialOrder> {
    MonomialOrder::weighted(w, Tiebreak::GRevLex)
}

/// Generators of `in_w(I)`: initial forms of a Gröbner basis for the
/// grevlex-refined weight order, which is a Gröbner basis at `w` as well.
pub fn initial_ideal_w(gens: &[Poly], w: &[BigRational]) -> Result<Vec<Poly>> {
    let gb = reduced_groebner_basis(gens, &weight_order(w)?);
    Ok(gb.iter().map(|g| initial_form(g, w)).collect())
}

/// A polynomial together with its marked leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPoly {
    pub lead: Monomial,
    pub poly: Poly,
}

impl MarkedPoly {
    /// Inequalities `⟨λ, lead − m⟩ >= 0` over the other terms `m`.
    pub fn inequalities(&self, n: usize) -> Vec<IVec> {
        self.poly
            .terms()
            .filter(|(m, _)| **m != self.lead)
            .map(|(m, _)| (0..n).map(|i| BigInt::from(self.lead.exp(i)) - BigInt::from(m.exp(i))).collect())
            .collect()
    }
}

/// The reduced Gröbner basis under `order`, marked by its leading monomials.
pub fn marked_basis(gens: &[Poly], order: &MonomialOrder) -> Vec<MarkedPoly> {
    reduced_groebner_basis(gens, order)
        .into_iter()
        .map(|g| MarkedPoly { lead: order.leading(&g).expect("nonzero").0, poly: g })
        .collect()
}

/// The closed cone of weights selecting the same marked basis.
pub fn groebner_cone(marked: &[MarkedPoly], n: usize) -> RationalCone {
    RationalCone::new(n, marked.iter().flat_map(|g| g.inequalities(n)).collect(), vec![])
}

/// Rescales a rational weight to a primitive integer vector; zero stays zero.
pub fn integral_weight(w: &[BigRational]) -> Vec<BigInt> {
    if w.iter().all(Zero::is_zero) {
        return vec![BigInt::zero(); w.len()];
    }
    clear_denominators(w)
}
