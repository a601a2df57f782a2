//! Division, S-polynomials and Buchberger's algorithm.

use num_rational::BigRational;
use num_traits::One;

use super::order::MonomialOrder;
use crate::poly::{Monomial, Poly};

/// Multivariate division: `f = Σ q_i g_i + r` where no term of `r` is
/// divisible by a leading monomial; the first divisor whose leading monomial
/// divides the current leading term is used.
pub fn divide(f: &Poly, divisors: &[Poly], order: &MonomialOrder) -> (Vec<Poly>, Poly) {
    let leads: Vec<Option<(Monomial, BigRational)>> = divisors.iter().map(|g| order.leading(g)).collect();
    divide_with_leads(f, divisors, &leads, order)
}

fn divide_with_leads(
    f: &Poly,
    divisors: &[Poly],
    leads: &[Option<(Monomial, BigRational)>],
    order: &MonomialOrder,
) -> (Vec<Poly>, Poly) {
    let mut quotients = vec![Poly::zero(); divisors.len()];
    let mut rem = Poly::zero();
    let mut p = f.clone();
    while let Some((m, c)) = order.leading(&p) {
        let hit = leads
            .iter()
            .position(|l| l.as_ref().is_some_and(|(lm, _)| lm.divides(&m)));
        match hit {
            Some(i) => {
                let (lm, lc) = leads[i].as_ref().expect("nonzero divisor");
                let qm = lm.quotient_of(&m);
                let qc = &c / lc;
                p = p.sub(&divisors[i].mul_term(&qm, &qc));
                quotients[i].add_term(qm, qc);
            }
            None => {
                rem.add_term(m.clone(), c.clone());
                p.add_term(m, -c);
            }
        }
    }
    (quotients, rem)
}

pub fn remainder(f: &Poly, divisors: &[Poly], order: &MonomialOrder) -> Poly {
    divide(f, divisors, order).1
}

/// `(Γ/in f)·f/lc(f) − (Γ/in g)·g/lc(g)` with `Γ = lcm(in f, in g)`.
pub fn s_polynomial(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
    let (Some((mf, cf)), Some((mg, cg))) = (order.leading(f), order.leading(g)) else {
        return Poly::zero();
    };
    let l = mf.lcm(&mg);
    let a = f.mul_term(&mf.quotient_of(&l), &(BigRational::one() / cf));
    let b = g.mul_term(&mg.quotient_of(&l), &(BigRational::one() / cg));
    a.sub(&b)
}

/// The first generator pair whose S-polynomial does not reduce to zero.
/// Pairs with coprime leading monomials are skipped (Buchberger's first
/// criterion).
pub fn first_bad_pair(gens: &[Poly], order: &MonomialOrder) -> Option<(usize, usize)> {
    let leads: Vec<Option<(Monomial, BigRational)>> = gens.iter().map(|g| order.leading(g)).collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if let (Some((a, _)), Some((b, _))) = (&leads[i], &leads[j]) {
                if a.is_coprime(b) {
                    continue;
                }
            }
            let s = s_polynomial(&gens[i], &gens[j], order);
            if !divide_with_leads(&s, gens, &leads, order).1.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Buchberger's criterion over every generator pair.
pub fn is_groebner(gens: &[Poly], order: &MonomialOrder) -> bool {
    first_bad_pair(gens, order).is_none()
}

/// A Gröbner basis by Buchberger's algorithm with the coprime-leading-term
/// and chain criteria.
pub fn buchberger(gens: &[Poly], order: &MonomialOrder) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut leads: Vec<Monomial> = basis.iter().map(|g| order.leading(g).expect("nonzero").0).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut done: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    while let Some((i, j)) = pairs.pop() {
        done.insert((i, j));
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let l = leads[i].lcm(&leads[j]);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = remainder(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if r.is_zero() {
            continue;
        }
        let k = basis.len();
        leads.push(order.leading(&r).expect("nonzero").0);
        basis.push(r);
        for i2 in 0..k {
            pairs.push((i2, k));
        }
    }
    basis
}

/// The reduced Gröbner basis: monic, tails reduced, sorted by increasing
/// leading monomial.
pub fn reduced_groebner_basis(gens: &[Poly], order: &MonomialOrder) -> Vec<Poly> {
    let gb = buchberger(gens, order);
    let leads: Vec<Monomial> = gb.iter().map(|g| order.leading(g).expect("nonzero").0).collect();
    // keep one element per minimal leading monomial
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, g) in gb.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, lj)| {
            j != i && lj.divides(&leads[i]) && (lj != &leads[i] || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let (lm, lc) = order.leading(&minimal[i]).expect("nonzero");
        let tail = minimal[i].sub(&Poly::term(lm.clone(), lc.clone()));
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let reduced_tail = remainder(&tail, &others, order);
        let g = Poly::term(lm, lc.clone()).add(&reduced_tail).scale(&(BigRational::one() / lc));
        out.push(g);
    }
    out.sort_by(|a, b| order.cmp(&order.leading(a).unwrap().0, &order.leading(b).unwrap().0));
    out
}

/// Whether `f` lies in the ideal whose Gröbner basis is `gb`.
pub fn in_ideal(f: &Poly, gb: &[Poly], order: &MonomialOrder) -> bool {
    remainder(f, gb, order).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::poly::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn division_examples() {
        let o = MonomialOrder::grevlex(3);
        let (qs, r) = divide(&p("x1^2*x2"), &[p("x1^2")], &o);
        assert!(r.is_zero());
        assert_eq!(qs[0], p("x2"));
        let f = p("x1^2*x2 + x1*x2^2 + x2^2");
        let divs = [p("x1*x2 - 1"), p("x2^2 - 1")];
        let (qs, r) = divide(&f, &divs, &MonomialOrder::lex(2));
        let back = qs[0].mul(&divs[0]).add(&qs[1].mul(&divs[1])).add(&r);
        assert_eq!(back, f);
        assert_eq!(r, p("x1 + x2 + 1"));
    }

    #[test]
    fn s_polynomials() {
        let o = MonomialOrder::grevlex(4);
        assert!(s_polynomial(&p("x1*x2"), &p("x2*x3"), &o).is_zero());
        let f = p("x1*x2 - x3*x4");
        assert!(s_polynomial(&f, &f, &o).is_zero());
    }

    #[test]
    fn groebner_detection() {
        let o = MonomialOrder::grevlex(4);
        let incomplete = [p("x1*x2 - x3*x4"), p("x1*x3 - x2*x4")];
        assert!(!is_groebner(&incomplete, &o));
        let gb = reduced_groebner_basis(&incomplete, &o);
        assert!(is_groebner(&gb, &o));
        assert!(in_ideal(&p("x1*x2 - x3*x4"), &gb, &o));
        assert!(!in_ideal(&p("x1*x4"), &gb, &o));
    }

    #[test]
    fn reduced_basis_is_canonical() {
        // the twisted cubic, under two generating sets
        let o = MonomialOrder::grevlex(4);
        let a = [p("x1*x3 - x2^2"), p("x2*x4 - x3^2"), p("x1*x4 - x2*x3")];
        let b = [a[0].add(&a[1]), a[1].clone(), a[2].sub(&a[0].scale(&q(3)))];
        assert_eq!(reduced_groebner_basis(&a, &o), reduced_groebner_basis(&b, &o));
    }
}
