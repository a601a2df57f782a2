//! The generating set `Λ_M = Λ1 ∪ Λ2 ∪ Λ3` of `J_M`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::order::{MonomialOrder, Tiebreak};
use super::reduce::first_bad_pair;
use crate::error::{Error, Result};
use crate::matroid::{EquivClasses, Matroid};
use crate::poly::{Monomial, Poly};
use crate::set::ElemSet;

#[derive(Clone, Debug)]
pub struct LambdaSet {
    n: usize,
    /// `(A, A')` with `A` lexicographically before `A'`, one per unordered intra-class pair.
    pub lambda1: Vec<(ElemSet, ElemSet)>,
    /// Variables whose squares are generators.
    pub lambda2: Vec<usize>,
    /// Circuits; every dependent monomial is divisible by one of these.
    pub lambda3: Vec<ElemSet>,
    /// Members of each class with at least two elements, in class order.
    classes: Vec<Vec<ElemSet>>,
}

/// `⟨w, v_S⟩`.
pub fn set_weight(w: &[BigInt], s: ElemSet) -> BigInt {
    s.iter().map(|e| &w[e]).sum()
}

pub fn set_weight_q(w: &[BigRational], s: ElemSet) -> BigRational {
    s.iter().fold(BigRational::zero(), |acc, e| acc + &w[e])
}

fn binomial(a: ElemSet, b: ElemSet) -> Poly {
    Poly::from_terms([
        (Monomial::from_set(a), BigRational::one()),
        (Monomial::from_set(b), -BigRational::one()),
    ])
}

impl LambdaSet {
    pub fn new(m: &Matroid) -> Result<Self> {
        let classes = m.equivalence_classes()?;
        Ok(Self::from_classes(m, &classes))
    }

    pub fn from_classes(m: &Matroid, classes: &EquivClasses) -> Self {
        let mut lambda1 = Vec::new();
        let mut big = Vec::new();
        for c in classes.iter() {
            if c.len() < 2 {
                continue;
            }
            for (i, a) in c.members.iter().enumerate() {
                for b in &c.members[i + 1..] {
                    lambda1.push((*a, *b));
                }
            }
            big.push(c.members.clone());
        }
        LambdaSet {
            n: m.size(),
            lambda1,
            lambda2: (0..m.size()).collect(),
            lambda3: m.circuits(),
            classes: big,
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Classes with at least two members.
    pub fn nontrivial_classes(&self) -> &[Vec<ElemSet>] {
        &self.classes
    }

    pub fn generators(&self) -> Vec<Poly> {
        let mut g: Vec<Poly> = self.lambda1.iter().map(|(a, b)| binomial(*a, *b)).collect();
        g.extend(self.lambda2.iter().map(|&e| Poly::monomial(Monomial::var(e).mul(&Monomial::var(e)))));
        g.extend(self.lambda3.iter().map(|&c| Poly::monomial(Monomial::from_set(c))));
        g
    }

    /// All square-free dependent monomials of degree at most `max_deg`.
    pub fn dependent_monomials(&self, max_deg: usize) -> Vec<ElemSet> {
        let mut out = Vec::new();
        for d in 1..=max_deg.min(self.n) {
            for s in crate::set::k_subsets(self.n, d) {
                if self.lambda3.iter().any(|c| c.is_subset(s)) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Initial forms of the generators at `w` (the generators themselves when
    /// `w` ties every binomial, e.g. `w = 0`).
    pub fn initial_ideal(&self, w: &[BigRational]) -> Vec<Poly> {
        let mut out: Vec<Poly> = self
            .lambda1
            .iter()
            .map(|(a, b)| {
                let (wa, wb) = (set_weight_q(w, *a), set_weight_q(w, *b));
                match wa.cmp(&wb) {
                    std::cmp::Ordering::Greater => Poly::monomial(Monomial::from_set(*a)),
                    std::cmp::Ordering::Less => Poly::monomial(Monomial::from_set(*b)),
                    std::cmp::Ordering::Equal => binomial(*a, *b),
                }
            })
            .collect();
        let gens = self.generators();
        out.extend(gens[self.lambda1.len()..].iter().cloned());
        out
    }

    /// Whether `w` ties some Λ1 binomial.
    pub fn on_wall(&self, w: &[BigInt]) -> bool {
        self.lambda1.iter().any(|(a, b)| set_weight(w, *a) == set_weight(w, *b))
    }

    /// Standard monomial of each nontrivial class at a generic `w`: the
    /// unique member of minimal weight.
    pub fn class_minima(&self, w: &[BigInt]) -> Result<Vec<ElemSet>> {
        self.classes
            .iter()
            .map(|members| {
                let weights: Vec<BigInt> = members.iter().map(|s| set_weight(w, *s)).collect();
                let min = weights.iter().min().expect("nonempty class");
                let mut at_min = members.iter().zip(&weights).filter(|(_, x)| *x == min);
                let first = at_min.next().expect("minimum attained").0;
                if at_min.next().is_some() {
                    return Err(Error::TiedWeight);
                }
                Ok(*first)
            })
            .collect()
    }

    /// Inequalities `⟨λ, v_F − v_{F0}⟩ >= 0` of the Gröbner cone where the
    /// given members `F0` are the class minima.
    pub fn cone_inequalities(&self, minima: &[ElemSet]) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        for (members, &f0) in self.classes.iter().zip(minima) {
            for &f in members {
                if f != f0 {
                    let v: Vec<BigInt> = (0..self.n)
                        .map(|e| BigInt::from(f.contains(e) as i64 - f0.contains(e) as i64))
                        .collect();
                    out.push(v);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UgbReport {
    pub passed: bool,
    pub orders_tested: usize,
    pub random_orders: usize,
    pub structured_orders: usize,
    pub failures: Vec<String>,
}

/// Samples a weight vector in `[-1000, 1000]^n` that ties no Λ1 binomial.
pub fn generic_weight(lambda: &LambdaSet, rng: &mut ChaCha8Rng) -> Vec<BigInt> {
    loop {
        let w: Vec<BigInt> = (0..lambda.nvars()).map(|_| BigInt::from(rng.gen_range(-1000..=1000))).collect();
        if !lambda.on_wall(&w) {
            return w;
        }
    }
}

/// The lex and grevlex orders under every cyclic rotation of the variables.
pub fn structured_orders(n: usize) -> Vec<MonomialOrder> {
    let mut out = Vec::new();
    for tb in [Tiebreak::Lex, Tiebreak::GRevLex] {
        for shift in 0..n {
            let perm = (0..n).map(|i| (i + shift) % n).collect();
            out.push(MonomialOrder::new(n, tb).with_perm(perm).expect("rotation"));
        }
    }
    out
}

/// Checks Buchberger's criterion for Λ_M under `samples` random weight orders
/// and the structured orders.
pub fn universal_gb_probe(m: &Matroid, samples: usize, seed: u64) -> Result<UgbReport> {
    let lambda = LambdaSet::new(m)?;
    let gens = lambda.generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orders = Vec::new();
    for _ in 0..samples {
        let w = generic_weight(&lambda, &mut rng);
        orders.push(MonomialOrder::weighted_int(&w, Tiebreak::GrLex)?);
    }
    let structured = structured_orders(m.size());
    let n_structured = structured.len();
    orders.extend(structured);
    let mut failures = Vec::new();
    for o in &orders {
        if let Some((i, j)) = first_bad_pair(&gens, o) {
            failures.push(format!("{}: S({}, {}) does not reduce to 0", o.describe(), gens[i], gens[j]));
        }
    }
    Ok(UgbReport {
        passed: failures.is_empty(),
        orders_tested: orders.len(),
        random_orders: samples,
        structured_orders: n_structured,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::groebner::reduce::{divide, is_groebner, reduced_groebner_basis, s_polynomial};
    use crate::linalg::q;
    use crate::poly::{apply_diff, parse_poly, phi};

    #[test]
    fn five_vector_generators() {
        let m = builtins::five_vector();
        let l = LambdaSet::new(&m).unwrap();
        // two 3-member rank-2 classes and the 8-member basis class
        assert_eq!(l.lambda1.len(), 3 + 3 + 28);
        assert_eq!(l.lambda3.len(), 3);
        assert_eq!(l.nontrivial_classes().len(), 3);
        let phi = phi(&m);
        for g in l.generators() {
            assert!(apply_diff(&g, &phi).is_zero(), "{g} does not annihilate");
        }
    }

    #[test]
    fn division_by_lambda() {
        let m = builtins::five_vector();
        let gens = LambdaSet::new(&m).unwrap().generators();
        let o = MonomialOrder::grevlex(5);
        let (_, r) = divide(&parse_poly("x1*x2 - x1*x4").unwrap(), &gens, &o);
        assert!(r.is_zero());
        let (_, r) = divide(&parse_poly("x1*x3 + x4*x5 - x1*x5 - x3*x4").unwrap(), &gens, &o);
        assert!(!r.is_zero());
    }

    #[test]
    fn s_pair_cases() {
        let o = MonomialOrder::grevlex(5);
        let gens = LambdaSet::new(&builtins::five_vector()).unwrap().generators();
        // binomial against a square of a variable outside its support
        let f = parse_poly("x1*x2 - x1*x4").unwrap();
        let g = parse_poly("x3^2").unwrap();
        let s = s_polynomial(&f, &g, &o);
        assert!(divide(&s, &gens, &o).1.is_zero());
        let s = s_polynomial(&parse_poly("x1^2").unwrap(), &parse_poly("x1*x2*x4").unwrap(), &o);
        assert!(s.is_zero());
    }

    #[test]
    fn lambda_is_groebner_for_fixed_orders() {
        let gens = LambdaSet::new(&builtins::five_vector()).unwrap().generators();
        assert!(is_groebner(&gens, &MonomialOrder::grevlex(5)));
        let rev = MonomialOrder::lex(5).with_perm(vec![4, 3, 2, 1, 0]).unwrap();
        assert!(is_groebner(&gens, &rev));
    }

    #[test]
    fn probes_pass() {
        for m in [builtins::m22(), Matroid::boolean(4).unwrap()] {
            let r = universal_gb_probe(&m, 20, 7).unwrap();
            assert!(r.passed, "{:?}", r.failures);
            assert_eq!(r.orders_tested, 20 + 2 * m.size());
        }
    }

    #[test]
    fn initial_ideal_matches_buchberger() {
        let m = builtins::m22();
        let l = LambdaSet::new(&m).unwrap();
        let w = [q(3), q(1), q(0)];
        let ini = l.initial_ideal(&w);
        assert!(ini.iter().all(|p| p.len() == 1));
        let o = MonomialOrder::weighted(&w, Tiebreak::GrLex).unwrap();
        let gb = reduced_groebner_basis(&l.generators(), &o);
        // every reduced-GB leading monomial is a multiple of some Λ initial form
        for g in &gb {
            let lm = o.leading(g).unwrap().0;
            assert!(ini.iter().any(|p| p.terms().next().unwrap().0.divides(&lm)));
        }
        // w = 0 leaves the binomials untouched
        let zero = l.initial_ideal(&[q(0), q(0), q(0)]);
        assert_eq!(zero, l.generators());
    }

    #[test]
    fn minima_and_cone() {
        let l = LambdaSet::new(&builtins::m22()).unwrap();
        let w: Vec<BigInt> = [3, 1, 0].iter().map(|&x| BigInt::from(x)).collect();
        // weights of x1x2, x1x3, x2x3 are 4, 3, 1
        let minima = l.class_minima(&w).unwrap();
        assert_eq!(minima, vec![ElemSet::from_elems([1, 2])]);
        assert_eq!(l.cone_inequalities(&minima).len(), 2);
        let tie: Vec<BigInt> = [1, 1, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert!(matches!(l.class_minima(&tie), Err(Error::TiedWeight)));
    }
}
