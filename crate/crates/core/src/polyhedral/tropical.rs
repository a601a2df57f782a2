//! Max-plus tropicalisation of square-free polynomials: values, the
//! nonsmooth locus and normal fans of Newton polytopes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cone::{IVec, RationalCone};
use super::fan::{ones, Fan};
use super::polytope::{incidence, MatroidPolytope};
use crate::groebner::set_weight_q;
use crate::linalg::{dot_q, q};
use crate::matroid::Matroid;
use crate::poly::{phi, SquareFreePoly};
use crate::set::ElemSet;

fn supports(f: &SquareFreePoly) -> Vec<ElemSet> {
    f.terms().filter(|(_, c)| !c.is_zero()).map(|(s, _)| s).collect()
}

/// `max_S ⟨v_S, y⟩` over the supports of `f`; `None` for `f = 0`.
pub fn trop(f: &SquareFreePoly, y: &[BigRational]) -> Option<BigRational> {
    supports(f).into_iter().map(|s| set_weight_q(y, s)).max()
}

/// Whether the maximum is attained by at least two supports.
pub fn trop_nonsmooth(f: &SquareFreePoly, y: &[BigRational]) -> bool {
    let vals: Vec<BigRational> = supports(f).into_iter().map(|s| set_weight_q(y, s)).collect();
    let Some(max) = vals.iter().max() else { return false };
    vals.iter().filter(|v| *v == max).count() >= 2
}

fn diff(a: ElemSet, b: ElemSet, n: usize) -> IVec {
    (0..n).map(|e| BigInt::from(a.contains(e) as i64 - b.contains(e) as i64)).collect()
}

/// `{y ∈ H : ⟨v_S − v_T, y⟩ ≥ 0 for every support T}`, the cone where `S` wins.
fn winning_cone(s: ElemSet, all: &[ElemSet], n: usize) -> RationalCone {
    let ineqs = all.iter().filter(|t| **t != s).map(|t| diff(s, *t, n)).collect();
    RationalCone::new(n, ineqs, vec![ones(n)])
}

/// The fan of cones on which a single support attains the maximum: the
/// outer normal fan of the Newton polytope of `f`, restricted to `H`.
/// Under max-weight initial forms it is the Gröbner fan of `(f)`.
pub fn normal_fan(f: &SquareFreePoly, n: usize) -> Fan {
    let all = supports(f);
    let cones: Vec<RationalCone> = all
        .iter()
        .map(|s| winning_cone(*s, &all, n))
        .filter(|c| c.dim() + 1 == n)
        .collect();
    Fan::from_cones(n, cones, true)
}

/// The nonsmooth locus of `trop(f)` restricted to `H`, as the fan of the
/// codimension-one cones where two supports tie for the maximum.
pub fn tropical_hypersurface(f: &SquareFreePoly, n: usize) -> Fan {
    let all = supports(f);
    let mut cones = Vec::new();
    for (i, s) in all.iter().enumerate() {
        for t in &all[i + 1..] {
            let c = winning_cone(*s, &all, n).with_constraints(&[], &[diff(*s, *t, n)]);
            if c.dim() + 2 == n {
                cones.push(c);
            }
        }
    }
    Fan::from_cones(n, cones, true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportCheck {
    pub trials: usize,
    pub failures: usize,
    /// `⟨u_B, u_B⟩ = r − r²/#E = trop(Φ)(u_B)` for every basis.
    pub vertices_tight: bool,
    pub passed: bool,
}

/// Compares `max_B ⟨u_B, y⟩` with `trop(Φ_M)(y)` at random rational points of `H`.
pub fn support_function_check(m: &Matroid, trials: usize, seed: u64) -> SupportCheck {
    let n = m.size();
    let f = phi(m);
    let p = MatroidPolytope::new(m);
    let us = p.centered_base_vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for t in 0..trials {
        let y: Vec<BigRational> = if t == 0 {
            vec![BigRational::zero(); n]
        } else {
            let raw: Vec<BigRational> = (0..n)
                .map(|_| BigRational::new(BigInt::from(rng.gen_range(-60i64..=60)), BigInt::from(rng.gen_range(1i64..=7))))
                .collect();
            let mean = raw.iter().fold(BigRational::zero(), |a, x| a + x) / q(n as i64);
            raw.into_iter().map(|x| x - &mean).collect()
        };
        let support = us.iter().map(|u| dot_q(u, &y)).max();
        if support != trop(&f, &y) {
            failures += 1;
        }
    }
    let r = q(m.rank_total() as i64);
    let expected = &r - &r * &r / q(n as i64);
    let vertices_tight = us.iter().all(|u| dot_q(u, u) == expected && trop(&f, u) == Some(expected.clone()));
    SupportCheck { trials, failures, vertices_tight, passed: failures == 0 && vertices_tight }
}

/// Incidence vectors of the supports of `f`.
pub fn support_vectors(f: &SquareFreePoly, n: usize) -> Vec<IVec> {
    supports(f).into_iter().map(|s| incidence(s, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::polyhedral::ivec;

    fn qv(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn values_on_the_triangle() {
        let f = phi(&builtins::m22());
        assert_eq!(trop(&f, &qv(&[0, 0, 0])), Some(q(0)));
        assert!(trop_nonsmooth(&f, &qv(&[0, 0, 0])));
        assert_eq!(trop(&f, &qv(&[2, 1, 0])), Some(q(3)));
        assert!(!trop_nonsmooth(&f, &qv(&[2, 1, 0])));
        assert_eq!(trop(&f, &qv(&[1, 1, -2])), Some(q(2)));
        assert!(!trop_nonsmooth(&f, &qv(&[1, 1, -2])));
        assert!(trop_nonsmooth(&f, &qv(&[-1, -1, 2])));
        assert_eq!(trop(&SquareFreePoly::zero(), &qv(&[1])), None);
    }

    #[test]
    fn triangle_hypersurface_is_three_rays() {
        let v = tropical_hypersurface(&phi(&builtins::m22()), 3);
        let rays: Vec<IVec> = vec![ivec(&[-1, -1, 2]), ivec(&[-1, 2, -1]), ivec(&[2, -1, -1])];
        assert_eq!(v.rays(), rays.as_slice());
        assert_eq!(v.counts().maximal, 3);
        let single = tropical_hypersurface(&SquareFreePoly::monomial(ElemSet::from_elems([0, 1])), 3);
        assert!(single.cones().is_empty());
    }

    #[test]
    fn support_function() {
        for m in [builtins::m22(), builtins::five_vector()] {
            let c = support_function_check(&m, 100, 7);
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn five_vector_normal_fan() {
        let f = normal_fan(&phi(&builtins::five_vector()), 5);
        assert_eq!(f.counts().maximal, 8);
        assert!(f.is_complete());
    }
}
