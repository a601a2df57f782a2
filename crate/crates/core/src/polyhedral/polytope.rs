//! Matroid polytopes and Edmonds' description by rank inequalities.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::lp::Lp;
use crate::error::{guard, Result};
use crate::linalg::q;
use crate::matroid::Matroid;
use crate::set::ElemSet;

/// Incidence vector of `s` in `R^n`.
pub fn incidence(s: ElemSet, n: usize) -> Vec<BigInt> {
    (0..n).map(|e| BigInt::from(s.contains(e) as i64)).collect()
}

/// `P_M = conv({0} ∪ {v_F})` and its face `Δ_M = conv{v_B}`.
#[derive(Clone, Debug)]
pub struct MatroidPolytope {
    n: usize,
    rank: usize,
    independents: Vec<ElemSet>,
    bases: Vec<ElemSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdmondsCheck {
    /// Every incidence vector satisfies `x ≥ 0` and `x(A) ≤ r(A)` for all `A`.
    pub vertices_satisfy: bool,
    /// 0/1 points satisfying the rank inequalities.
    pub candidates: usize,
    /// Each of them is a convex combination of the vertices (exact LP).
    pub candidates_in_hull: bool,
}

impl MatroidPolytope {
    pub fn new(m: &Matroid) -> Self {
        MatroidPolytope {
            n: m.size(),
            rank: m.rank_total(),
            independents: m.independents().collect(),
            bases: m.bases().to_vec(),
        }
    }

    /// Vertices of `P_M`: the origin (the empty set) and the `v_F`.
    pub fn vertices(&self) -> Vec<Vec<BigInt>> {
        self.independents.iter().map(|s| incidence(*s, self.n)).collect()
    }

    /// Vertices of the base polytope `Δ_M`.
    pub fn base_vertices(&self) -> Vec<Vec<BigInt>> {
        self.bases.iter().map(|s| incidence(*s, self.n)).collect()
    }

    /// `u_B = v_B − r(E)/#E · n`, the vertices of `Δ⁰_M ⊂ H`.
    pub fn centered_base_vertices(&self) -> Vec<Vec<BigRational>> {
        let shift = BigRational::new(BigInt::from(self.rank), BigInt::from(self.n.max(1)));
        self.bases
            .iter()
            .map(|b| (0..self.n).map(|e| if b.contains(e) { BigRational::one() } else { BigRational::zero() } - &shift).collect())
            .collect()
    }

    /// Checks Edmonds' theorem on ground sets of at most 6 elements.
    pub fn edmonds_check(&self, m: &Matroid) -> Result<EdmondsCheck> {
        guard("ground set size for the Edmonds check", self.n, 6)?;
        let all: Vec<ElemSet> = ElemSet::full(self.n).subsets().collect();
        let satisfies = |x: ElemSet| all.iter().all(|a| (x & *a).len() <= m.rank(*a));
        let vertices_satisfy = self.independents.iter().all(|s| satisfies(*s));
        let verts = self.vertices();
        let mut candidates = 0;
        let mut in_hull = true;
        for x in all.iter().filter(|x| satisfies(**x)) {
            candidates += 1;
            // λ ≥ 0, Σλ = 1, Σ λ_v v = x
            let k = verts.len();
            let mut lp = Lp::new(k);
            for i in 0..k {
                let mut unit = vec![BigRational::zero(); k];
                unit[i] = BigRational::one();
                lp.geq(unit, BigRational::zero());
            }
            lp.equal(vec![BigRational::one(); k], BigRational::one());
            for e in 0..self.n {
                let row = verts.iter().map(|v| BigRational::from_integer(v[e].clone())).collect();
                lp.equal(row, q(x.contains(e) as i64));
            }
            in_hull &= lp.feasible_point().is_some();
        }
        Ok(EdmondsCheck { vertices_satisfy, candidates, candidates_in_hull: in_hull })
    }

    /// `nOFF` text listing the vertices of `Δ_M` (no faces), for at most 8 elements.
    pub fn base_polytope_off(&self) -> Result<String> {
        guard("ground set size for OFF export", self.n, 8)?;
        let verts = self.base_vertices();
        let mut s = format!("nOFF\n{}\n{} 0 0\n", self.n, verts.len());
        for v in verts {
            let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "{}", coords.join(" "));
        }
        Ok(s)
    }
}
