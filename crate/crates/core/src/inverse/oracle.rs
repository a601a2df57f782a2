//! Gröbner cones of `Ann F` from the kernels of the catalecticant matrices.

use num_bigint::BigInt;
use num_traits::Zero;

use super::quotient::GradedQuotient;
use crate::error::Result;
use crate::groebner::{Cell, CellOracle, MonomialOrder, Tiebreak};
use crate::linalg::{left_null_space, rref, QMatrix};
use crate::poly::{Monomial, Poly, SquareFreePoly};
use crate::polyhedral::{IVec, RationalCone};
use crate::set::ElemSet;

/// Square-free part of `Ann F` in each degree `d ≤ D`, as kernels of the
/// catalecticant matrices. Every other monomial lies in `Ann F`.
pub struct AnnOracle {
    n: usize,
    /// Per degree: the monomials and a kernel basis in their coordinates.
    kernels: Vec<(Vec<ElemSet>, QMatrix)>,
}

impl AnnOracle {
    pub fn new(f: &SquareFreePoly, n: usize) -> Result<Self> {
        let q = GradedQuotient::ann(f, n)?;
        let kernels = (1..=q.top_degree())
            .map(|d| {
                let cat = q.catalecticant(d).expect("degree within socle degree");
                (cat.rows.clone(), left_null_space(&cat.matrix, cat.cols.len()))
            })
            .collect();
        Ok(AnnOracle { n, kernels })
    }

    /// Per degree, the reduced echelon basis of `(Ann F)_d` with leading terms
    /// taken under `order`, as `(lead, element)` pairs.
    pub fn echelon(&self, order: &MonomialOrder) -> Vec<(Monomial, Poly)> {
        let mut out = Vec::new();
        for (mons, kernel) in &self.kernels {
            if kernel.is_empty() {
                continue;
            }
            let mut perm: Vec<usize> = (0..mons.len()).collect();
            let ms: Vec<Monomial> = mons.iter().map(|s| Monomial::from_set(*s)).collect();
            perm.sort_by(|&a, &b| order.cmp(&ms[b], &ms[a]));
            let permuted: QMatrix = kernel.iter().map(|r| perm.iter().map(|&j| r[j].clone()).collect()).collect();
            let (red, pivots) = rref(&permuted);
            for (row, p) in red.into_iter().zip(pivots) {
                let poly = Poly::from_terms(
                    row.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (ms[perm[j]].clone(), c)),
                );
                out.push((ms[perm[p]].clone(), poly));
            }
        }
        out
    }
}

/// Square-free generators of `Ann F` up to degree `D` in reduced echelon form
/// for `order`; together with the squares `X_e²` they generate `Ann F`.
pub fn ann_generators(f: &SquareFreePoly, n: usize, order: &MonomialOrder) -> Result<Vec<Poly>> {
    Ok(AnnOracle::new(f, n)?.echelon(order).into_iter().map(|(_, p)| p).collect())
}

impl CellOracle for AnnOracle {
    fn nvars(&self) -> usize {
        self.n
    }

    fn cell(&self, w: &[BigInt]) -> Result<Cell> {
        let order = MonomialOrder::weighted_int(w, Tiebreak::GRevLex)?;
        let mut key = Vec::new();
        let mut ineqs: Vec<IVec> = Vec::new();
        for (lead, poly) in self.echelon(&order) {
            for (m, _) in poly.terms() {
                if *m != lead {
                    ineqs.push((0..self.n).map(|i| BigInt::from(lead.exp(i)) - BigInt::from(m.exp(i))).collect());
                }
            }
            key.push(lead);
        }
        key.sort();
        Ok(Cell { key, cone: RationalCone::new(self.n, ineqs, vec![]) })
    }
}
