//! Graded quotients `Q/Ann F` and `Q/J_M` in square-free monomial coordinates.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::hilbert::HilbertVector;
use crate::error::{Error, Result};
use crate::linalg::{greedy_independent_rows, rank, rref, QMatrix};
use crate::matroid::{EquivClasses, Matroid};
use crate::poly::SquareFreePoly;
use crate::set::{k_subsets, ElemSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealKind {
    Ann,
    Jm,
}

/// Rows: degree-`d` square-free monomials; columns: degree-`(D−d)` ones; the
/// entry at `(S, T)` is the coefficient of `x_{S∪T}` in `f` when `S ∩ T = ∅`.
#[derive(Clone, Debug)]
pub struct Catalecticant {
    pub rows: Vec<ElemSet>,
    pub cols: Vec<ElemSet>,
    pub matrix: QMatrix,
}

impl Catalecticant {
    pub fn new(f: &SquareFreePoly, n: usize, top: usize, d: usize) -> Self {
        let rows = k_subsets(n, d);
        let cols = k_subsets(n, top - d);
        let col_index: HashMap<ElemSet, usize> = cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let row_index: HashMap<ElemSet, usize> = rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let mut matrix = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
        for (b, c) in f.terms() {
            for s in b.subsets().filter(|s| s.len() == d) {
                matrix[row_index[&s]][col_index[&(b - s)]] = c.clone();
            }
        }
        Catalecticant { rows, cols, matrix }
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }

    pub fn row_of(&self, s: ElemSet) -> Option<&[BigRational]> {
        self.rows.iter().position(|r| *r == s).map(|i| self.matrix[i].as_slice())
    }
}

/// Expresses vectors in a fixed independent list of rows.
#[derive(Clone, Debug)]
struct CoordinateSolver {
    pivots: Vec<usize>,
    /// Inverse of the basis restricted to the pivot columns.
    inverse: QMatrix,
}

impl CoordinateSolver {
    fn new(basis: &[Vec<BigRational>]) -> Self {
        let k = basis.len();
        if k == 0 {
            return CoordinateSolver { pivots: vec![], inverse: vec![] };
        }
        let pivots = rref(basis).1;
        // rows of [B_P | I] reduced to [I | B_P^{-1}]
        let aug: QMatrix = (0..k)
            .map(|i| {
                let mut row: Vec<BigRational> = pivots.iter().map(|&p| basis[i][p].clone()).collect();
                row.extend((0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        let (red, _) = rref(&aug);
        let inverse = red.into_iter().map(|r| r[k..].to_vec()).collect();
        CoordinateSolver { pivots, inverse }
    }

    /// `c` with `c · B = v`, assuming `v` lies in the row space.
    fn solve(&self, v: &[BigRational]) -> Vec<BigRational> {
        let k = self.pivots.len();
        let mut c = vec![BigRational::zero(); k];
        for (i, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            for j in 0..k {
                if !self.inverse[i][j].is_zero() {
                    c[j] += &v[p] * &self.inverse[i][j];
                }
            }
        }
        c
    }
}

#[derive(Clone, Debug)]
enum Presentation {
    Ann { f: SquareFreePoly, cats: Vec<Catalecticant>, solvers: Vec<CoordinateSolver> },
    Jm { classes: EquivClasses, independent: Vec<bool> },
}

/// A graded Artinian quotient of `Q = k[X_1..X_n]` by `Ann F` or `J_M`, with a
/// chosen monomial basis in each degree.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    kind: IdealKind,
    n: usize,
    top: usize,
    bases: Vec<Vec<ElemSet>>,
    pres: Presentation,
}

impl GradedQuotient {
    /// `Q/Ann f` for a homogeneous `f` in `n` variables. Bases are the
    /// greedily independent catalecticant rows in lexicographic monomial order.
    pub fn ann(f: &SquareFreePoly, n: usize) -> Result<Self> {
        let top = f.require_homogeneous()?;
        if let Some(e) = f.support().max_elem() {
            if e >= n {
                return Err(Error::IndexOutOfRange { index: e, limit: n });
            }
        }
        crate::error::guard("variables in catalecticant", n, 20)?;
        let mut cats = Vec::new();
        let mut bases = Vec::new();
        let mut solvers = Vec::new();
        for d in 0..=top {
            let cat = Catalecticant::new(f, n, top, d);
            let keep = if f.is_zero() { vec![] } else { greedy_independent_rows(&cat.matrix) };
            let rows: Vec<Vec<BigRational>> = keep.iter().map(|&i| cat.matrix[i].clone()).collect();
            bases.push(keep.iter().map(|&i| cat.rows[i]).collect());
            solvers.push(CoordinateSolver::new(&rows));
            cats.push(cat);
        }
        Ok(GradedQuotient { kind: IdealKind::Ann, n, top, bases, pres: Presentation::Ann { f: f.clone(), cats, solvers } })
    }

    /// `Q/J_M`; the basis of degree `l` is the class representatives of level `l`.
    pub fn jm(m: &Matroid) -> Result<Self> {
        let classes = m.equivalence_classes()?;
        let bases: Vec<Vec<ElemSet>> =
            classes.levels.iter().map(|lv| lv.iter().map(|c| c.representative()).collect()).collect();
        let mut independent = vec![false; 1usize << m.size()];
        for s in m.independents() {
            independent[s.bits() as usize] = true;
        }
        Ok(GradedQuotient {
            kind: IdealKind::Jm,
            n: m.size(),
            top: m.rank_total(),
            bases,
            pres: Presentation::Jm { classes, independent },
        })
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// The socle degree `D`.
    pub fn top_degree(&self) -> usize {
        self.top
    }

    pub fn dim(&self, d: usize) -> usize {
        self.bases.get(d).map_or(0, Vec::len)
    }

    pub fn basis(&self, d: usize) -> &[ElemSet] {
        self.bases.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn hilbert(&self) -> HilbertVector {
        HilbertVector::new(self.bases.iter().map(Vec::len).collect())
    }

    pub fn catalecticant(&self, d: usize) -> Option<&Catalecticant> {
        match &self.pres {
            Presentation::Ann { cats, .. } => cats.get(d),
            Presentation::Jm { .. } => None,
        }
    }

    /// The polynomial `F` of an `Ann F` quotient.
    pub fn dual_generator(&self) -> Option<&SquareFreePoly> {
        match &self.pres {
            Presentation::Ann { f, .. } => Some(f),
            Presentation::Jm { .. } => None,
        }
    }

    /// Coordinates of the class of `x_s` in the chosen basis of degree `|s|`.
    pub fn coords(&self, s: ElemSet) -> Vec<BigRational> {
        let d = s.len();
        let dim = self.dim(d);
        if d > self.top {
            return vec![];
        }
        match &self.pres {
            Presentation::Ann { cats, solvers, .. } => {
                let row = cats[d].row_of(s).expect("degree-d subset");
                solvers[d].solve(row)
            }
            Presentation::Jm { classes, independent } => {
                let mut v = vec![BigRational::zero(); dim];
                if independent[s.bits() as usize] {
                    let (_, idx) = classes.locate(s).expect("independent set has a class");
                    v[idx] = BigRational::one();
                }
                v
            }
        }
    }

    /// Matrix of multiplication by `L = Σ l_e X_e` from degree `d` to `d+1`;
    /// column `j` is the image of the `j`-th basis element.
    pub fn multiplication_matrix(&self, d: usize, l: &[BigRational]) -> QMatrix {
        let rows = self.dim(d + 1);
        let mut out = vec![vec![BigRational::zero(); self.dim(d)]; rows];
        if rows == 0 {
            return out;
        }
        for (j, s) in self.basis(d).iter().enumerate() {
            for e in 0..self.n {
                if s.contains(e) || l[e].is_zero() {
                    continue;
                }
                for (i, c) in self.coords(s.with(e)).into_iter().enumerate() {
                    if !c.is_zero() {
                        out[i][j] += &l[e] * c;
                    }
                }
            }
        }
        out
    }

    /// The pairing `(Q/I)_d × (Q/I)_{D−d} → (Q/I)_D` on the chosen bases, as
    /// a scalar matrix when `dim_D = 1`.
    pub fn pairing_matrix(&self, d: usize) -> Option<QMatrix> {
        if self.dim(self.top) != 1 || d > self.top {
            return None;
        }
        let dual = self.basis(self.top - d);
        Some(
            self.basis(d)
                .iter()
                .map(|s| {
                    dual.iter()
                        .map(|t| {
                            if s.is_disjoint(*t) {
                                self.coords(*s | *t).swap_remove(0)
                            } else {
                                BigRational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingRank {
    pub d: usize,
    pub rank: usize,
    pub dim_d: usize,
    pub dim_dual: usize,
}

impl PairingRank {
    pub fn nondegenerate(&self) -> bool {
        self.rank == self.dim_d && self.rank == self.dim_dual
    }
}

/// Ranks of the Poincaré pairings for `d ≤ D/2`.
pub fn poincare_pairing_ranks(q: &GradedQuotient) -> Vec<PairingRank> {
    (0..=q.top_degree() / 2)
        .map(|d| PairingRank {
            d,
            rank: q.pairing_matrix(d).map_or(0, |m| rank(&m)),
            dim_d: q.dim(d),
            dim_dual: q.dim(q.top_degree() - d),
        })
        .collect()
}

/// `dim_D = 1` and every pairing is nondegenerate.
pub fn is_gorenstein(q: &GradedQuotient) -> bool {
    q.dim(q.top_degree()) == 1 && poincare_pairing_ranks(q).iter().all(PairingRank::nondegenerate)
}

/// Hilbert vector of `Q/Ann f`, the variables being those up to the largest
/// one in the support of `f`.
pub fn ann_hilbert(f: &SquareFreePoly) -> Result<HilbertVector> {
    let n = f.support().max_elem().map_or(0, |e| e + 1);
    Ok(GradedQuotient::ann(f, n)?.hilbert())
}

/// Hilbert vector of `Q/J_M`: the number of classes per level.
pub fn jm_hilbert(m: &Matroid) -> Result<HilbertVector> {
    Ok(HilbertVector::new(m.equivalence_classes()?.counts()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::linalg::q;
    use crate::poly::phi;

    #[test]
    fn five_vector_hilbert() {
        let m = builtins::five_vector();
        assert_eq!(ann_hilbert(&phi(&m)).unwrap().0, vec![1, 5, 5, 1]);
        assert_eq!(jm_hilbert(&m).unwrap().0, vec![1, 5, 6, 1]);
    }

    #[test]
    fn boolean_hilbert() {
        let m = Matroid::boolean(4).unwrap();
        assert_eq!(ann_hilbert(&phi(&m)).unwrap().0, vec![1, 4, 6, 4, 1]);
        assert_eq!(jm_hilbert(&m).unwrap().0, vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let f = crate::poly::parse_squarefree("x1*x2 + x3").unwrap();
        assert!(matches!(ann_hilbert(&f), Err(Error::Inhomogeneous)));
    }

    #[test]
    fn gorenstein_flags() {
        let m = builtins::five_vector();
        let jm = GradedQuotient::jm(&m).unwrap();
        let ranks = poincare_pairing_ranks(&jm);
        assert_eq!(ranks[1], PairingRank { d: 1, rank: 5, dim_d: 5, dim_dual: 6 });
        assert!(!is_gorenstein(&jm));
        assert!(is_gorenstein(&GradedQuotient::ann(&phi(&m), 5).unwrap()));
        let fano = builtins::matroid("m23").unwrap();
        assert!(is_gorenstein(&GradedQuotient::jm(&fano).unwrap()));
    }

    #[test]
    fn multiplication_by_ones_on_m22() {
        let m = builtins::m22();
        let ones = vec![q(1); 3];
        for quo in [GradedQuotient::ann(&phi(&m), 3).unwrap(), GradedQuotient::jm(&m).unwrap()] {
            let m01 = quo.multiplication_matrix(0, &ones);
            assert_eq!(m01.len(), 3);
            let m12 = quo.multiplication_matrix(1, &ones);
            assert_eq!(m12.len(), 1);
            // each variable times the two others lands on the top class
            assert!(m12[0].iter().all(|x| *x == q(2)));
        }
    }

    #[test]
    fn coordinates_of_equivalent_monomials_agree() {
        let m = builtins::five_vector();
        let quo = GradedQuotient::ann(&phi(&m), 5).unwrap();
        let a = quo.coords(ElemSet::from_elems([0, 1]));
        let b = quo.coords(ElemSet::from_elems([1, 3]));
        assert_eq!(a, b);
        assert!(quo.coords(ElemSet::from_elems([0, 1, 3])).iter().all(Zero::is_zero));
    }
}
