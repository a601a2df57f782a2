//! Rational polyhedral cones with both descriptions, converted by the double
//! description method over the integers.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::bits::Bits;
use crate::linalg::{clear_denominators, dot_int, primitive, rank_int, rref};

pub type IVec = Vec<BigInt>;

pub fn ivec(v: &[i64]) -> IVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn neg(v: &[BigInt]) -> IVec {
    v.iter().map(|x| -x).collect()
}

/// `a*x - b*y`, made primitive.
fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> IVec {
    primitive(x.iter().zip(y).map(|(u, v)| a * u - b * v).collect())
}

fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Generators of a cone: `cone(rays) + span(lineality)`. Rays are reduced
/// modulo the lineality space (zero at its echelon pivots), primitive and
/// sorted; the lineality basis is the integer-scaled reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generators {
    pub rays: Vec<IVec>,
    pub lineality: Vec<IVec>,
}

fn to_q(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from(x.clone())).collect()
}

impl Generators {
    fn canonical(n: usize, rays: Vec<IVec>, lineality: Vec<IVec>) -> Self {
        let (lin_rows, pivots) = rref(&lineality.iter().map(|v| to_q(v)).collect::<Vec<_>>());
        let mut out: Vec<IVec> = rays
            .into_iter()
            .map(|r| {
                let mut q = to_q(&r);
                for (row, &p) in lin_rows.iter().zip(&pivots) {
                    let f = q[p].clone();
                    if !f.is_zero() {
                        for j in 0..n {
                            q[j] -= &f * &row[j];
                        }
                    }
                }
                clear_denominators(&q)
            })
            .filter(|r| !is_zero(r))
            .collect();
        out.sort();
        out.dedup();
        Generators { rays: out, lineality: lin_rows.iter().map(|r| clear_denominators(r)).collect() }
    }
}

/// Runs the double description method on `{x : A x >= 0, E x = 0}`.
pub fn double_description(n: usize, ineqs: &[IVec], eqs: &[IVec]) -> Generators {
    let mut constraints: Vec<IVec> = Vec::new();
    for e in eqs {
        constraints.push(e.clone());
        constraints.push(neg(e));
    }
    constraints.extend(ineqs.iter().cloned());

    let mut lin: Vec<IVec> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut rays: Vec<(IVec, Bits)> = Vec::new();
    for (k, c) in constraints.iter().enumerate() {
        if let Some(idx) = lin.iter().position(|l| !dot_int(c, l).is_zero()) {
            let mut l = lin.remove(idx);
            let mut cl = dot_int(c, &l);
            if cl.is_negative() {
                l = neg(&l);
                cl = -cl;
            }
            for other in lin.iter_mut() {
                let t = dot_int(c, other);
                if !t.is_zero() {
                    *other = combine(&cl, other, &t, &l);
                }
            }
            for (r, z) in rays.iter_mut() {
                let t = dot_int(c, r);
                if !t.is_zero() {
                    *r = combine(&cl, r, &t, &l);
                }
                z.insert(k);
            }
            let mut z = Bits::with_capacity(constraints.len());
            for j in 0..k {
                z.insert(j);
            }
            rays.push((l, z));
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|(r, _)| dot_int(c, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let negs: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if negs.is_empty() {
            for (i, (_, z)) in rays.iter_mut().enumerate() {
                if vals[i].is_zero() {
                    z.insert(k);
                }
            }
            continue;
        }
        let mut next: Vec<(IVec, Bits)> = Vec::new();
        for &p in &pos {
            for &q in &negs {
                let common = rays[p].1.and(&rays[q].1);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, (_, z))| i == p || i == q || !common.is_subset(z));
                if adjacent {
                    let r = combine(&vals[p], &rays[q].0, &vals[q], &rays[p].0);
                    let mut z = common;
                    z.insert(k);
                    next.push((r, z));
                }
            }
        }
        for (i, (r, z)) in rays.into_iter().enumerate() {
            if vals[i].is_positive() {
                next.push((r, z));
            } else if vals[i].is_zero() {
                let mut z = z;
                z.insert(k);
                next.push((r, z));
            }
        }
        rays = next;
    }
    Generators::canonical(n, rays.into_iter().map(|(r, _)| r).collect(), lin)
}

/// A facet of a cone: its inward normal (projected into the cone's span) and
/// a point in its relative interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: IVec,
    pub interior: IVec,
    /// Indices into the cone's ray list of the rays lying on the facet.
    pub rays: Vec<usize>,
}

/// The cone `{x : a·x >= 0 for a in inequalities, e·x = 0 for e in equations}`.
#[derive(Debug)]
pub struct RationalCone {
    n: usize,
    ineqs: Vec<IVec>,
    eqs: Vec<IVec>,
    gens: OnceLock<Generators>,
}

impl Clone for RationalCone {
    fn clone(&self) -> Self {
        let gens = OnceLock::new();
        if let Some(g) = self.gens.get() {
            let _ = gens.set(g.clone());
        }
        RationalCone { n: self.n, ineqs: self.ineqs.clone(), eqs: self.eqs.clone(), gens }
    }
}

impl PartialEq for RationalCone {
    /// Equality as point sets.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generators() == other.generators()
    }
}

impl Eq for RationalCone {}

fn tidy(rows: Vec<IVec>) -> Vec<IVec> {
    let mut v: Vec<IVec> = rows.into_iter().map(primitive).filter(|r| !is_zero(r)).collect();
    v.sort();
    v.dedup();
    v
}

impl RationalCone {
    pub fn new(n: usize, ineqs: Vec<IVec>, eqs: Vec<IVec>) -> Self {
        debug_assert!(ineqs.iter().chain(&eqs).all(|r| r.len() == n));
        RationalCone { n, ineqs: tidy(ineqs), eqs: tidy(eqs), gens: OnceLock::new() }
    }

    pub fn whole(n: usize) -> Self {
        RationalCone::new(n, Vec::new(), Vec::new())
    }

    /// `cone(rays) + span(lineality)`, converted to inequalities through the dual cone.
    pub fn from_generators(n: usize, rays: Vec<IVec>, lineality: Vec<IVec>) -> Self {
        let dual = double_description(n, &rays, &lineality);
        let cone = RationalCone::new(n, dual.rays, dual.lineality);
        let _ = cone.gens.set(Generators::canonical(n, rays, lineality));
        cone
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn inequalities(&self) -> &[IVec] {
        &self.ineqs
    }

    pub fn equations(&self) -> &[IVec] {
        &self.eqs
    }

    pub fn generators(&self) -> &Generators {
        self.gens.get_or_init(|| double_description(self.n, &self.ineqs, &self.eqs))
    }

    pub fn rays(&self) -> &[IVec] {
        &self.generators().rays
    }

    pub fn lineality(&self) -> &[IVec] {
        &self.generators().lineality
    }

    pub fn dim(&self) -> usize {
        let g = self.generators();
        rank_int(g.rays.iter().chain(&g.lineality).cloned().collect())
    }

    pub fn lineality_dim(&self) -> usize {
        self.generators().lineality.len()
    }

    pub fn is_full_dim(&self) -> bool {
        self.dim() == self.n
    }

    pub fn with_constraints(&self, ineqs: &[IVec], eqs: &[IVec]) -> RationalCone {
        RationalCone::new(
            self.n,
            self.ineqs.iter().chain(ineqs).cloned().collect(),
            self.eqs.iter().chain(eqs).cloned().collect(),
        )
    }

    pub fn intersect(&self, other: &RationalCone) -> RationalCone {
        self.with_constraints(&other.ineqs, &other.eqs)
    }

    /// The image under `x ↦ -x`.
    pub fn negate(&self) -> RationalCone {
        let c = RationalCone::new(
            self.n,
            self.ineqs.iter().map(|a| neg(a)).collect(),
            self.eqs.clone(),
        );
        if let Some(g) = self.gens.get() {
            let rays = g.rays.iter().map(|r| neg(r)).collect();
            let _ = c.gens.set(Generators::canonical(self.n, rays, g.lineality.clone()));
        }
        c
    }

    pub fn contains_point(&self, x: &[BigInt]) -> bool {
        self.ineqs.iter().all(|a| !dot_int(a, x).is_negative())
            && self.eqs.iter().all(|e| dot_int(e, x).is_zero())
    }

    /// Membership of a rational point.
    pub fn contains_rational(&self, x: &[BigRational]) -> bool {
        self.contains_point(&clear_denominators(x))
    }

    /// Whether `x` satisfies every inequality that is not an implicit equation strictly.
    pub fn contains_in_relative_interior(&self, x: &[BigInt]) -> bool {
        if !self.contains_point(x) {
            return false;
        }
        let rays = self.rays();
        self.ineqs.iter().all(|a| {
            let implicit = rays.iter().all(|r| dot_int(a, r).is_zero());
            implicit || dot_int(a, x).is_positive()
        })
    }

    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        let g = other.generators();
        g.rays.iter().all(|r| self.contains_point(r))
            && g.lineality.iter().all(|l| self.contains_point(l) && self.contains_point(&neg(l)))
    }

    /// Sum of the rays: a point of the relative interior.
    pub fn relative_interior_point(&self) -> IVec {
        let mut p = vec![BigInt::zero(); self.n];
        for r in self.rays() {
            for (a, b) in p.iter_mut().zip(r) {
                *a += b;
            }
        }
        p
    }

    /// Linear span of the cone as a list of basis vectors.
    pub fn span(&self) -> Vec<IVec> {
        let g = self.generators();
        let rows: Vec<Vec<BigRational>> = g.rays.iter().chain(&g.lineality).map(|v| to_q(v)).collect();
        rref(&rows).0.iter().map(|r| clear_denominators(r)).collect()
    }

    /// Orthogonal projection of `a` onto the span, scaled to a primitive integer vector.
    fn project_to_span(&self, a: &[BigInt]) -> IVec {
        let basis: Vec<Vec<BigRational>> = self.span().iter().map(|v| to_q(v)).collect();
        let k = basis.len();
        if k == self.n {
            return primitive(a.to_vec());
        }
        // solve Gram * c = B a, then projection = B^T c
        let aq = to_q(a);
        let mut aug: Vec<Vec<BigRational>> = (0..k)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    (0..k).map(|j| crate::linalg::dot_q(&basis[i], &basis[j])).collect();
                row.push(crate::linalg::dot_q(&basis[i], &aq));
                row
            })
            .collect();
        let (red, pivots) = rref(&aug);
        let mut c = vec![BigRational::zero(); k];
        for (row, &p) in red.iter().zip(&pivots) {
            c[p] = row[k].clone();
        }
        aug.clear();
        let proj: Vec<BigRational> = (0..self.n)
            .map(|j| (0..k).fold(BigRational::zero(), |s, i| s + &c[i] * &basis[i][j]))
            .collect();
        clear_denominators(&proj)
    }

    /// The facets, deduplicated by the set of rays they contain.
    pub fn facets(&self) -> Vec<Facet> {
        let g = self.generators().clone();
        let d = self.dim();
        if d == 0 {
            return Vec::new();
        }
        let mut seen: Vec<Vec<usize>> = Vec::new();
        let mut out = Vec::new();
        for a in &self.ineqs {
            let vals: Vec<BigInt> = g.rays.iter().map(|r| dot_int(a, r)).collect();
            if vals.iter().all(Zero::is_zero) {
                continue;
            }
            let tight: Vec<usize> = (0..g.rays.len()).filter(|&i| vals[i].is_zero()).collect();
            let rank = rank_int(
                tight.iter().map(|&i| g.rays[i].clone()).chain(g.lineality.iter().cloned()).collect(),
            );
            if rank + 1 != d || seen.contains(&tight) {
                continue;
            }
            let mut interior = vec![BigInt::zero(); self.n];
            for &i in &tight {
                for (x, y) in interior.iter_mut().zip(&g.rays[i]) {
                    *x += y;
                }
            }
            seen.push(tight.clone());
            out.push(Facet { normal: self.project_to_span(a), interior, rays: tight });
        }
        out.sort_by(|a, b| a.normal.cmp(&b.normal));
        out
    }

    /// The face cut out by a facet as a cone.
    pub fn facet_cone(&self, f: &Facet) -> RationalCone {
        let g = self.generators();
        let rays = f.rays.iter().map(|&i| g.rays[i].clone()).collect();
        RationalCone::from_generators(self.n, rays, g.lineality.clone())
    }

    /// Whether `face` is a face of this cone.
    pub fn has_face(&self, face: &RationalCone) -> bool {
        if !self.contains_cone(face) {
            return false;
        }
        let fg = face.generators();
        let tight: Vec<IVec> = self
            .ineqs
            .iter()
            .filter(|a| fg.rays.iter().all(|r| dot_int(a, r).is_zero()))
            .cloned()
            .collect();
        let smallest = self.with_constraints(&[], &tight);
        face.contains_cone(&smallest)
    }
}
