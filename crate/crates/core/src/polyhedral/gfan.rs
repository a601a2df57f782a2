//! The Gröbner fan of `J_M` from its walls, and the identities relating it to
//! the tropical hypersurfaces of the class sums `f_τ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::cone::{Generators, IVec, RationalCone};
use super::fan::{ones, Fan};
use super::tropical::{normal_fan, tropical_hypersurface};
use crate::error::{guard, Result};
use crate::groebner::{traverse, LambdaOracle, LambdaSet};
use crate::linalg::{dot_int, primitive};
use crate::matroid::Matroid;
use crate::poly::{phi, SquareFreePoly};
use crate::set::ElemSet;

/// Above this many elements the fan is found by traversal instead of chamber enumeration.
pub const ARRANGEMENT_LIMIT: usize = 5;
/// Largest ground set accepted by [`jm_fan`].
pub const JM_FAN_LIMIT: usize = 7;

fn diff(a: ElemSet, b: ElemSet, n: usize) -> IVec {
    (0..n).map(|e| BigInt::from(a.contains(e) as i64 - b.contains(e) as i64)).collect()
}

/// `W_{F,F'}`: the two sums agree and are minimal within the class.
#[derive(Clone, Debug)]
pub struct Wall {
    pub class: usize,
    pub pair: (ElemSet, ElemSet),
    pub cone: RationalCone,
    /// Index of an earlier wall with the same cone.
    pub same_as: Option<usize>,
}

/// Every wall, one per unordered pair inside each nontrivial class, as a cone in `R^E`.
pub fn walls(m: &Matroid) -> Result<Vec<Wall>> {
    let lambda = LambdaSet::new(m)?;
    Ok(walls_of(&lambda))
}

fn walls_of(lambda: &LambdaSet) -> Vec<Wall> {
    let n = lambda.nvars();
    let mut out: Vec<Wall> = Vec::new();
    let mut seen: BTreeMap<Generators, usize> = BTreeMap::new();
    for (ci, members) in lambda.nontrivial_classes().iter().enumerate() {
        for (i, &f) in members.iter().enumerate() {
            for &g in &members[i + 1..] {
                let ineqs = members.iter().filter(|h| **h != f).map(|h| diff(*h, f, n)).collect();
                let cone = RationalCone::new(n, ineqs, vec![diff(f, g, n)]);
                let key = cone.generators().clone();
                let same_as = seen.get(&key).copied();
                seen.entry(key).or_insert(out.len());
                out.push(Wall { class: ci, pair: (f, g), cone, same_as });
            }
        }
    }
    out
}

/// Normals of the hyperplanes `Σ_F x = Σ_{F'} x` projected into `H`,
/// primitive with a positive leading entry.
fn arrangement(lambda: &LambdaSet) -> Vec<IVec> {
    let n = lambda.nvars();
    let size = BigInt::from(n);
    let mut normals: Vec<IVec> = Vec::new();
    for members in lambda.nontrivial_classes() {
        for (i, &f) in members.iter().enumerate() {
            for &g in &members[i + 1..] {
                let h = diff(f, g, n);
                let s: BigInt = h.iter().sum();
                let mut p = primitive(h.iter().map(|x| x * &size - &s).collect());
                if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                    p = p.iter().map(|x| -x).collect();
                }
                if p.iter().any(|x| !x.is_zero()) {
                    normals.push(p);
                }
            }
        }
    }
    normals.sort();
    normals.dedup();
    normals
}

/// Chambers of the arrangement inside `H`.
fn chambers(n: usize, normals: &[IVec]) -> Vec<RationalCone> {
    let mut cells = vec![RationalCone::new(n, vec![], vec![ones(n)])];
    for h in normals {
        let neg: IVec = h.iter().map(|x| -x).collect();
        let mut next = Vec::with_capacity(cells.len() * 2);
        for c in cells {
            let g = c.generators();
            let cut = g.lineality.iter().any(|l| !dot_int(h, l).is_zero())
                || (g.rays.iter().any(|r| dot_int(h, r).is_positive())
                    && g.rays.iter().any(|r| dot_int(h, r).is_negative()));
            if cut {
                next.push(c.with_constraints(std::slice::from_ref(h), &[]));
                next.push(c.with_constraints(&[neg.clone()], &[]));
            } else {
                next.push(c);
            }
        }
        cells = next;
    }
    cells
}

/// `Ḡ(J_M)` by enumerating the chambers of all hyperplanes `Σ_F x = Σ_{F'} x`
/// in `H`, marking the class minima at an interior point of each, and
/// merging chambers with equal markings.
pub fn jm_fan_by_chambers(m: &Matroid) -> Result<Fan> {
    guard("ground set size for chamber enumeration", m.size(), ARRANGEMENT_LIMIT)?;
    let lambda = LambdaSet::new(m)?;
    let n = lambda.nvars();
    let mut cells: BTreeMap<Vec<ElemSet>, RationalCone> = BTreeMap::new();
    for c in chambers(n, &arrangement(&lambda)) {
        let minima = lambda.class_minima(&c.relative_interior_point())?;
        cells
            .entry(minima)
            .or_insert_with_key(|k| RationalCone::new(n, lambda.cone_inequalities(k), vec![]));
    }
    Ok(Fan::from_cones(n, cells.into_values().collect(), true))
}

/// `Ḡ(J_M)`: chamber enumeration up to five elements, fan traversal through
/// the universal Gröbner basis `Λ_M` for six or seven.
pub fn jm_fan(m: &Matroid) -> Result<Fan> {
    guard("ground set size for the Groebner fan of J_M", m.size(), JM_FAN_LIMIT)?;
    if m.size() <= ARRANGEMENT_LIMIT {
        return jm_fan_by_chambers(m);
    }
    let lambda = LambdaSet::new(m)?;
    Ok(traverse(&LambdaOracle::new(&lambda), 0, true)?.fan())
}

/// `Ḡ((Φ_M))`, the outer normal fan of the base polytope.
pub fn phi_fan(m: &Matroid) -> Fan {
    normal_fan(&phi(m), m.size())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HypersurfIdentities {
    /// Codimension-one cones of the Gröbner fan of each `f_τ` are the `−W_{F,F'}`
    /// of that codimension; the lower-dimensional `−W` are faces of that fan.
    pub id1: bool,
    /// `V_trop(f_τ)` is the union of the codimension-one cones of that fan and
    /// of the `−W_{F,F'}` inside `τ`.
    pub id2: bool,
    /// The negated codimension-one skeleton of `G(J_M)` is `∪_τ V_trop(f_τ)`.
    pub id3: bool,
    /// `V_trop(Φ_M)` is a union of negated codimension-one cones of `G(J_M)`.
    pub corollary: bool,
    pub classes: usize,
    pub walls: usize,
}

fn same_cone_set(a: &[RationalCone], b: &[RationalCone]) -> bool {
    let ka: std::collections::BTreeSet<&Generators> = a.iter().map(RationalCone::generators).collect();
    let kb: std::collections::BTreeSet<&Generators> = b.iter().map(RationalCone::generators).collect();
    ka == kb
}

/// Whether `alpha` avoids the interior of every maximal cone of a complete
/// fan, i.e. lies in the union of its codimension-one cones. A convex set in
/// the boundary of a cone lies in one of its facets, so it suffices that some
/// proper inequality of each maximal cone vanishes on `alpha ∩ C`.
fn in_codim1_skeleton(alpha: &RationalCone, maximal: &[RationalCone]) -> bool {
    maximal.iter().all(|c| {
        let k = alpha.intersect(c);
        let kg = k.generators();
        let cg = c.generators();
        c.inequalities().iter().any(|a| {
            let proper = cg.rays.iter().any(|r| !dot_int(a, r).is_zero());
            proper && kg.rays.iter().chain(&kg.lineality).all(|r| dot_int(a, r).is_zero())
        })
    })
}

/// Checks the three identities and the subcomplex statement exactly.
pub fn hypersurf_identities(m: &Matroid) -> Result<HypersurfIdentities> {
    let lambda = LambdaSet::new(m)?;
    let n = lambda.nvars();
    let h = [ones(n)];
    let all_walls = walls_of(&lambda);
    let top = n.saturating_sub(1);
    let mut out = HypersurfIdentities {
        id1: true,
        id2: true,
        id3: true,
        corollary: true,
        classes: lambda.nontrivial_classes().len(),
        walls: all_walls.len(),
    };
    let mut vtrop_all: Vec<RationalCone> = Vec::new();
    for (ci, members) in lambda.nontrivial_classes().iter().enumerate() {
        let f = SquareFreePoly::sum_of(members.iter().copied());
        let gf = normal_fan(&f, n);
        let codim1 = gf.codim1_cones();
        let neg_walls: Vec<RationalCone> = all_walls
            .iter()
            .filter(|w| w.class == ci)
            .map(|w| w.cone.negate().with_constraints(&[], &h))
            .collect();
        let (big, small): (Vec<RationalCone>, Vec<RationalCone>) =
            neg_walls.into_iter().partition(|w| w.dim() + 1 == top);
        let faces_ok = small.iter().all(|w| gf.cones().iter().any(|c| c.has_face(w)));
        out.id1 &= same_cone_set(&codim1, &big) && faces_ok;
        let vt = tropical_hypersurface(&f, n);
        let small_inside = small.iter().all(|w| vt.cones().iter().any(|c| c.contains_cone(w)));
        out.id2 &= same_cone_set(vt.cones(), &codim1) && same_cone_set(vt.cones(), &big) && small_inside;
        vtrop_all.extend(vt.cones().iter().cloned());
    }
    let jf = jm_fan(m)?;
    let neg_sigma: Vec<RationalCone> = jf.codim1_cones().iter().map(RationalCone::negate).collect();
    let neg_max: Vec<RationalCone> = jf.cones().iter().map(RationalCone::negate).collect();
    let covered = neg_sigma.iter().all(|s| vtrop_all.iter().any(|v| v.contains_cone(s)));
    let covers = vtrop_all.iter().all(|v| in_codim1_skeleton(v, &neg_max));
    out.id3 = covered && covers;
    let vphi = tropical_hypersurface(&phi(m), n);
    let inside = vphi.cones().iter().all(|v| in_codim1_skeleton(v, &neg_max));
    let aligned = neg_sigma.iter().all(|s| {
        vphi.cones().iter().any(|v| v.contains_cone(s))
            || vphi.cones().iter().all(|v| v.intersect(s).dim() < s.dim())
    });
    out.corollary = inside && aligned;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::polyhedral::ivec;
    use std::collections::BTreeSet;

    fn rays(v: &[&[i64]]) -> BTreeSet<IVec> {
        v.iter().map(|r| ivec(r)).collect()
    }

    #[test]
    fn triangle() {
        let m = builtins::m22();
        let f = jm_fan(&m).unwrap();
        assert_eq!(f.ray_set(), rays(&[&[-2, 1, 1], &[1, -2, 1], &[1, 1, -2]]));
        assert_eq!(f.counts().maximal, 3);
        let w = walls(&m).unwrap();
        assert_eq!(w.len(), 3);
        let neg: BTreeSet<IVec> = w
            .iter()
            .flat_map(|w| w.cone.negate().with_constraints(&[], &[ones(3)]).rays().to_vec())
            .collect();
        assert_eq!(neg, rays(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]));
        assert_eq!(phi_fan(&m).ray_set(), neg);
    }

    #[test]
    fn five_vector_fans() {
        let m = builtins::five_vector();
        let j = jm_fan(&m).unwrap();
        let printed = rays(&[
            &[-4, 1, 1, 1, 1],
            &[-2, -2, 3, -2, 3],
            &[-1, 4, -1, -1, -1],
            &[1, 1, -4, 1, 1],
            &[1, 1, 1, -4, 1],
            &[1, 1, 1, 1, -4],
            &[3, -2, -2, 3, -2],
        ]);
        assert_eq!(j.counts().maximal, 12);
        assert_eq!(j.ray_set(), printed);
        assert!(j.is_complete() && j.intersections_are_faces());
        let p = phi_fan(&m);
        assert_eq!(p.counts().maximal, 8);
        let neg: BTreeSet<IVec> = printed.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        assert_eq!(p.ray_set(), neg);
    }

    #[test]
    fn walls_by_class() {
        let m = builtins::five_vector();
        let w = walls(&m).unwrap();
        let lambda = LambdaSet::new(&m).unwrap();
        let sizes: Vec<usize> = lambda.nontrivial_classes().iter().map(Vec::len).collect();
        assert_eq!(w.len(), sizes.iter().map(|k| k * (k - 1) / 2).sum::<usize>());
        assert!(walls(&Matroid::boolean(4).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn boolean_is_one_cone() {
        let f = jm_fan(&Matroid::boolean(3).unwrap()).unwrap();
        assert_eq!(f.counts().maximal, 1);
        assert_eq!(f.cones()[0].dim(), 2);
        assert!(f.rays().is_empty());
    }

    #[test]
    fn identities() {
        for m in [builtins::m22(), builtins::five_vector(), Matroid::boolean(3).unwrap()] {
            let r = hypersurf_identities(&m).unwrap();
            assert!(r.id1 && r.id2 && r.id3 && r.corollary, "{r:?}");
        }
    }

    #[test]
    fn skeleton_test_rejects_interior_crossings() {
        let quadrants: Vec<RationalCone> = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
            .iter()
            .map(|&(a, b)| RationalCone::new(2, vec![ivec(&[a, 0]), ivec(&[0, b])], vec![]))
            .collect();
        let axis = RationalCone::from_generators(2, vec![ivec(&[1, 0])], vec![]);
        let diagonal = RationalCone::from_generators(2, vec![ivec(&[1, 1])], vec![]);
        assert!(in_codim1_skeleton(&axis, &quadrants));
        assert!(!in_codim1_skeleton(&diagonal, &quadrants));
    }

    #[test]
    fn unnegated_skeleton_is_not_the_hypersurface() {
        // the sign matters: σ itself is not inside V_trop(Φ) for the triangle
        let m = builtins::m22();
        let j = jm_fan(&m).unwrap();
        let v = tropical_hypersurface(&phi(&m), 3);
        let hits = j.codim1_cones().iter().filter(|s| v.cones().iter().any(|c| c.contains_cone(s))).count();
        assert_eq!(hits, 0);
    }
}
