use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use super::cone::{Generators, IVec, RationalCone};

/// The all-ones vector `n`.
pub fn ones(n: usize) -> IVec {
    vec![BigInt::from(1); n]
}

/// A fan given by its maximal cones.
#[derive(Clone, Debug)]
pub struct Fan {
    n: usize,
    in_h: bool,
    rays: Vec<IVec>,
    lineality: Vec<IVec>,
    maximal: Vec<Vec<usize>>,
    cones: Vec<RationalCone>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanCounts {
    pub rays: usize,
    pub maximal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanJson {
    pub ambient: String,
    pub rays: Vec<Vec<i64>>,
    pub maximal_cones: Vec<Vec<usize>>,
    pub counts: FanCounts,
}

fn small(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("ray entry fits in i64")).collect()
}

impl Fan {
    /// Builds a fan from its maximal cones in `R^n`; with `in_h` every cone is
    /// first intersected with `H = {Σx = 0}`. Duplicate cones are merged.
    pub fn from_cones(n: usize, cones: Vec<RationalCone>, in_h: bool) -> Fan {
        let h = vec![ones(n)];
        let mut by_gens: BTreeMap<Generators, RationalCone> = BTreeMap::new();
        for c in cones {
            let c = if in_h { c.with_constraints(&[], &h) } else { c };
            by_gens.entry(c.generators().clone()).or_insert(c);
        }
        let mut ray_set: BTreeSet<IVec> = BTreeSet::new();
        for g in by_gens.keys() {
            ray_set.extend(g.rays.iter().cloned());
        }
        let rays: Vec<IVec> = ray_set.into_iter().collect();
        let index: BTreeMap<&IVec, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut entries: Vec<(Vec<usize>, RationalCone)> = by_gens
            .into_iter()
            .map(|(g, c)| {
                let mut ids: Vec<usize> = g.rays.iter().map(|r| index[r]).collect();
                ids.sort_unstable();
                (ids, c)
            })
            .collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let lineality = entries.first().map_or_else(Vec::new, |(_, c)| c.lineality().to_vec());
        let (maximal, cones) = entries.into_iter().unzip();
        Fan { n, in_h, rays, lineality, maximal, cones }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn in_h(&self) -> bool {
        self.in_h
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    pub fn ray_set(&self) -> BTreeSet<IVec> {
        self.rays.iter().cloned().collect()
    }

    pub fn lineality(&self) -> &[IVec] {
        &self.lineality
    }

    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    pub fn cones(&self) -> &[RationalCone] {
        &self.cones
    }

    pub fn counts(&self) -> FanCounts {
        FanCounts { rays: self.rays.len(), maximal: self.maximal.len() }
    }

    pub fn to_json(&self) -> FanJson {
        FanJson {
            ambient: if self.in_h { "H".into() } else { "R^E".into() },
            rays: self.rays.iter().map(|r| small(r)).collect(),
            maximal_cones: self.maximal.clone(),
            counts: self.counts(),
        }
    }

    /// The fan `{-σ}`.
    pub fn negate(&self) -> Fan {
        Fan::from_cones(self.n, self.cones.iter().map(RationalCone::negate).collect(), self.in_h)
    }

    /// Codimension-one cones (relative to the maximal cones' dimension),
    /// deduplicated.
    pub fn codim1_cones(&self) -> Vec<RationalCone> {
        let mut out: BTreeMap<Generators, RationalCone> = BTreeMap::new();
        for c in &self.cones {
            for f in c.facets() {
                let fc = c.facet_cone(&f);
                out.entry(fc.generators().clone()).or_insert(fc);
            }
        }
        out.into_values().collect()
    }

    /// Rays of the fan as one-dimensional cones, i.e. the rays themselves
    /// (meaningful when the lineality space is trivial).
    pub fn one_dim_skeleton(&self) -> BTreeSet<IVec> {
        self.ray_set()
    }

    /// Pairwise intersections of maximal cones are faces of both.
    pub fn intersections_are_faces(&self) -> bool {
        for i in 0..self.cones.len() {
            for j in i + 1..self.cones.len() {
                let k = self.cones[i].intersect(&self.cones[j]);
                if !self.cones[i].has_face(&k) || !self.cones[j].has_face(&k) {
                    return false;
                }
            }
        }
        true
    }

    /// Maximal cones have pairwise disjoint interiors and every facet is
    /// shared by exactly two of them; together with purity this certifies
    /// that the fan covers its ambient space.
    pub fn is_complete(&self) -> bool {
        let full = self.cones.first().map_or(0, RationalCone::dim);
        if self.cones.iter().any(|c| c.dim() != full) {
            return false;
        }
        for i in 0..self.cones.len() {
            for j in i + 1..self.cones.len() {
                if self.cones[i].intersect(&self.cones[j]).dim() == full {
                    return false;
                }
            }
        }
        let mut facet_count: BTreeMap<Generators, usize> = BTreeMap::new();
        for c in &self.cones {
            for f in c.facets() {
                *facet_count.entry(c.facet_cone(&f).generators().clone()).or_default() += 1;
            }
        }
        facet_count.values().all(|&k| k == 2)
    }

    /// Every maximal cone of `self` lies inside some maximal cone of `coarser`.
    pub fn refines(&self, coarser: &Fan) -> bool {
        self.cones.iter().all(|c| coarser.cones.iter().any(|d| d.contains_cone(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::cone::ivec;

    fn quadrants() -> Vec<RationalCone> {
        let mut v = Vec::new();
        for sx in [1, -1] {
            for sy in [1, -1] {
                v.push(RationalCone::new(2, vec![ivec(&[sx, 0]), ivec(&[0, sy])], vec![]));
            }
        }
        v
    }

    #[test]
    fn quadrant_fan() {
        let f = Fan::from_cones(2, quadrants(), false);
        assert_eq!(f.counts(), FanCounts { rays: 4, maximal: 4 });
        assert!(f.intersections_are_faces());
        assert!(f.is_complete());
        assert_eq!(f.codim1_cones().len(), 4);
        let mut three = quadrants();
        three.pop();
        assert!(!Fan::from_cones(2, three, false).is_complete());
    }

    #[test]
    fn restriction_to_h() {
        // three cones, one per coordinate being the smallest
        let cones: Vec<RationalCone> = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
            .iter()
            .map(|p| {
                // x_{p0} is the smallest coordinate
                RationalCone::new(
                    3,
                    vec![
                        {
                            let mut a = vec![0i64; 3];
                            a[p[1]] = 1;
                            a[p[0]] = -1;
                            ivec(&a)
                        },
                        {
                            let mut a = vec![0i64; 3];
                            a[p[2]] = 1;
                            a[p[0]] = -1;
                            ivec(&a)
                        },
                    ],
                    vec![],
                )
            })
            .collect();
        let f = Fan::from_cones(3, cones, true);
        assert_eq!(f.counts(), FanCounts { rays: 3, maximal: 3 });
        assert!(f.ray_set().contains(&ivec(&[-1, -1, 2])));
        assert!(f.is_complete());
        let json = serde_json::to_string(&f.to_json()).unwrap();
        assert!(json.starts_with(r#"{"ambient":"H","rays":"#));
        assert_eq!(f.negate().counts().maximal, 3);
    }

    #[test]
    fn refinement() {
        let fine = Fan::from_cones(2, quadrants(), false);
        let coarse = Fan::from_cones(
            2,
            vec![RationalCone::new(2, vec![ivec(&[0, 1])], vec![]), RationalCone::new(2, vec![ivec(&[0, -1])], vec![])],
            false,
        );
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
    }
}
