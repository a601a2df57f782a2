//! Gröbner fan enumeration by walking across facets.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::initial::{groebner_cone, marked_basis};
use super::lambda::LambdaSet;
use super::order::{MonomialOrder, Tiebreak};
use crate::error::{guard, Error, Result};
use crate::poly::{Monomial, Poly};
use crate::polyhedral::{Fan, IVec, RationalCone};

/// Largest number of variables traversed without an explicit opt-in.
pub const TRAVERSAL_VAR_LIMIT: usize = 5;

/// A maximal Gröbner cone together with a key identifying its initial ideal.
#[derive(Clone, Debug)]
pub struct Cell {
    pub key: Vec<Monomial>,
    pub cone: RationalCone,
}

/// Returns the Gröbner cone containing a weight; `Err(TiedWeight)` is allowed
/// when the weight lies on a wall and the oracle cannot break ties.
pub trait CellOracle {
    fn nvars(&self) -> usize;
    fn cell(&self, w: &[BigInt]) -> Result<Cell>;
}

/// General ideals, through reduced Gröbner bases.
pub struct BuchbergerOracle {
    n: usize,
    gens: Vec<Poly>,
}

impl BuchbergerOracle {
    pub fn new(n: usize, gens: Vec<Poly>) -> Self {
        BuchbergerOracle { n, gens }
    }
}

impl CellOracle for BuchbergerOracle {
    fn nvars(&self) -> usize {
        self.n
    }

    fn cell(&self, w: &[BigInt]) -> Result<Cell> {
        let order = MonomialOrder::weighted_int(w, Tiebreak::GRevLex)?;
        let marked = marked_basis(&self.gens, &order);
        let mut key: Vec<Monomial> = marked.iter().map(|g| g.lead.clone()).collect();
        key.sort();
        Ok(Cell { key, cone: groebner_cone(&marked, self.n) })
    }
}

/// `J_M` through the class minima of Λ1, without any Gröbner basis computation.
pub struct LambdaOracle<'a> {
    lambda: &'a LambdaSet,
}

impl<'a> LambdaOracle<'a> {
    pub fn new(lambda: &'a LambdaSet) -> Self {
        LambdaOracle { lambda }
    }
}

impl CellOracle for LambdaOracle<'_> {
    fn nvars(&self) -> usize {
        self.lambda.nvars()
    }

    fn cell(&self, w: &[BigInt]) -> Result<Cell> {
        let minima = self.lambda.class_minima(w)?;
        let cone = RationalCone::new(self.lambda.nvars(), self.lambda.cone_inequalities(&minima), vec![]);
        Ok(Cell { key: minima.into_iter().map(Monomial::from_set).collect(), cone })
    }
}

#[derive(Clone, Debug)]
pub struct Traversal {
    pub cells: Vec<Cell>,
    pub oracle_calls: usize,
}

impl Traversal {
    /// The fan of the visited cones, restricted to `H = {Σx = 0}`.
    pub fn fan(&self) -> Fan {
        let n = self.cells.first().map_or(0, |c| c.cone.ambient_dim());
        Fan::from_cones(n, self.cells.iter().map(|c| c.cone.clone()).collect(), true)
    }
}

fn scaled_step(p: &[BigInt], a: &[BigInt], k: u32) -> IVec {
    let s = BigInt::one() << k;
    p.iter().zip(a).map(|(x, y)| x * &s - y).collect()
}

fn neg(v: &[BigInt]) -> IVec {
    v.iter().map(|x| -x).collect()
}

fn in_range(v: &[BigInt]) -> bool {
    let lim = BigInt::from(i64::MAX / 64);
    v.iter().all(|x| x.magnitude() < lim.magnitude())
}

/// Enumerates every maximal cone reachable from a random generic weight.
/// More than [`TRAVERSAL_VAR_LIMIT`] variables needs `allow_big`.
pub fn traverse(oracle: &dyn CellOracle, seed: u64, allow_big: bool) -> Result<Traversal> {
    let n = oracle.nvars();
    if !allow_big {
        guard("variables in fan traversal", n, TRAVERSAL_VAR_LIMIT)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut calls = 0usize;
    let start = loop {
        let w: IVec = (0..n).map(|_| BigInt::from(rng.gen_range(-1000i64..=1000))).collect();
        calls += 1;
        match oracle.cell(&w) {
            Ok(c) if c.cone.dim() == n && c.cone.contains_in_relative_interior(&w) => break c,
            Ok(_) | Err(Error::TiedWeight) => continue,
            Err(e) => return Err(e),
        }
    };
    let mut seen: BTreeMap<Vec<Monomial>, usize> = BTreeMap::new();
    seen.insert(start.key.clone(), 0);
    let mut cells = vec![start];
    let mut next = 0;
    while next < cells.len() {
        let facets = cells[next].cone.facets();
        for f in facets {
            let back = neg(&f.normal);
            let mut k = 20u32;
            let neighbour = loop {
                let w = scaled_step(&f.interior, &f.normal, k);
                if !in_range(&w) {
                    return Err(Error::Consistency(format!("no neighbour found across facet {:?}", f.normal)));
                }
                calls += 1;
                match oracle.cell(&w) {
                    Ok(c)
                        if c.cone.contains_point(&f.interior)
                            && c.cone.facets().iter().any(|g| g.normal == back) =>
                    {
                        break c
                    }
                    Ok(_) | Err(Error::TiedWeight) => k += 4,
                    Err(e) => return Err(e),
                }
            };
            if !seen.contains_key(&neighbour.key) {
                seen.insert(neighbour.key.clone(), cells.len());
                cells.push(neighbour);
            }
        }
        next += 1;
    }
    Ok(Traversal { cells, oracle_calls: calls })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::poly::parse_poly;
    use crate::polyhedral::FanCounts;

    #[test]
    fn principal_ideal_fan() {
        // the Gröbner fan of a principal ideal is the normal fan of its Newton polytope
        let f = parse_poly("x1^2 + x2^2 + x1*x2").unwrap();
        let t = traverse(&BuchbergerOracle::new(2, vec![f]), 1, false).unwrap();
        assert_eq!(t.cells.len(), 2);
        let g = parse_poly("x1^2*x3 + x2^3 + x3^3 + x1*x2*x3").unwrap();
        let t = traverse(&BuchbergerOracle::new(3, vec![g]), 1, false).unwrap();
        assert_eq!(t.cells.len(), 3);
        assert!(t.fan().is_complete());
    }

    #[test]
    fn lambda_and_buchberger_agree() {
        let m = builtins::m22();
        let l = LambdaSet::new(&m).unwrap();
        let a = traverse(&LambdaOracle::new(&l), 3, false).unwrap().fan();
        let b = traverse(&BuchbergerOracle::new(3, l.generators()), 5, false).unwrap().fan();
        assert_eq!(a.ray_set(), b.ray_set());
        assert_eq!(a.counts(), b.counts());
        assert_eq!(a.counts(), FanCounts { rays: 3, maximal: 3 });
    }

    #[test]
    fn five_vector_fan() {
        let l = LambdaSet::new(&builtins::five_vector()).unwrap();
        let t = traverse(&LambdaOracle::new(&l), 11, false).unwrap();
        let fan = t.fan();
        assert_eq!(fan.counts(), FanCounts { rays: 7, maximal: 12 });
        assert!(fan.is_complete());
    }

    #[test]
    fn guard_on_variables() {
        let l = LambdaSet::new(&crate::Matroid::boolean(6).unwrap()).unwrap();
        assert!(matches!(traverse(&LambdaOracle::new(&l), 0, false), Err(Error::GuardExceeded(_))));
    }
}
