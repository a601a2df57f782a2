//! The lattice of flats `L(M)`.

use std::collections::HashMap;

use serde::Serialize;

use super::poset::{Antichain, RankedPoset, SpernerCheck};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElemSet;

#[derive(Clone, Debug)]
pub struct FlatLattice {
    matroid: Matroid,
    /// Flats sorted by rank, then lexicographically.
    flats: Vec<ElemSet>,
    rank: Vec<usize>,
    levels: Vec<Vec<usize>>,
    index: HashMap<ElemSet, usize>,
    poset: RankedPoset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePredicates {
    pub graded: bool,
    pub atomic: bool,
    pub semimodular: bool,
    pub modular: bool,
    pub geometric: bool,
    pub n_atoms: usize,
    pub n_coatoms: usize,
    /// A pair of flats (as 1-based element lists) violating modularity.
    pub modularity_witness: Option<(Vec<usize>, Vec<usize>)>,
}

fn one_based(s: ElemSet) -> Vec<usize> {
    s.iter().map(|e| e + 1).collect()
}

impl FlatLattice {
    pub fn new(m: &Matroid) -> Result<Self> {
        let flats = m.flats();
        let rank: Vec<usize> = flats.iter().map(|f| m.rank(*f)).collect();
        let index: HashMap<ElemSet, usize> = flats.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut levels = vec![Vec::new(); m.rank_total() + 1];
        for (i, &r) in rank.iter().enumerate() {
            levels[r].push(i);
        }
        // F < G is a cover iff G = σ(F ∪ e) for some e ∉ F
        let up: Vec<Vec<usize>> = flats
            .iter()
            .map(|&f| {
                let mut us: Vec<usize> = (0..m.size())
                    .filter(|&e| !f.contains(e))
                    .map(|e| index[&m.closure(f.with(e))])
                    .collect();
                us.sort_unstable();
                us.dedup();
                us
            })
            .collect();
        let poset = RankedPoset::new(rank.clone(), up)
            .map_err(|e| Error::Consistency(format!("lattice of flats is not graded: {e}")))?;
        Ok(FlatLattice { matroid: m.clone(), flats, rank, levels, index, poset })
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[ElemSet] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> ElemSet {
        self.flats[i]
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn index_of(&self, f: ElemSet) -> Option<usize> {
        self.index.get(&f).copied()
    }

    /// Flat indices of rank `r`.
    pub fn level(&self, r: usize) -> &[usize] {
        self.levels.get(r).map_or(&[], Vec::as_slice)
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn covers(&self, i: usize) -> &[usize] {
        self.poset.covers(i)
    }

    pub fn poset(&self) -> &RankedPoset {
        &self.poset
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&(self.flats[a] & self.flats[b])]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.index[&self.matroid.closure(self.flats[a] | self.flats[b])]
    }

    pub fn atoms(&self) -> &[usize] {
        self.level(1)
    }

    pub fn coatoms(&self) -> &[usize] {
        let r = self.levels.len().saturating_sub(1);
        if r == 0 {
            &[]
        } else {
            self.level(r - 1)
        }
    }

    /// Exhaustive lattice predicates, with Greene's atom–coatom count checked
    /// against modularity on geometric lattices.
    pub fn predicates(&self) -> Result<LatticePredicates> {
        let n = self.len();
        let graded = (0..n).all(|i| self.covers(i).iter().all(|&j| self.rank[j] == self.rank[i] + 1));
        let atomic = (0..n).all(|i| {
            let below: ElemSet = self
                .atoms()
                .iter()
                .filter(|&&a| self.flats[a].is_subset(self.flats[i]))
                .fold(self.flats[self.level(0)[0]], |acc, &a| acc | self.flats[a]);
            self.matroid.closure(below) == self.flats[i]
        });
        let mut semimodular = true;
        let mut witness = None;
        for a in 0..n {
            for b in a + 1..n {
                let lhs = self.rank[a] + self.rank[b];
                let rhs = self.rank[self.meet(a, b)] + self.rank[self.join(a, b)];
                semimodular &= lhs >= rhs;
                if lhs != rhs && witness.is_none() {
                    witness = Some((one_based(self.flats[a]), one_based(self.flats[b])));
                }
            }
        }
        let modular = witness.is_none();
        let geometric = atomic && semimodular;
        let (n_atoms, n_coatoms) = (self.atoms().len(), self.coatoms().len());
        if geometric && modular != (n_atoms == n_coatoms) {
            return Err(Error::Consistency(format!(
                "modular = {modular} but {n_atoms} atoms and {n_coatoms} coatoms in a geometric lattice"
            )));
        }
        Ok(LatticePredicates { graded, atomic, semimodular, modular, geometric, n_atoms, n_coatoms, modularity_witness: witness })
    }

    pub fn max_antichain(&self) -> Result<Antichain> {
        self.poset.max_antichain()
    }

    pub fn sperner_check(&self) -> Result<SpernerCheck> {
        self.poset.sperner_check()
    }
}
