//! Finite ranked posets: transitive closure, Dilworth's theorem through
//! bipartite matching, and the Sperner property.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::polyhedral::Bits;

/// Largest poset handled by [`RankedPoset::max_antichain`] without an override.
pub const ANTICHAIN_LIMIT: usize = 5000;

/// A finite poset with a rank function, given by its cover relations.
#[derive(Clone, Debug)]
pub struct RankedPoset {
    rank: Vec<usize>,
    /// `up[i]`: elements covering `i`.
    up: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Antichain {
    pub size: usize,
    /// Element indices, pairwise incomparable.
    pub witness: Vec<usize>,
    /// Size of the minimum chain cover found alongside.
    pub chain_cover: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpernerCheck {
    pub sperner: bool,
    pub max_level: usize,
    pub max_antichain: usize,
}

impl RankedPoset {
    /// Validates that every cover raises the rank by exactly one.
    pub fn new(rank: Vec<usize>, up: Vec<Vec<usize>>) -> Result<Self> {
        if rank.len() != up.len() {
            return Err(Error::InvalidInput("rank and cover lists differ in length".into()));
        }
        for (i, us) in up.iter().enumerate() {
            for &j in us {
                if j >= rank.len() || rank[j] != rank[i] + 1 {
                    return Err(Error::InvalidInput(format!("cover {i} < {j} does not raise the rank by one")));
                }
            }
        }
        Ok(RankedPoset { rank, up })
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        RankedPoset { rank: (0..n).collect(), up: (0..n).map(|i| if i + 1 < n { vec![i + 1] } else { vec![] }).collect() }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        let top = self.rank.iter().copied().max().map_or(0, |r| r + 1);
        let mut sizes = vec![0; top];
        for &r in &self.rank {
            sizes[r] += 1;
        }
        sizes
    }

    /// Strict order relation: row `i` holds every `j > i`, computed by
    /// squaring the cover relation until it stabilises.
    pub fn strictly_above(&self) -> Vec<Bits> {
        let n = self.len();
        let mut rel: Vec<Bits> = self
            .up
            .iter()
            .map(|us| {
                let mut b = Bits::with_capacity(n);
                for &j in us {
                    b.insert(j);
                }
                b
            })
            .collect();
        loop {
            let mut changed = false;
            let snapshot = rel.clone();
            for row in rel.iter_mut() {
                let mut add = Bits::with_capacity(n);
                for j in row.iter() {
                    add.union_with(&snapshot[j]);
                }
                changed |= row.union_with(&add);
            }
            if !changed {
                return rel;
            }
        }
    }

    /// Maximum antichain by Dilworth's theorem: a maximum matching in the
    /// comparability graph gives a minimum chain cover, and König's theorem
    /// turns it into an antichain of the same size.
    pub fn max_antichain(&self) -> Result<Antichain> {
        let n = self.len();
        guard("poset elements", n, ANTICHAIN_LIMIT)?;
        let above = self.strictly_above();
        let adj: Vec<Vec<usize>> = above.iter().map(|b| b.iter().collect()).collect();
        let (match_l, match_r) = hopcroft_karp(n, n, &adj);
        let matched = match_l.iter().filter(|m| m.is_some()).count();
        // alternating reachability from unmatched left vertices
        let mut z_left = vec![false; n];
        let mut z_right = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| match_l[i].is_none()).collect();
        for &i in &queue {
            z_left[i] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !z_right[v] && match_l[u] != Some(v) {
                    z_right[v] = true;
                    if let Some(w) = match_r[v] {
                        if !z_left[w] {
                            z_left[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        let witness: Vec<usize> = (0..n).filter(|&x| z_left[x] && !z_right[x]).collect();
        let size = n - matched;
        if witness.len() != size {
            return Err(Error::Consistency(format!("antichain of size {} against chain cover {size}", witness.len())));
        }
        Ok(Antichain { size, witness, chain_cover: size })
    }

    pub fn is_antichain(&self, elems: &[usize]) -> bool {
        let above = self.strictly_above();
        elems.iter().all(|&a| elems.iter().all(|&b| !above[a].contains(b)))
    }

    pub fn sperner_check(&self) -> Result<SpernerCheck> {
        let max_level = self.level_sizes().into_iter().max().unwrap_or(0);
        let a = self.max_antichain()?;
        Ok(SpernerCheck { sperner: a.size == max_level, max_level, max_antichain: a.size })
    }
}

/// Maximum bipartite matching; returns the partner of each left and right vertex.
fn hopcroft_karp(nl: usize, nr: usize, adj: &[Vec<usize>]) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    const INF: usize = usize::MAX;
    let mut ml: Vec<Option<usize>> = vec![None; nl];
    let mut mr: Vec<Option<usize>> = vec![None; nr];
    let mut dist = vec![INF; nl];
    loop {
        // layered BFS from free left vertices
        let mut q = VecDeque::new();
        for u in 0..nl {
            if ml[u].is_none() {
                dist[u] = 0;
                q.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                match mr[v] {
                    None => found = true,
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        q.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return (ml, mr);
        }
        fn augment(u: usize, adj: &[Vec<usize>], ml: &mut [Option<usize>], mr: &mut [Option<usize>], dist: &mut [usize]) -> bool {
            for &v in &adj[u] {
                let ok = match mr[v] {
                    None => true,
                    Some(w) => dist[w] == dist[u] + 1 && augment(w, adj, ml, mr, dist),
                };
                if ok {
                    ml[u] = Some(v);
                    mr[v] = Some(u);
                    return true;
                }
            }
            dist[u] = usize::MAX;
            false
        }
        for u in 0..nl {
            if ml[u].is_none() {
                augment(u, adj, &mut ml, &mut mr, &mut dist);
            }
        }
    }
}
