//! Matroids with a materialised family of independent sets.

mod classes;
mod spec;

use std::collections::{BTreeSet, HashSet};

pub use classes::{EquivClass, EquivClasses};
pub use spec::{Label, MatroidSpec};

use crate::error::{guard, Error, Result};
use crate::field::{gf_rank, projective_points, FiniteField, GFMatrix};
use crate::set::{k_subsets, ElemSet, MAX_GROUND};

/// Ground-set size up to which the full independent family may be stored.
pub const MAX_FAMILY_GROUND: usize = 20;
/// Largest projective geometry accepted by [`Matroid::projective_geometry`].
pub const MAX_PG_POINTS: usize = 40;
/// Largest family on which the pairwise exchange axiom is checked.
pub const MAX_AXIOM_FAMILY: usize = 20_000;

#[derive(Clone, Debug)]
pub struct Matroid {
    labels: Vec<String>,
    independents: HashSet<ElemSet>,
    /// `levels[l]` holds the independent sets of size `l` in lexicographic order.
    levels: Vec<Vec<ElemSet>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.levels == other.levels
    }
}

impl Eq for Matroid {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub independent_sets: usize,
    pub empty_set_independent: bool,
    pub downward_closed: bool,
    pub exchange: bool,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.empty_set_independent && self.downward_closed && self.exchange
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        return Err(Error::GuardExceeded(format!("|E| = {n} > {MAX_GROUND}")));
    }
    Ok(())
}

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl Matroid {
    /// Builds the matroid from a family that is known to satisfy the axioms.
    fn from_family(labels: Vec<String>, independents: HashSet<ElemSet>) -> Self {
        let rank = independents.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut levels = vec![Vec::new(); rank + 1];
        for s in &independents {
            levels[s.len()].push(*s);
        }
        for level in levels.iter_mut() {
            level.sort_by(|a, b| a.lex_cmp(*b));
        }
        Matroid { labels, independents, levels }
    }

    fn downward_closure(bases: &[ElemSet]) -> HashSet<ElemSet> {
        let mut fam = HashSet::new();
        for b in bases {
            for s in b.subsets() {
                fam.insert(s);
            }
        }
        fam
    }

    /// The matroid whose bases are `bases`; rejects families violating basis exchange.
    pub fn from_bases(labels: Vec<String>, bases: Vec<ElemSet>) -> Result<Self> {
        let n = labels.len();
        check_ground(n)?;
        guard("|E| for a materialised family", n, MAX_FAMILY_GROUND)?;
        if bases.is_empty() {
            return Err(Error::InvalidInput("the list of bases is empty".into()));
        }
        if let Some(b) = bases.iter().find(|b| !b.is_subset(ElemSet::full(n))) {
            return Err(Error::InvalidInput(format!("basis {b:?} is not inside the ground set")));
        }
        let r = bases[0].len();
        if bases.iter().any(|b| b.len() != r) {
            return Err(Error::InvalidInput("bases have different cardinalities".into()));
        }
        let set: BTreeSet<ElemSet> = bases.iter().copied().collect();
        let names = |s: ElemSet| s.iter().map(|e| labels[e].clone()).collect::<Vec<_>>();
        for &b1 in &set {
            for &b2 in &set {
                for x in (b1 - b2).iter() {
                    let ok = (b2 - b1).iter().any(|y| set.contains(&b1.without(x).with(y)));
                    if !ok {
                        return Err(Error::BasisExchangeViolation {
                            first: names(b1),
                            second: names(b2),
                        });
                    }
                }
            }
        }
        let bases: Vec<ElemSet> = set.into_iter().collect();
        Ok(Self::from_family(labels, Self::downward_closure(&bases)))
    }

    /// Column matroid of a matrix over a finite field.
    pub fn from_gf_matrix(matrix: &GFMatrix, labels: Option<Vec<String>>) -> Result<Self> {
        let n = matrix.ncols();
        check_ground(n)?;
        let labels = labels.unwrap_or_else(|| numbered_labels(n));
        if labels.len() != n {
            return Err(Error::InvalidInput("label count differs from column count".into()));
        }
        let mut fam = HashSet::new();
        fam.insert(ElemSet::EMPTY);
        let mut frontier = vec![ElemSet::EMPTY];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in frontier {
                let start = s.max_elem().map_or(0, |m| m + 1);
                for e in start..n {
                    let t = s.with(e);
                    let cols: Vec<usize> = t.iter().collect();
                    if gf_rank(matrix, &cols)? == t.len() {
                        fam.insert(t);
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        Ok(Self::from_family(labels, fam))
    }

    /// The matroid M(q, n) of the projective space P^{n-1}(GF(q)).
    pub fn projective_geometry(q: u32, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        let field = FiniteField::of_order(q)?;
        let points_count = ((q as u64).pow(n as u32) - 1) / (q as u64 - 1);
        guard("projective points", points_count as usize, MAX_PG_POINTS)?;
        let points = projective_points(&field, n);
        let m = GFMatrix::from_columns(field, &points)?;
        Self::from_gf_matrix(&m, None)
    }

    /// The matroid whose bases are the independent sets of size `i`.
    pub fn truncation(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.rank_total() {
            return Err(Error::IndexOutOfRange { index: i, limit: self.rank_total() });
        }
        let fam = self.independents.iter().copied().filter(|s| s.len() <= i).collect();
        Ok(Self::from_family(self.labels.clone(), fam))
    }

    /// The free matroid on `n` elements.
    pub fn boolean(n: usize) -> Result<Self> {
        check_ground(n)?;
        guard("|E| for a materialised family", n, MAX_FAMILY_GROUND)?;
        let fam = ElemSet::full(n).subsets().collect();
        Ok(Self::from_family(numbered_labels(n), fam))
    }

    /// The uniform matroid U_{r,n}.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidInput(format!("rank {r} exceeds size {n}")));
        }
        check_ground(n)?;
        Self::from_bases(numbered_labels(n), k_subsets(n, r))
    }

    /// Rank-3 matroid of a finite projective plane given by its lines.
    pub fn projective_plane(labels: Vec<String>, lines: &[ElemSet]) -> Result<Self> {
        let n = labels.len();
        check_ground(n)?;
        let name = |e: usize| labels[e].clone();
        for a in 0..n {
            for b in a + 1..n {
                let c = lines.iter().filter(|l| l.contains(a) && l.contains(b)).count();
                if c != 1 {
                    return Err(Error::AxiomViolation(format!(
                        "points {} and {} lie on {c} lines",
                        name(a),
                        name(b)
                    )));
                }
            }
        }
        for (i, l1) in lines.iter().enumerate() {
            for l2 in &lines[i + 1..] {
                let c = (*l1 & *l2).len();
                if c != 1 {
                    return Err(Error::AxiomViolation(format!(
                        "lines {:?} and {:?} meet in {c} points",
                        l1.iter().map(name).collect::<Vec<_>>(),
                        l2.iter().map(name).collect::<Vec<_>>()
                    )));
                }
            }
        }
        let collinear = |s: ElemSet| lines.iter().any(|l| s.is_subset(*l));
        let quad = k_subsets(n, 4).into_iter().any(|s| {
            s.iter().all(|x| !collinear(s.without(x)))
        });
        if !quad {
            return Err(Error::AxiomViolation(
                "no four points with no three collinear (order < 2)".into(),
            ));
        }
        let bases: Vec<ElemSet> = k_subsets(n, 3).into_iter().filter(|s| !collinear(*s)).collect();
        Ok(Self::from_family(labels, Self::downward_closure(&bases)))
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Self> {
        let n1 = self.size();
        let n = n1 + other.size();
        check_ground(n)?;
        let clash = self.labels.iter().any(|l| other.labels.contains(l));
        let labels: Vec<String> = if clash {
            self.labels
                .iter()
                .map(|l| format!("1.{l}"))
                .chain(other.labels.iter().map(|l| format!("2.{l}")))
                .collect()
        } else {
            self.labels.iter().chain(&other.labels).cloned().collect()
        };
        let mut fam = HashSet::new();
        for s1 in &self.independents {
            for s2 in &other.independents {
                fam.insert(ElemSet(s1.0 | s2.0 << n1));
            }
        }
        Ok(Self::from_family(labels, fam))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ground(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    pub fn rank_total(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn is_independent(&self, s: ElemSet) -> bool {
        self.independents.contains(&s)
    }

    pub fn independent_count(&self) -> usize {
        self.independents.len()
    }

    /// Independent sets of size `l`, lexicographically ordered.
    pub fn level(&self, l: usize) -> &[ElemSet] {
        self.levels.get(l).map_or(&[], Vec::as_slice)
    }

    pub fn levels(&self) -> &[Vec<ElemSet>] {
        &self.levels
    }

    pub fn bases(&self) -> &[ElemSet] {
        self.level(self.rank_total())
    }

    /// Independent sets in order of size, then lexicographically.
    pub fn independents(&self) -> impl Iterator<Item = ElemSet> + '_ {
        self.levels.iter().flatten().copied()
    }

    pub fn rank(&self, s: ElemSet) -> usize {
        let mut indep = ElemSet::EMPTY;
        for e in s.iter() {
            let t = indep.with(e);
            if self.is_independent(t) {
                indep = t;
            }
        }
        indep.len()
    }

    pub fn closure(&self, s: ElemSet) -> ElemSet {
        let r = self.rank(s);
        ElemSet::from_elems((0..self.size()).filter(|&y| s.contains(y) || self.rank(s.with(y)) == r))
    }

    pub fn is_flat(&self, s: ElemSet) -> bool {
        self.closure(s) == s
    }

    pub fn loops(&self) -> ElemSet {
        self.closure(ElemSet::EMPTY)
    }

    /// Minimal dependent sets, sorted by size then lexicographically.
    pub fn circuits(&self) -> Vec<ElemSet> {
        let mut out = BTreeSet::new();
        for s in self.independents() {
            let start = s.max_elem().map_or(0, |m| m + 1);
            for e in start..self.size() {
                let c = s.with(e);
                if !self.is_independent(c) && c.iter().all(|x| self.is_independent(c.without(x))) {
                    out.insert(c);
                }
            }
        }
        let mut v: Vec<ElemSet> = out.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        v
    }

    /// Every flat of the matroid (closures of independent sets), sorted by rank
    /// and then lexicographically.
    pub fn flats(&self) -> Vec<ElemSet> {
        let mut seen = BTreeSet::new();
        for s in self.independents() {
            seen.insert((s.len(), self.closure(s)));
        }
        let mut v: Vec<(usize, ElemSet)> = seen.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.lex_cmp(b.1)));
        v.into_iter().map(|(_, f)| f).collect()
    }

    /// Exhaustive check of the three independence axioms.
    pub fn check_axioms(&self) -> Result<AxiomReport> {
        guard("|F| for axiom checks", self.independent_count(), MAX_AXIOM_FAMILY)?;
        let empty = self.is_independent(ElemSet::EMPTY);
        let downward = self
            .independents
            .iter()
            .all(|s| s.iter().all(|x| self.is_independent(s.without(x))));
        // for a downward-closed family it suffices to compare adjacent levels
        let exchange = self.levels.windows(2).all(|w| {
            w[1].iter().all(|x| {
                w[0].iter()
                    .all(|y| (*x - *y).iter().any(|e| self.is_independent(y.with(e))))
            })
        });
        Ok(AxiomReport {
            independent_sets: self.independent_count(),
            empty_set_independent: empty,
            downward_closed: downward,
            exchange,
        })
    }

    /// Renders a subset through the element labels.
    pub fn set_labels(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|e| self.labels[e].clone()).collect()
    }

    /// Canonical JSON echo: ground labels and the list of bases.
    pub fn canonical_spec(&self) -> MatroidSpec {
        MatroidSpec::Bases {
            ground: self.labels.iter().map(|l| Label::from(l.as_str())).collect(),
            bases: self
                .bases()
                .iter()
                .map(|b| b.iter().map(|e| Label::from(self.labels[e].as_str())).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests;
