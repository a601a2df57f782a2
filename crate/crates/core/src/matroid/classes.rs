use std::collections::{BTreeMap, HashMap};

use super::Matroid;
use crate::error::{Error, Result};
use crate::set::ElemSet;

/// Ground-set size up to which the complementary-set characterisation of
/// equivalence is verified during [`Matroid::equivalence_classes`].
pub const LEMMA_CHECK_GROUND: usize = 10;

/// Independent sets sharing one closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass {
    pub level: usize,
    pub flat: ElemSet,
    /// Lexicographically sorted; the first member is the representative.
    pub members: Vec<ElemSet>,
}

impl EquivClass {
    pub fn representative(&self) -> ElemSet {
        self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClasses {
    /// `levels[l]` lists the classes of independent sets of size `l`,
    /// ordered by representative.
    pub levels: Vec<Vec<EquivClass>>,
    index: HashMap<ElemSet, (usize, usize)>,
}

impl EquivClasses {
    /// The numbers m_l of classes per level.
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Flats of rank `l`.
    pub fn flats(&self, l: usize) -> Vec<ElemSet> {
        self.levels.get(l).map_or_else(Vec::new, |v| v.iter().map(|c| c.flat).collect())
    }

    /// Position `(level, index)` of the class containing the independent set `s`.
    pub fn locate(&self, s: ElemSet) -> Option<(usize, usize)> {
        self.index.get(&s).copied()
    }

    pub fn class(&self, level: usize, idx: usize) -> &EquivClass {
        &self.levels[level][idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = &EquivClass> {
        self.levels.iter().flatten()
    }

    pub fn total_members(&self) -> usize {
        self.iter().map(EquivClass::len).sum()
    }
}

impl Matroid {
    /// Groups independent sets by closure. For ground sets of at most
    /// [`LEMMA_CHECK_GROUND`] elements the grouping is cross-checked against the
    /// complementary-set characterisation.
    pub fn equivalence_classes(&self) -> Result<EquivClasses> {
        let mut levels = Vec::with_capacity(self.rank_total() + 1);
        let mut index = HashMap::new();
        for (l, sets) in self.levels().iter().enumerate() {
            let mut by_flat: BTreeMap<ElemSet, Vec<ElemSet>> = BTreeMap::new();
            for &s in sets {
                by_flat.entry(self.closure(s)).or_default().push(s);
            }
            // members are already lex-sorted because the level is
            let mut classes: Vec<EquivClass> = by_flat
                .into_iter()
                .map(|(flat, members)| EquivClass { level: l, flat, members })
                .collect();
            classes.sort_by(|a, b| a.representative().lex_cmp(b.representative()));
            for (i, c) in classes.iter().enumerate() {
                for &m in &c.members {
                    index.insert(m, (l, i));
                }
            }
            levels.push(classes);
        }
        let classes = EquivClasses { levels, index };
        if self.size() <= LEMMA_CHECK_GROUND && !self.complement_characterisation_holds(&classes) {
            return Err(Error::Consistency(
                "closure classes differ from complementary-set classes".into(),
            ));
        }
        Ok(classes)
    }

    /// `{U in F : U ∩ S = ∅, U ∪ S in F}` as a sorted list.
    pub fn extensions(&self, s: ElemSet) -> Vec<ElemSet> {
        let mut v: Vec<ElemSet> = self
            .independents()
            .filter(|u| u.is_disjoint(s) && self.is_independent(*u | s))
            .collect();
        v.sort();
        v
    }

    /// Whether `σ(S) = σ(T) ⇔ extensions(S) = extensions(T)` for all
    /// independent `S, T`.
    pub fn complement_characterisation_holds(&self, classes: &EquivClasses) -> bool {
        let mut by_ext: HashMap<Vec<ElemSet>, (usize, usize)> = HashMap::new();
        let mut ext_of_class: HashMap<(usize, usize), Vec<ElemSet>> = HashMap::new();
        for s in self.independents() {
            let ext = self.extensions(s);
            let cls = classes.locate(s).expect("every independent set has a class");
            match by_ext.get(&ext) {
                Some(&c) if c != cls => return false,
                Some(_) => {}
                None => {
                    by_ext.insert(ext.clone(), cls);
                }
            }
            match ext_of_class.get(&cls) {
                Some(e) if *e != ext => return false,
                Some(_) => {}
                None => {
                    ext_of_class.insert(cls, ext);
                }
            }
        }
        true
    }
}
