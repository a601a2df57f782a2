//! Subsets of a ground set `{0, .., n-1}` with `n <= 64`, stored as bitmasks.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Hard cap on the ground-set size.
pub const MAX_GROUND: usize = 40;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(e: usize) -> Self {
        ElemSet(1u64 << e)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems.into_iter().fold(ElemSet::EMPTY, |s, e| s.with(e))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        ElemSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElemSet(self.0 & !(1u64 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn max_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// All subsets of `self`, in increasing numeric order of the mask.
    pub fn subsets(self) -> impl Iterator<Item = ElemSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(ElemSet(cur))
        })
    }

    /// Lexicographic comparison of the sorted element lists.
    pub fn lex_cmp(self, other: ElemSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & rhs.0)
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// All `k`-subsets of `{0..n-1}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<ElemSet> {
    fn rec(start: usize, n: usize, k: usize, cur: ElemSet, out: &mut Vec<ElemSet>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for e in start..=n.saturating_sub(k) {
            if n - e < k {
                break;
            }
            rec(e + 1, n, k - 1, cur.with(e), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, ElemSet::EMPTY, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s = ElemSet::from_elems([0, 2, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(ElemSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn k_subsets_are_lex_sorted() {
        let v = k_subsets(5, 3);
        assert_eq!(v.len(), 10);
        for w in v.windows(2) {
            assert_eq!(w[0].lex_cmp(w[1]), Ordering::Less);
        }
        assert_eq!(k_subsets(3, 0), vec![ElemSet::EMPTY]);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn lex_order_is_not_numeric_order() {
        let a = ElemSet::from_elems([0, 3]);
        let b = ElemSet::from_elems([1, 2]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert!(a > b);
    }
}
