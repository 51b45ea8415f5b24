//! Subsets of a small ground set `[n]` packed into a machine word.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ground set a [`Subset`] word can address.
pub const MAX_GROUND: usize = 30;

/// Default cap on the ground-set size. Powerset bitmaps at this size take 2 MiB.
pub const DEFAULT_CAP: usize = 24;

/// The ground set `[n] = {1, ..., n}` together with the size cap it was validated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    /// Ground set of size `n` checked against [`DEFAULT_CAP`].
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let cap = cap.min(MAX_GROUND);
        if n > cap {
            return Err(Error::GroundSetTooLarge { n, cap });
        }
        Ok(GroundSet { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn contains(&self, s: Subset) -> bool {
        s.0 & !self.full().0 == 0
    }

    /// Number of subsets of the ground set.
    pub fn powerset_len(&self) -> usize {
        1usize << self.n
    }

    pub(crate) fn check(&self, s: Subset) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::OutOfGround { subset: s, n: self.n })
        }
    }
}

/// A subset of `[n]`; element `i` is present iff bit `i - 1` is set.
///
/// Iteration yields labels in strictly increasing order, which the sign
/// conventions of the exterior algebra rely on.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(label: usize) -> Subset {
        debug_assert!((1..=MAX_GROUND).contains(&label));
        Subset(1 << (label - 1))
    }

    /// Builds a subset from 1-based labels. Panics on label 0 or labels past [`MAX_GROUND`].
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Subset {
        labels
            .into_iter()
            .fold(Subset::EMPTY, |acc, l| acc | Subset::singleton(l))
    }

    /// Checked variant of [`Subset::from_labels`].
    pub fn try_from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            if l == 0 || l > MAX_GROUND {
                return Err(Error::BadLabel(l));
            }
            s = s | Subset::singleton(l);
        }
        Ok(s)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=32).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn insert(self, label: usize) -> Subset {
        self | Subset::singleton(label)
    }

    pub fn remove(self, label: usize) -> Subset {
        Subset(self.0 & !Subset::singleton(label).0)
    }

    pub fn sym_diff(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    /// Smallest label, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The only element of a singleton.
    pub fn as_singleton(self) -> Option<usize> {
        (self.len() == 1).then(|| self.min().unwrap())
    }

    /// Lexicographic comparison of the increasing label sequences.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        // Both sequences agree below `low`. Whoever holds `low` is smaller,
        // unless the other sequence has already run out.
        let above = !(low | (low - 1));
        if self.0 & low != 0 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Canonical order for reports: cardinality first, then lexicographic.
    pub fn canonical_cmp(self, other: Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(other))
    }

    /// All subsets of `self`, in increasing numeric order of their bit patterns.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Writes the labels without separators when every label is a single digit
    /// and comma-separated otherwise.
    pub fn compact(self) -> String {
        let labels = self.labels();
        if labels.iter().all(|&l| l < 10) {
            labels.iter().map(|l| l.to_string()).collect()
        } else {
            labels
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

/// Sorts subsets into the canonical (cardinality, lexicographic) order and drops duplicates.
pub fn canonical_sort(sets: &mut Vec<Subset>) {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.dedup();
}

impl std::ops::BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl std::ops::Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.compact())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl From<Subset> for Vec<usize> {
    fn from(s: Subset) -> Vec<usize> {
        s.labels()
    }
}

impl TryFrom<Vec<usize>> for Subset {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Subset> {
        Subset::try_from_labels(v)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        Subset::from_labels(iter)
    }
}

/// Increasing iterator over the labels of a subset.
#[derive(Clone)]
pub struct Labels(u32);

impl Iterator for Labels {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

/// Iterator over all subsets of a mask.
pub struct SubsetsOf {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// All `k`-element subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Subset::EMPTY);
        return out;
    }
    // Gosper's hack walks k-subsets in increasing numeric order; sort to lex after.
    let limit = 1u64 << n;
    let mut x: u64 = (1u64 << k) - 1;
    while x < limit {
        out.push(Subset(x as u32));
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}
