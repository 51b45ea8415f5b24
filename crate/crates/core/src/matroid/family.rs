use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::{canonical_sort, GroundSet, Subset};

/// The circuits of a simple matroid on `[n]`, validated against the circuit axioms.
///
/// Circuits are stored in canonical (cardinality, lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFamily {
    ground: GroundSet,
    circuits: Vec<Subset>,
    index: HashSet<Subset>,
}

impl CircuitFamily {
    /// Validates `raw` as the circuit set of a simple matroid.
    ///
    /// Duplicates are dropped. The first violated axiom is reported, checked in
    /// the order: containment in the ground set, non-emptiness, simplicity,
    /// antichain, elimination.
    pub fn new(ground: GroundSet, raw: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let mut circuits: Vec<Subset> = raw.into_iter().collect();
        for &c in &circuits {
            ground.check(c)?;
        }
        canonical_sort(&mut circuits);
        for &c in &circuits {
            if c.is_empty() {
                return Err(Error::EmptyCircuit);
            }
            if c.len() <= 2 {
                return Err(Error::NotSimple(c));
            }
        }
        for (i, &a) in circuits.iter().enumerate() {
            // Canonical order puts smaller cardinalities first.
            for &b in &circuits[i + 1..] {
                if a.is_subset(b) {
                    return Err(Error::ComparablePair {
                        smaller: a,
                        larger: b,
                    });
                }
            }
        }
        let index: HashSet<Subset> = circuits.iter().copied().collect();
        let family = CircuitFamily {
            ground,
            circuits,
            index,
        };
        if let Some((c1, c2, element)) = family.elimination_failure() {
            return Err(Error::EliminationFailure { c1, c2, element });
        }
        Ok(family)
    }

    /// Builds a family already known to satisfy the axioms (e.g. produced by a
    /// linear-algebra enumeration). Debug builds still re-check.
    pub(crate) fn from_trusted(ground: GroundSet, mut circuits: Vec<Subset>) -> Self {
        canonical_sort(&mut circuits);
        let index = circuits.iter().copied().collect();
        let family = CircuitFamily {
            ground,
            circuits,
            index,
        };
        debug_assert!(family.elimination_failure().is_none());
        family
    }

    fn elimination_failure(&self) -> Option<(Subset, Subset, usize)> {
        for (i, &c1) in self.circuits.iter().enumerate() {
            for &c2 in &self.circuits[i + 1..] {
                let union = c1 | c2;
                for e in (c1 & c2).iter() {
                    let target = union.remove(e);
                    if !self.contains_circuit(target) {
                        return Some((c1, c2, e));
                    }
                }
            }
        }
        None
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn is_circuit(&self, s: Subset) -> bool {
        self.index.contains(&s)
    }

    /// True when some circuit lies inside `s`, i.e. `s` is dependent.
    pub fn contains_circuit(&self, s: Subset) -> bool {
        self.circuits.iter().any(|c| c.is_subset(s))
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        !self.contains_circuit(s)
    }

    /// Circuits with at most `max_len` elements, in canonical order.
    pub fn circuits_up_to(&self, max_len: usize) -> Vec<Subset> {
        self.circuits
            .iter()
            .copied()
            .filter(|c| c.len() <= max_len)
            .collect()
    }

    pub fn max_circuit_len(&self) -> usize {
        self.circuits.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Circuit counts keyed by cardinality, ascending.
    pub fn counts_by_len(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for c in &self.circuits {
            match out.last_mut() {
                Some((len, count)) if *len == c.len() => *count += 1,
                _ => out.push((c.len(), 1)),
            }
        }
        out
    }

    /// Size of a maximal independent subset of `s`, grown greedily in label order.
    pub fn rank(&self, s: Subset) -> usize {
        let mut basis = Subset::EMPTY;
        for e in s.iter() {
            let grown = basis.insert(e);
            if self.is_independent(grown) {
                basis = grown;
            }
        }
        basis.len()
    }

    pub fn matroid_rank(&self) -> usize {
        self.rank(self.ground.full())
    }

    /// Binarity in the weak form: the symmetric difference of any two distinct
    /// circuits contains a circuit. Returns the first failing pair.
    pub fn binary_witness(&self) -> Option<(Subset, Subset)> {
        for (i, &c1) in self.circuits.iter().enumerate() {
            for &c2 in &self.circuits[i + 1..] {
                if !self.contains_circuit(c1.sym_diff(c2)) {
                    return Some((c1, c2));
                }
            }
        }
        None
    }

    pub fn is_binary(&self) -> BinaryCheck {
        BinaryCheck::from_witness(self.binary_witness())
    }

    /// Binarity in the strong form: the symmetric difference of any two distinct
    /// circuits is a disjoint union of circuits.
    pub fn is_binary_strong(&self) -> BinaryCheck {
        let mut memo = HashMap::new();
        for (i, &c1) in self.circuits.iter().enumerate() {
            for &c2 in &self.circuits[i + 1..] {
                if !self.is_disjoint_union(c1.sym_diff(c2), &mut memo) {
                    return BinaryCheck::from_witness(Some((c1, c2)));
                }
            }
        }
        BinaryCheck::from_witness(None)
    }

    fn is_disjoint_union(&self, s: Subset, memo: &mut HashMap<Subset, bool>) -> bool {
        if s.is_empty() {
            return true;
        }
        if let Some(&v) = memo.get(&s) {
            return v;
        }
        // Some circuit must cover the smallest element of s.
        let first = s.min().unwrap();
        let v = self
            .circuits
            .iter()
            .filter(|c| c.contains(first) && c.is_subset(s))
            .any(|&c| self.is_disjoint_union(s - c, memo));
        memo.insert(s, v);
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryCheck {
    pub binary: bool,
    /// A pair of circuits violating the criterion.
    pub witness: Option<(Subset, Subset)>,
}

impl BinaryCheck {
    fn from_witness(witness: Option<(Subset, Subset)>) -> Self {
        BinaryCheck {
            binary: witness.is_none(),
            witness,
        }
    }
}
