//! Δ- and Δ′-closures of set families, materialized over the full powerset.
//!
//! Both operators produce up-closed systems. The Δ rule joins two members of
//! size at least two that meet in a single element into their symmetric
//! difference. The Δ′ rule adds `X \ a` (for `a ∈ X`, `|X| >= 2`) once every
//! other `X \ b` is a member.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::CircuitFamily;
use crate::subset::{canonical_sort, GroundSet, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureOperator {
    Delta,
    DeltaPrime,
}

/// Membership bitmap over all `2^n` subsets of the ground set.
#[derive(Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground: GroundSet,
    words: Vec<u64>,
}

impl SetSystem {
    pub fn empty(ground: GroundSet) -> Self {
        let len = ground.powerset_len().div_ceil(64);
        SetSystem {
            ground,
            words: vec![0; len],
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn contains(&self, s: Subset) -> bool {
        let i = s.bits() as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn insert(&mut self, s: Subset) -> bool {
        let i = s.bits() as usize;
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    /// Marks `s` and all of its supersets.
    fn insert_up(&mut self, s: Subset) {
        let free = self.ground.full() - s;
        for extra in free.subsets() {
            self.insert(s | extra);
        }
    }

    pub fn member_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        (0..self.ground.powerset_len() as u32)
            .map(Subset)
            .filter(|s| self.contains(*s))
    }

    /// Members with no proper subset in the system, in canonical order.
    pub fn minimal_members(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .members()
            .filter(|s| s.iter().all(|e| !self.contains(s.remove(e))))
            .collect();
        canonical_sort(&mut out);
        out
    }

    pub fn is_subset_of(&self, other: &SetSystem) -> bool {
        self.ground == other.ground
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_up_closed(&self) -> bool {
        self.members().all(|s| {
            (self.ground.full() - s)
                .iter()
                .all(|e| self.contains(s.insert(e)))
        })
    }

    pub fn summary(&self) -> SetSystemSummary {
        SetSystemSummary {
            n: self.ground.len(),
            member_count: self.member_count(),
            minimal_members: self.minimal_members(),
        }
    }
}

impl std::fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SetSystem")
            .field("n", &self.ground.len())
            .field("minimal_members", &self.minimal_members())
            .finish()
    }
}

/// Serialized form of a [`SetSystem`]: its minimal members and total size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetSystemSummary {
    pub n: usize,
    pub member_count: usize,
    pub minimal_members: Vec<Subset>,
}

fn check_generators(generators: &[Subset], ground: GroundSet) -> Result<()> {
    generators.iter().try_for_each(|&g| ground.check(g))
}

pub fn closure(op: ClosureOperator, generators: &[Subset], ground: GroundSet) -> Result<SetSystem> {
    match op {
        ClosureOperator::Delta => delta_closure(generators, ground),
        ClosureOperator::DeltaPrime => delta_prime_closure(generators, ground),
    }
}

/// Least up-closed family containing `generators` and closed under
/// `X, X' -> X Δ X'` whenever `X ∩ X' = {a}` and `|X|, |X'| >= 2`.
///
/// Works on a worklist of generating sets of size at least two. A candidate
/// already in the system contains some accepted generator, so every Δ
/// instance it would take part in is either covered by up-closure or by the
/// instance between accepted generators below it. Singletons `{a}` are
/// expanded into the pairs `{a, c}`, which generate the same sets of size two
/// or more.
pub fn delta_closure(generators: &[Subset], ground: GroundSet) -> Result<SetSystem> {
    check_generators(generators, ground)?;
    let mut system = SetSystem::empty(ground);
    let mut accepted: Vec<Subset> = Vec::new();
    let mut accepted_set: HashSet<Subset> = HashSet::new();
    let mut queue: Vec<Subset> = generators.to_vec();

    let mut accept = |g: Subset,
                      system: &mut SetSystem,
                      accepted: &mut Vec<Subset>,
                      queue: &mut Vec<Subset>| {
        if !accepted_set.insert(g) {
            return;
        }
        system.insert_up(g);
        for &h in accepted.iter() {
            if (g & h).len() == 1 {
                queue.push(g.sym_diff(h));
            }
        }
        accepted.push(g);
    };

    while let Some(x) = queue.pop() {
        if x.len() >= 2 {
            if !system.contains(x) {
                accept(x, &mut system, &mut accepted, &mut queue);
            }
            continue;
        }
        if system.contains(x) {
            continue;
        }
        system.insert_up(x);
        if x.is_empty() {
            continue;
        }
        for c in (ground.full() - x).iter() {
            accept(x.insert(c), &mut system, &mut accepted, &mut queue);
        }
    }
    Ok(system)
}

/// Least up-closed family containing `generators` and closed under: for
/// `|X| >= 2` and `a ∈ X`, if `X \ b` is a member for every `b ∈ X \ a`, then
/// `X \ a` is a member.
///
/// The rule only relates sets of one cardinality and up-closure only moves
/// upward, so levels are settled in increasing size. Within level `k`, each
/// `(k+1)`-set tracks how many of its `k`-subsets are still missing; when the
/// count drops to one, the last missing subset is added.
pub fn delta_prime_closure(generators: &[Subset], ground: GroundSet) -> Result<SetSystem> {
    check_generators(generators, ground)?;
    let n = ground.len();
    let full = ground.full();
    let mut system = SetSystem::empty(ground);
    let mut by_level: Vec<Vec<Subset>> = vec![Vec::new(); n + 1];
    for &g in generators {
        by_level[g.len()].push(g);
    }
    // Scratch counters for (k+1)-sets, indexed by bit pattern.
    let mut missing = vec![0u8; ground.powerset_len()];
    let mut level_sets: Vec<Vec<Subset>> = vec![Vec::new(); n + 1];
    for s in 0..ground.powerset_len() as u32 {
        let s = Subset(s);
        level_sets[s.len()].push(s);
    }

    for k in 0..=n {
        for &s in &level_sets[k] {
            if s.iter().any(|e| system.contains(s.remove(e))) {
                system.insert(s);
            }
        }
        for &g in &by_level[k] {
            system.insert(g);
        }
        if k == n || k == 0 {
            // Conclusions need |X| >= 2, i.e. level k >= 1; the full set has no parent.
            continue;
        }
        for &x in &level_sets[k + 1] {
            missing[x.bits() as usize] =
                x.iter().filter(|&e| !system.contains(x.remove(e))).count() as u8;
        }
        let mut work: Vec<Subset> = level_sets[k + 1]
            .iter()
            .copied()
            .filter(|x| missing[x.bits() as usize] == 1)
            .collect();
        while let Some(x) = work.pop() {
            if missing[x.bits() as usize] != 1 {
                continue;
            }
            let a = x
                .iter()
                .find(|&e| !system.contains(x.remove(e)))
                .expect("one subset missing");
            let added = x.remove(a);
            system.insert(added);
            for e in (full - added).iter() {
                let parent = added.insert(e);
                let slot = &mut missing[parent.bits() as usize];
                *slot -= 1;
                if *slot == 1 {
                    work.push(parent);
                }
            }
        }
    }
    Ok(system)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub covered: bool,
    pub missing: Vec<Subset>,
}

/// Whether every circuit of `family` belongs to `system`.
pub fn circuits_covered(family: &CircuitFamily, system: &SetSystem) -> Result<Coverage> {
    if family.ground() != system.ground() {
        return Err(Error::GroundMismatch {
            left: family.ground().len(),
            right: system.ground().len(),
        });
    }
    let missing: Vec<Subset> = family
        .circuits()
        .iter()
        .copied()
        .filter(|&c| !system.contains(c))
        .collect();
    Ok(Coverage {
        covered: missing.is_empty(),
        missing,
    })
}
