//! Chords of circuits and ℓ-chordality.
//!
//! A chord of a circuit `C` is an element `x` together with two circuits
//! `C1`, `C2` such that `C1 ∩ C2 = {x}` and `C1 Δ C2 = C`. These two equations
//! force `x ∉ C`, which is the convention used throughout.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::CircuitFamily;
use crate::subset::Subset;

/// Smallest level accepted by [`is_l_chordal`]; "chordal" means 4-chordal.
pub const MIN_CHORDAL_LEVEL: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChordWitness {
    pub chord: usize,
    pub c1: Subset,
    pub c2: Subset,
}

impl ChordWitness {
    /// Re-checks the defining set equations against `circuit` and `family`.
    pub fn is_valid_for(&self, family: &CircuitFamily, circuit: Subset) -> bool {
        (self.c1 & self.c2) == Subset::singleton(self.chord)
            && self.c1.sym_diff(self.c2) == circuit
            && !circuit.contains(self.chord)
            && family.is_circuit(self.c1)
            && family.is_circuit(self.c2)
    }
}

/// Finds a chord of `circuit`, choosing the lexicographically smallest
/// `(chord, c1)` among all witnesses.
///
/// If `C1 Δ C2 = C` with `C1 ∩ C2 = {x}` then `C1 = (C1 ∩ C) ∪ {x}`, so every
/// witness is found by taking a circuit `C1` with exactly one element outside
/// `C` and looking up `C Δ C1`.
pub fn find_chord(family: &CircuitFamily, circuit: Subset) -> Result<Option<ChordWitness>> {
    if !family.is_circuit(circuit) {
        return Err(Error::NotACircuit(circuit));
    }
    let best = family
        .circuits()
        .iter()
        .filter(|c1| (**c1 - circuit).len() == 1)
        .filter_map(|&c1| {
            let c2 = circuit.sym_diff(c1);
            family.is_circuit(c2).then(|| ChordWitness {
                chord: (c1 - circuit).min().unwrap(),
                c1,
                c2,
            })
        })
        .min_by(|a, b| a.chord.cmp(&b.chord).then_with(|| a.c1.lex_cmp(b.c1)));
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChordalCheck {
    pub level: usize,
    pub chordal: bool,
    /// First circuit (canonical order) with at least `level` elements and no chord.
    pub failing: Option<Subset>,
}

/// Whether every circuit with at least `level` elements has a chord.
pub fn is_l_chordal(family: &CircuitFamily, level: usize) -> Result<ChordalCheck> {
    if level < MIN_CHORDAL_LEVEL {
        return Err(Error::ChordalityLevel(level));
    }
    let failing = family
        .circuits()
        .iter()
        .copied()
        .filter(|c| c.len() >= level)
        .find(|&c| find_chord(family, c).expect("circuit of family").is_none());
    Ok(ChordalCheck {
        level,
        chordal: failing.is_none(),
        failing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitChord {
    pub circuit: Subset,
    pub has_chord: bool,
    pub witness: Option<ChordWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordalityReport {
    pub circuits: Vec<CircuitChord>,
    /// Smallest `ℓ >= 4` for which the matroid is ℓ-chordal.
    pub chordality_index: usize,
}

impl ChordalityReport {
    pub fn is_chordal(&self) -> bool {
        self.chordality_index == MIN_CHORDAL_LEVEL
    }

    pub fn is_l_chordal(&self, level: usize) -> bool {
        level >= self.chordality_index
    }

    pub fn chordless(&self) -> impl Iterator<Item = Subset> + '_ {
        self.circuits
            .iter()
            .filter(|c| !c.has_chord)
            .map(|c| c.circuit)
    }
}

/// Chord search over every circuit plus the chordality index.
///
/// The index is one more than the largest chordless circuit, floored at 4;
/// it always exists because a level past the largest circuit is vacuous.
pub fn chordality_report(family: &CircuitFamily) -> ChordalityReport {
    let circuits: Vec<CircuitChord> = family
        .circuits()
        .par_iter()
        .map(|&c| {
            let witness = find_chord(family, c).expect("circuit of family");
            CircuitChord {
                circuit: c,
                has_chord: witness.is_some(),
                witness,
            }
        })
        .collect();
    let chordality_index = circuits
        .iter()
        .filter(|c| !c.has_chord)
        .map(|c| c.circuit.len() + 1)
        .max()
        .unwrap_or(0)
        .max(MIN_CHORDAL_LEVEL);
    ChordalityReport {
        circuits,
        chordality_index,
    }
}
