//! Named instances: the 7-element rank-3 example, complete graphs, cycles,
//! wheels and the Fano plane.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{BinaryMatrix, CircuitFamily, GraphInput};
use crate::subset::{k_subsets, GroundSet, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Builtin {
    Fig1,
    Complete(usize),
    Cycle(usize),
    Wheel(usize),
    Fano,
}

impl Builtin {
    pub fn family(self) -> Result<CircuitFamily> {
        match self {
            Builtin::Fig1 => fig1(),
            Builtin::Complete(n) => complete_graph(n),
            Builtin::Cycle(n) => cycle_graph(n),
            Builtin::Wheel(n) => wheel_graph(n),
            Builtin::Fano => fano(),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Fig1 => f.write_str("fig1"),
            Builtin::Complete(n) => write!(f, "K_{n}"),
            Builtin::Cycle(n) => write!(f, "C_{n}"),
            Builtin::Wheel(n) => write!(f, "W_{n}"),
            Builtin::Fano => f.write_str("fano"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    /// Accepts `fig1`, `fano`, and `K_n`/`Kn`, `C_n`/`Cn`, `W_n`/`Wn`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownBuiltin(s.to_string());
        match s.to_ascii_lowercase().as_str() {
            "fig1" => return Ok(Builtin::Fig1),
            "fano" => return Ok(Builtin::Fano),
            _ => {}
        }
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(unknown)?;
        let rest = chars.as_str();
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match kind {
            'K' | 'k' => Ok(Builtin::Complete(n)),
            'C' | 'c' => Ok(Builtin::Cycle(n)),
            'W' | 'w' => Ok(Builtin::Wheel(n)),
            _ => Err(unknown()),
        }
    }
}

/// The three-point lines of the 7-element rank-3 example.
pub const FIG1_LINES: [[usize; 3]; 5] = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [3, 5, 7]];

/// Rank-3 simple matroid on `[7]` whose 3-circuits are `FIG1_LINES`.
///
/// In rank 3 every 4-set is dependent, so the 4-circuits are exactly the
/// 4-sets containing no listed line. The result is checked against the
/// circuit axioms.
pub fn fig1() -> Result<CircuitFamily> {
    let lines: Vec<Subset> = FIG1_LINES
        .iter()
        .map(|l| Subset::from_labels(l.iter().copied()))
        .collect();
    let quads = k_subsets(7, 4)
        .into_iter()
        .filter(|q| !lines.iter().any(|l| l.is_subset(*q)));
    CircuitFamily::new(GroundSet::new(7)?, lines.iter().copied().chain(quads))
}

/// Complete graph on `n` vertices, edges labeled in lexicographic order of
/// their endpoints: (1,2), (1,3), ..., (n-1,n).
pub fn complete_graph(n: usize) -> Result<CircuitFamily> {
    complete_graph_input(n)?.circuits()
}

pub fn complete_graph_input(n: usize) -> Result<GraphInput> {
    let edges = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    GraphInput::new(n, edges)
}

/// Cycle on `n` vertices: edges (1,2), ..., (n-1,n), (1,n).
pub fn cycle_graph(n: usize) -> Result<CircuitFamily> {
    cycle_graph_input(n)?.circuits()
}

pub fn cycle_graph_input(n: usize) -> Result<GraphInput> {
    if n < 3 {
        return Err(Error::UnknownBuiltin(format!("C_{n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    GraphInput::new(n, edges)
}

/// Wheel with `n` spokes: hub 1, rim 2..=n+1. Spokes are elements 1..=n,
/// rim edges n+1..=2n.
pub fn wheel_graph(n: usize) -> Result<CircuitFamily> {
    wheel_graph_input(n)?.circuits()
}

pub fn wheel_graph_input(n: usize) -> Result<GraphInput> {
    if n < 3 {
        return Err(Error::UnknownBuiltin(format!("W_{n}")));
    }
    let mut edges: Vec<_> = (2..=n + 1).map(|v| (1, v)).collect();
    edges.extend((2..=n).map(|v| (v, v + 1)));
    edges.push((2, n + 1));
    GraphInput::new(n + 1, edges)
}

/// Fano plane: column `j` is the binary expansion of `j`.
pub fn fano() -> Result<CircuitFamily> {
    BinaryMatrix::from_columns(3, (1..=7).collect())?.circuits()
}
