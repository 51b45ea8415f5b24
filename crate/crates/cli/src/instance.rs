//! Instance sources and the echo embedded in every report.

use std::fs;
use std::path::{Path, PathBuf};

use osquad::io::{parse_circuits, parse_graph, parse_matrix};
use osquad::matroid::builtin::{self, Builtin};
use osquad::matroid::CircuitFamily;
use osquad::{Error, GroundSet, Subset};
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Clone, Debug)]
pub enum Source {
    Builtin(Builtin),
    Circuits(PathBuf),
    Matrix(PathBuf),
    Graph(PathBuf),
    /// A previously emitted report, or just its `instance` object.
    Echo(PathBuf),
}

/// Enough to rebuild the instance: the ground size and the full circuit list.
/// `source` and `name` say where it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEcho {
    pub source: String,
    pub name: String,
    pub ground: usize,
    pub circuits: Vec<Subset>,
}

impl InstanceEcho {
    pub fn of(source: &Source, family: &CircuitFamily) -> Self {
        let (kind, name) = match source {
            Source::Builtin(b) => ("builtin", b.to_string()),
            Source::Circuits(p) => ("circuits", p.display().to_string()),
            Source::Matrix(p) => ("matrix", p.display().to_string()),
            Source::Graph(p) => ("graph", p.display().to_string()),
            Source::Echo(p) => ("echo", p.display().to_string()),
        };
        InstanceEcho {
            source: kind.to_string(),
            name,
            ground: family.ground().len(),
            circuits: family.circuits().to_vec(),
        }
    }

    pub fn family(&self, cap: usize) -> Result<CircuitFamily, Error> {
        CircuitFamily::new(GroundSet::with_cap(self.ground, cap)?, self.circuits.iter().copied())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::from_core(e, Some(path))
}

pub fn load(source: &Source, cap: usize) -> Result<CircuitFamily, Failure> {
    let family = match source {
        Source::Builtin(b) => {
            let graph = match *b {
                Builtin::Complete(n) => Some(builtin::complete_graph_input(n)),
                Builtin::Cycle(n) => Some(builtin::cycle_graph_input(n)),
                Builtin::Wheel(n) => Some(builtin::wheel_graph_input(n)),
                Builtin::Fig1 | Builtin::Fano => None,
            };
            match graph {
                Some(g) => g.and_then(|g| g.circuits_with_cap(cap)),
                None => b.family(),
            }
            .map_err(|e| Failure::from_core(e, None))?
        }
        Source::Circuits(p) => parse_circuits(&read(p)?, cap).map_err(in_file(p))?,
        Source::Matrix(p) => parse_matrix(&read(p)?)
            .and_then(|m| m.circuits_with_cap(cap))
            .map_err(in_file(p))?,
        Source::Graph(p) => parse_graph(&read(p)?)
            .and_then(|g| g.circuits_with_cap(cap))
            .map_err(in_file(p))?,
        Source::Echo(p) => {
            let value: serde_json::Value = serde_json::from_str(&read(p)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            let inner = value.get("instance").cloned().unwrap_or(value);
            let echo: InstanceEcho = serde_json::from_value(inner)
                .map_err(|e| Failure::Input(format!("{}: not an instance echo: {e}", p.display())))?;
            echo.family(cap).map_err(in_file(p))?
        }
    };
    if family.ground().len() > cap {
        return Err(Failure::Cap(format!(
            "ground set has {} elements, limit is {cap}",
            family.ground().len()
        )));
    }
    Ok(family)
}
