use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matroid::{BinaryMatrix, CircuitFamily};
use crate::subset::{GroundSet, Subset, DEFAULT_CAP};

/// A simple graph on vertices `1..=d`; edge `k` (1-based, input order) is element `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInput {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphInput {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (k, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x == 0 || x > vertices {
                    return Err(Error::VertexOutOfRange {
                        edge: k + 1,
                        vertex: x,
                        vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::GraphLoop {
                    edge: k + 1,
                    vertex: u,
                });
            }
            let key = (u.min(v), u.max(v));
            if let Some(j) = seen.iter().position(|&e| e == key) {
                return Err(Error::ParallelEdges(j + 1, k + 1));
            }
            seen.push(key);
        }
        Ok(GraphInput { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex-edge incidence matrix over GF(2).
    pub fn incidence_matrix(&self) -> Result<BinaryMatrix> {
        let columns = self
            .edges
            .iter()
            .map(|&(u, v)| (1u128 << (u - 1)) | (1u128 << (v - 1)))
            .collect();
        BinaryMatrix::from_columns(self.vertices, columns)
    }

    pub fn circuits(&self) -> Result<CircuitFamily> {
        self.circuits_with_cap(DEFAULT_CAP)
    }

    /// Edge sets of the simple cycles.
    ///
    /// Each cycle is rooted at its smallest vertex and walked through larger
    /// vertices only; both orientations are found and merged by edge set.
    pub fn circuits_with_cap(&self, cap: usize) -> Result<CircuitFamily> {
        let ground = GroundSet::with_cap(self.edges.len(), cap)?;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices + 1];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, k + 1));
            adj[v].push((u, k + 1));
        }
        let mut cycles = BTreeSet::new();
        let mut on_path = vec![false; self.vertices + 1];
        for root in 1..=self.vertices {
            on_path[root] = true;
            walk(&adj, root, root, Subset::EMPTY, &mut on_path, &mut cycles);
            on_path[root] = false;
        }
        Ok(CircuitFamily::from_trusted(
            ground,
            cycles.into_iter().collect(),
        ))
    }
}

fn walk(
    adj: &[Vec<(usize, usize)>],
    root: usize,
    at: usize,
    used: Subset,
    on_path: &mut [bool],
    cycles: &mut BTreeSet<Subset>,
) {
    for &(next, edge) in &adj[at] {
        if used.contains(edge) {
            continue;
        }
        if next == root {
            // A closing edge needs a path of at least two edges behind it.
            if used.len() >= 2 {
                cycles.insert(used.insert(edge));
            }
        } else if next > root && !on_path[next] {
            on_path[next] = true;
            walk(adj, root, next, used.insert(edge), on_path, cycles);
            on_path[next] = false;
        }
    }
}
