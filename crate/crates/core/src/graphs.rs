//! Test-instance generators: all connected simple graphs up to isomorphism
//! with a bounded number of edges, and seeded random connected graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::matroid::GraphInput;

type Edges = Vec<(usize, usize)>;

/// Canonical form: the lexicographically least sorted edge list over all
/// relabelings of the vertices `1..=vertices`.
fn canonical(vertices: usize, edges: &[(usize, usize)]) -> Edges {
    let mut perm: Vec<usize> = (0..=vertices).collect();
    let mut best: Option<Edges> = None;
    permute(&mut perm, 1, &mut |p| {
        let mut relabeled: Edges = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (p[u], p[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    best.unwrap_or_default()
}

fn permute(perm: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k + 1 >= perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Every connected simple graph with between 1 and `max_edges` edges, one per
/// isomorphism class, ordered by edge count then canonical edge list. Edges
/// are labeled in canonical order.
pub fn connected_graphs(max_edges: usize) -> Vec<GraphInput> {
    let mut out = Vec::new();
    if max_edges == 0 {
        return out;
    }
    // Each level holds (vertex count, canonical edges).
    let mut level: BTreeSet<(usize, Edges)> = BTreeSet::new();
    level.insert((2, vec![(1, 2)]));
    for m in 1..=max_edges {
        for (v, edges) in &level {
            out.push(GraphInput::new(*v, edges.clone()).expect("canonical graphs are simple"));
        }
        if m == max_edges {
            break;
        }
        let mut next = BTreeSet::new();
        for (v, edges) in &level {
            let v = *v;
            for a in 1..=v {
                // Either join two existing vertices or hang a new one.
                for b in a + 1..=v + 1 {
                    if edges.contains(&(a, b)) {
                        continue;
                    }
                    let grown_v = v.max(b);
                    let mut grown = edges.clone();
                    grown.push((a, b));
                    next.insert((grown_v, canonical(grown_v, &grown)));
                }
            }
        }
        level = next;
    }
    out
}

/// A random connected simple graph with `edges` edges on `vertices` vertices:
/// a random spanning tree plus random extra edges, with shuffled edge order.
///
/// Panics unless `vertices - 1 <= edges <= vertices * (vertices - 1) / 2`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, vertices: usize, edges: usize) -> GraphInput {
    assert!(vertices >= 2 && vertices - 1 <= edges && edges <= vertices * (vertices - 1) / 2);
    let mut order: Vec<usize> = (1..=vertices).collect();
    order.shuffle(rng);
    let mut chosen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 1..vertices {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        chosen.insert((parent.min(child), parent.max(child)));
    }
    let mut missing: Vec<(usize, usize)> = (1..=vertices)
        .flat_map(|u| (u + 1..=vertices).map(move |v| (u, v)))
        .filter(|e| !chosen.contains(e))
        .collect();
    missing.shuffle(rng);
    chosen.extend(missing.into_iter().take(edges - (vertices - 1)));
    let mut list: Vec<(usize, usize)> = chosen.into_iter().collect();
    list.shuffle(rng);
    GraphInput::new(vertices, list).expect("generated graphs are simple")
}

/// A random connected graph with at most `max_edges` edges and at least 3,
/// with enough vertex slack that cycles of every length are possible.
pub fn random_small_graph<R: Rng>(rng: &mut R, max_edges: usize) -> GraphInput {
    let edges = rng.gen_range(3..=max_edges.max(3));
    let min_vertices = (2..).find(|v| v * (v - 1) / 2 >= edges).unwrap();
    let max_vertices = edges + 1;
    let vertices = rng.gen_range(min_vertices..=max_vertices);
    random_connected_graph(rng, vertices, edges)
}
