//! Abstract graphs on dense vertex ids, with small exact clique oracles.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

pub type VertexId = usize;

/// Largest graph accepted by [`graph_clique_bruteforce`].
pub const BRUTE_FORCE_LIMIT: usize = 30;

/// Simple undirected graph; vertex ids are `0..n` in presentation order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<BTreeSet<VertexId>>,
}

impl Graph {
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Append a vertex adjacent to `neighbors` (all existing ids); returns its id.
    pub fn add_vertex(&mut self, neighbors: &[VertexId]) -> VertexId {
        let id = self.adj.len();
        self.adj.push(BTreeSet::new());
        for &u in neighbors {
            self.add_edge(id, u);
        }
        id
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert!(u != v, "self-loop on {u}");
        assert!(u < self.adj.len() && v < self.adj.len(), "edge ({u},{v}) out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut g = Graph::with_vertices(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Maximum clique size over an arbitrary vertex subset. Exact; exponential
    /// in the worst case, intended for the sparse neighbourhoods the online
    /// algorithms query.
    pub fn clique_number_within(&self, vertices: &[VertexId]) -> usize {
        let mut best = 0;
        let cand: Vec<VertexId> = vertices.to_vec();
        self.expand_clique(0, cand, &mut best, usize::MAX);
        best
    }

    /// True iff the subset contains a clique of at least `target` vertices.
    pub fn has_clique_of_size(&self, vertices: &[VertexId], target: usize) -> bool {
        if target == 0 {
            return true;
        }
        let mut best = 0;
        self.expand_clique(0, vertices.to_vec(), &mut best, target);
        best >= target
    }

    fn expand_clique(&self, size: usize, mut cand: Vec<VertexId>, best: &mut usize, stop_at: usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        while let Some(v) = cand.pop() {
            if *best >= stop_at || size + cand.len() < *best {
                return;
            }
            let next: Vec<VertexId> = cand.iter().copied().filter(|&u| self.has_edge(u, v)).collect();
            self.expand_clique(size + 1, next, best, stop_at);
        }
    }
}

/// Exact maximum clique size for graphs of at most [`BRUTE_FORCE_LIMIT`] vertices,
/// by enumeration over 32-bit vertex masks.
pub fn graph_clique_bruteforce(g: &Graph) -> Result<usize, GeometryError> {
    let n = g.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(GeometryError::SizeExceeded {
            got: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | (1 << u)))
        .collect();

    fn grow(masks: &[u32], size: usize, cand: u32, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        grow(masks, size + 1, rest & masks[v], best);
        grow(masks, size, rest, best);
    }

    let mut best = 0;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    grow(&masks, 0, all, &mut best);
    Ok(best)
}

/// True iff some vertex has three pairwise non-adjacent neighbours.
pub fn contains_induced_claw(g: &Graph) -> bool {
    (0..g.len()).any(|c| {
        let ns: Vec<VertexId> = g.neighbors(c).collect();
        for (i, &a) in ns.iter().enumerate() {
            for (j, &b) in ns.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                if ns[j + 1..].iter().any(|&d| !g.has_edge(a, d) && !g.has_edge(b, d)) {
                    return true;
                }
            }
        }
        false
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn brute_force_small_cases() {
        assert_eq!(graph_clique_bruteforce(&Graph::default()).unwrap(), 0);
        assert_eq!(graph_clique_bruteforce(&triangle()).unwrap(), 3);
        assert_eq!(graph_clique_bruteforce(&Graph::with_vertices(4)).unwrap(), 1);
    }

    #[test]
    fn brute_force_guard() {
        let g = Graph::with_vertices(BRUTE_FORCE_LIMIT + 1);
        assert!(matches!(
            graph_clique_bruteforce(&g),
            Err(GeometryError::SizeExceeded { got: 31, limit: 30 })
        ));
        assert!(graph_clique_bruteforce(&Graph::with_vertices(BRUTE_FORCE_LIMIT)).is_ok());
    }

    #[test]
    fn claw_detection() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(contains_induced_claw(&star));
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!contains_induced_claw(&path));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(!contains_induced_claw(&k4));
    }

    #[test]
    fn subset_clique_queries() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        assert_eq!(g.clique_number_within(&[0, 1, 2, 3, 4]), 3);
        assert_eq!(g.clique_number_within(&[2, 3, 4]), 2);
        assert!(g.has_clique_of_size(&[0, 1, 2], 3));
        assert!(!g.has_clique_of_size(&[1, 2, 3, 4], 3));
        assert!(g.has_clique_of_size(&[], 0));
    }

    #[test]
    fn add_vertex_and_edges() {
        let mut g = Graph::default();
        let a = g.add_vertex(&[]);
        let b = g.add_vertex(&[a]);
        let c = g.add_vertex(&[a, b]);
        assert_eq!(c, 2);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.induced(&[2, 0]), Graph::from_edges(2, &[(0, 1)]));
    }
}
