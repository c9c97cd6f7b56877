//! Unit-interval graph recognition and reconstruction at oracle scale.
//!
//! A graph is a unit-interval graph iff its vertices admit an umbrella
//! ordering: whenever `v_i ~ v_j` with `i < k < j`, also `v_i ~ v_k` and
//! `v_k ~ v_j`. The ordering is found by backtracking; a representation is
//! then read off by solving difference constraints on the left ends.

use crate::certificate::{intersection_graph, Certificate};
use crate::coord::Coord;
use crate::graph::{Graph, VertexId};
use crate::interval::Interval;

pub(crate) fn masks(g: &Graph) -> Vec<u16> {
    assert!(g.len() <= 16, "bitmask graphs hold at most 16 vertices");
    (0..g.len())
        .map(|v| g.neighbors(v).fold(0u16, |m, u| m | (1 << u)))
        .collect()
}

/// Umbrella ordering of the graph given by adjacency masks, if one exists.
///
/// Components are ordered one after another. Inside a component,
/// consecutive vertices must be adjacent (a gap would disconnect it), which
/// keeps the backtracking narrow.
pub(crate) fn umbrella_masks(adj: &[u16]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut placed: u16 = 0;
    for v in 0..n {
        if placed & (1 << v) != 0 {
            continue;
        }
        let comp = component(adj, v);
        let start = order.len();
        let found = (0..n)
            .filter(|&s| comp & (1 << s) != 0)
            .any(|s| {
                order.truncate(start);
                order.push(s);
                extend(adj, comp, &mut order, start, 1 << s)
            });
        if !found {
            return None;
        }
        placed |= comp;
    }
    Some(order)
}

fn component(adj: &[u16], v: usize) -> u16 {
    let mut comp: u16 = 1 << v;
    loop {
        let grown = (0..adj.len())
            .filter(|&u| comp & (1 << u) != 0)
            .fold(comp, |m, u| m | adj[u]);
        if grown == comp {
            return comp;
        }
        comp = grown;
    }
}

/// Extends `order[start..]`, which holds the vertices of `done`, to all of `comp`.
fn extend(adj: &[u16], comp: u16, order: &mut Vec<usize>, start: usize, done: u16) -> bool {
    if done == comp {
        return true;
    }
    let open = comp & !done;
    // A placed vertex followed by a non-neighbour can gain no new neighbours.
    let mut seen_after: u16 = 0;
    for &i in order[start..].iter().rev() {
        if seen_after & !adj[i] != 0 && adj[i] & open != 0 {
            return false;
        }
        seen_after |= 1 << i;
    }
    let last = *order.last().expect("component start is placed");
    for v in (0..adj.len()).filter(|&v| open & adj[last] & (1 << v) != 0) {
        let mut after: u16 = 0;
        let mut ok = true;
        for &i in order[start..].iter().rev() {
            if adj[v] & (1 << i) != 0 && after & !(adj[i] & adj[v]) != 0 {
                ok = false;
                break;
            }
            after |= 1 << i;
        }
        if !ok {
            continue;
        }
        order.push(v);
        if extend(adj, comp, order, start, done | (1 << v)) {
            return true;
        }
        order.pop();
    }
    false
}

pub fn umbrella_ordering(g: &Graph) -> Option<Vec<VertexId>> {
    umbrella_masks(&masks(g))
}

pub fn is_unit_interval_graph(g: &Graph) -> bool {
    umbrella_ordering(g).is_some()
}

/// Weight `a + b*eps` for an infinitesimal `eps > 0`, ordered lexicographically.
type Lex = (i64, i64);

fn add(x: Lex, y: Lex) -> Lex {
    (x.0 + y.0, x.1 + y.1)
}

/// A unit-interval certificate whose intersection graph equals `g`, built
/// from an umbrella ordering. `None` iff `g` is not a unit-interval graph.
pub fn unit_representation(g: &Graph) -> Option<Certificate> {
    let n = g.len();
    let order = umbrella_ordering(g)?;
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    // reach[p]: last position adjacent to (or equal to) position p.
    let reach: Vec<usize> = (0..n)
        .map(|p| {
            g.neighbors(order[p])
                .map(|u| pos[u])
                .filter(|&q| q > p)
                .max()
                .unwrap_or(p)
        })
        .collect();

    // Edge (u, v, w) encodes x_v - x_u <= w.
    let mut edges: Vec<(usize, usize, Lex)> = Vec::new();
    for p in 0..n {
        if p + 1 < n {
            edges.push((p + 1, p, (0, 0)));
        }
        edges.push((p, reach[p], (1, 0)));
        if reach[p] + 1 < n {
            edges.push((reach[p] + 1, p, (-1, -1)));
        }
    }
    let mut dist: Vec<Lex> = vec![(0, 0); n];
    for round in 0..=n {
        let mut changed = false;
        for &(u, v, w) in &edges {
            let cand = add(dist[u], w);
            if cand < dist[v] {
                dist[v] = cand;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        if round == n {
            return None;
        }
    }
    // Any eps below 1/(n+1) realizes the lexicographic solution.
    let eps = Coord::ratio(1, n as i64 + 2);
    let mut ivs = vec![Interval::unit(Coord::zero()); n];
    for p in 0..n {
        let left = Coord::from_int(dist[p].0) + &eps * Coord::from_int(dist[p].1);
        ivs[order[p]] = Interval::unit(left);
    }
    let cert = Certificate::new(ivs);
    (intersection_graph(&cert) == *g).then_some(cert)
}
