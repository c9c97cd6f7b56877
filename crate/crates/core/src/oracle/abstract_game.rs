//! The graph-only game: the adversary names the neighbours of each new
//! vertex, and the presented graph must stay a unit-interval graph.

use crate::error::OracleError;

use super::unit_graph::umbrella_masks;
use super::{Game, Solver};

#[derive(Clone, Debug)]
struct State {
    adj: Vec<u16>,
    colors: Vec<u8>,
}

struct AbstractGame {
    cap: usize,
}

fn clique_of(adj: &[u16], cand: u16) -> usize {
    if cand == 0 {
        return 0;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    let with = 1 + clique_of(adj, rest & adj[v]);
    if with > rest.count_ones() as usize {
        return with;
    }
    with.max(clique_of(adj, rest))
}

/// Colour refinement: labels become ranks of (label, sorted neighbour labels).
fn refine(adj: &[u16], mut labels: Vec<u32>) -> Vec<u32> {
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..adj.len())
            .map(|v| {
                let mut ns: Vec<u32> = (0..adj.len()).filter(|&u| adj[v] & (1 << u) != 0).map(|u| labels[u]).collect();
                ns.sort_unstable();
                (labels[v], ns)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present") as u32)
            .collect();
        let before = labels.iter().collect::<std::collections::BTreeSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        labels = next;
    }
}

/// Row-wise encoding of the state under the vertex order given by distinct labels.
fn encode(s: &State, labels: &[u32]) -> Vec<u32> {
    let n = s.adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| labels[v]);
    let mut at = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        at[v] = p;
    }
    order
        .iter()
        .map(|&v| {
            let row = (0..n).filter(|&u| s.adj[v] & (1 << u) != 0).fold(0u32, |m, u| m | (1 << at[u]));
            ((s.colors[v] as u32) << 16) | row
        })
        .collect()
}

/// Least encoding over all individualization branches: a canonical form of
/// the colored graph up to isomorphism.
fn canonical(s: &State, labels: Vec<u32>, best: &mut Option<Vec<u32>>) {
    let labels = refine(&s.adj, labels);
    let n = labels.len();
    let mut counts = vec![0usize; n];
    for &l in &labels {
        counts[l as usize] += 1;
    }
    let Some(cell) = (0..n as u32).find(|&l| counts[l as usize] > 1) else {
        let enc = encode(s, &labels);
        if best.as_ref().is_none_or(|b| enc < *b) {
            *best = Some(enc);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| labels[v] == cell) {
        // Swapping twins is an automorphism, so one branch per twin class suffices.
        let twin = |u: usize| s.adj[u] & !(1 << v) == s.adj[v] & !(1 << u);
        if tried.iter().any(|&u| twin(u)) {
            continue;
        }
        tried.push(v);
        // Doubling keeps old cells apart; v moves just below its cell.
        let mut split: Vec<u32> = labels.iter().map(|&l| 2 * l + 1).collect();
        split[v] = 2 * cell;
        canonical(s, split, best);
    }
}

/// Vertex sets of the connected components.
fn components(adj: &[u16]) -> Vec<Vec<usize>> {
    let mut seen: u16 = 0;
    let mut out = Vec::new();
    for v in 0..adj.len() {
        if seen & (1 << v) != 0 {
            continue;
        }
        let mut comp: u16 = 1 << v;
        loop {
            let grown = (0..adj.len())
                .filter(|&u| comp & (1 << u) != 0)
                .fold(comp, |m, u| m | adj[u]);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        seen |= comp;
        out.push((0..adj.len()).filter(|&u| comp & (1 << u) != 0).collect());
    }
    out
}

fn restrict(s: &State, vs: &[usize]) -> State {
    let adj = vs
        .iter()
        .map(|&v| {
            vs.iter()
                .enumerate()
                .filter(|&(_, &u)| s.adj[v] & (1 << u) != 0)
                .fold(0u16, |m, (i, _)| m | (1 << i))
        })
        .collect();
    State {
        adj,
        colors: vs.iter().map(|&v| s.colors[v]).collect(),
    }
}

impl Game for AbstractGame {
    type State = State;
    type Key = (Vec<Vec<u32>>, usize);

    /// Canonical forms of the components, sorted.
    fn key(&self, s: &State, moves_left: usize) -> Self::Key {
        let mut parts: Vec<Vec<u32>> = components(&s.adj)
            .iter()
            .map(|vs| {
                let part = restrict(s, vs);
                let mut best = None;
                canonical(&part, part.colors.iter().map(|&c| c as u32).collect(), &mut best);
                best.unwrap_or_default()
            })
            .collect();
        parts.sort_unstable();
        (parts, moves_left)
    }

    fn palette(&self, s: &State) -> usize {
        s.colors.iter().copied().max().unwrap_or(0) as usize
    }

    fn moves(&self, s: &State) -> Vec<Vec<State>> {
        let n = s.adj.len();
        let palette = self.palette(s) as u8;
        let mut out = Vec::new();
        // A unit interval's neighbours contain its left or its right end:
        // two cliques, each below the cap.
        let most = 2 * (self.cap - 1);
        for nbrs in 0u16..(1u16 << n) {
            if nbrs.count_ones() as usize > most || clique_of(&s.adj, nbrs) + 1 > self.cap {
                continue;
            }
            let mut adj = s.adj.clone();
            for (u, row) in adj.iter_mut().enumerate() {
                if nbrs & (1 << u) != 0 {
                    *row |= 1 << n;
                }
            }
            adj.push(nbrs);
            if umbrella_masks(&adj).is_none() {
                continue;
            }
            let replies = (1..=palette + 1)
                .filter(|&c| !(0..n).any(|u| nbrs & (1 << u) != 0 && s.colors[u] == c))
                .map(|c| {
                    let mut colors = s.colors.clone();
                    colors.push(c);
                    State {
                        adj: adj.clone(),
                        colors,
                    }
                })
                .collect();
            out.push(replies);
        }
        out
    }
}

pub(super) fn solve(cap: usize, moves: usize) -> Result<(usize, u64), OracleError> {
    let mut solver = Solver::new(AbstractGame { cap });
    let start = State {
        adj: Vec::new(),
        colors: Vec::new(),
    };
    let value = solver.value(&start, moves)?;
    Ok((value, solver.nodes()))
}
