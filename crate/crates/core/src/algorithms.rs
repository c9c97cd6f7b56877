//! Online coloring algorithms behind a single step contract.
//!
//! An algorithm sees the game preamble once, then one [`Reveal`] per vertex,
//! and must answer a positive color that differs from every earlier
//! neighbour's color. Answers depend only on what was revealed so far (and
//! on an explicit seed for the randomized opponent).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::error::ParseError;
use crate::graph::{Graph, VertexId};
use crate::interval::Interval;

pub type Color = u32;

/// What the algorithm is told before the first vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preamble {
    pub representation_shown: bool,
    pub announced_lengths: Option<Vec<Coord>>,
    pub clique_cap: Option<usize>,
    pub seed: u64,
}

/// One vertex as delivered to the algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reveal {
    pub vertex: VertexId,
    /// Earlier neighbours, ascending.
    pub neighbors: Vec<VertexId>,
    /// Present iff the representation is shown.
    pub interval: Option<Interval>,
}

pub trait OnlineAlgorithm: Send {
    fn name(&self) -> String;

    /// Reset all state for a new game.
    fn start(&mut self, preamble: &Preamble);

    fn step(&mut self, reveal: &Reveal) -> Color;
}

/// Smallest positive integer not in `used`.
pub fn smallest_free(used: impl IntoIterator<Item = Color>) -> Color {
    let used: BTreeSet<Color> = used.into_iter().collect();
    let mut c = 1;
    while used.contains(&c) {
        c += 1;
    }
    c
}

#[derive(Debug, Default, Clone)]
pub struct FirstFit {
    colors: Vec<Color>,
}

impl FirstFit {
    pub fn new() -> Self {
        Self::default()
    }
}

impl OnlineAlgorithm for FirstFit {
    fn name(&self) -> String {
        "first-fit".into()
    }

    fn start(&mut self, _preamble: &Preamble) {
        self.colors.clear();
    }

    fn step(&mut self, reveal: &Reveal) -> Color {
        let c = smallest_free(reveal.neighbors.iter().map(|&u| self.colors[u]));
        self.colors.push(c);
        c
    }
}

/// Kierstead–Trotter with clique cap ω.
///
/// Vertices are sorted into levels `0..ω`. A vertex lands on level `ℓ ≥ 1`
/// when adding it to the union of lower levels would create a clique of
/// size `ℓ + 1`; otherwise it descends. Each level is colored First-Fit from
/// its own bank, so banks never share colors. Reported colors are the bank
/// colors compacted to `1..m` in first-use order.
#[derive(Debug, Default, Clone)]
pub struct KiersteadTrotter {
    cap: usize,
    graph: Graph,
    levels: Vec<usize>,
    bank_colors: Vec<Color>,
    compact: HashMap<(usize, Color), Color>,
}

impl KiersteadTrotter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// First-Fit color of each vertex within its level's bank.
    pub fn bank_colors(&self) -> &[Color] {
        &self.bank_colors
    }

    /// Fixed bank color before compaction: level 0 owns `{1}`, level
    /// `ℓ ≥ 1` owns `{3ℓ-1, 3ℓ, 3ℓ+1}`. `None` for overflow slots, which
    /// only non-interval input can reach.
    pub fn bank_color(level: usize, slot: Color) -> Option<Color> {
        match level {
            0 => (slot == 1).then_some(1),
            _ => (slot <= 3).then(|| 3 * level as Color - 2 + slot),
        }
    }

    /// Clique number of the union of levels `< level`.
    pub fn inner_clique(&self, level: usize) -> usize {
        let inner: Vec<VertexId> = (0..self.levels.len()).filter(|&v| self.levels[v] < level).collect();
        self.graph.clique_number_within(&inner)
    }

    fn assign_level(&self, neighbors: &[VertexId]) -> usize {
        for level in (1..self.cap).rev() {
            let inner: Vec<VertexId> = neighbors.iter().copied().filter(|&u| self.levels[u] < level).collect();
            if inner.len() >= level && self.graph.has_clique_of_size(&inner, level) {
                return level;
            }
        }
        0
    }
}

impl OnlineAlgorithm for KiersteadTrotter {
    fn name(&self) -> String {
        "kt".into()
    }

    fn start(&mut self, preamble: &Preamble) {
        self.cap = preamble.clique_cap.expect("kt needs a clique cap in the preamble").max(1);
        self.graph = Graph::default();
        self.levels.clear();
        self.bank_colors.clear();
        self.compact.clear();
    }

    fn step(&mut self, reveal: &Reveal) -> Color {
        let level = self.assign_level(&reveal.neighbors);
        let slot = smallest_free(
            reveal
                .neighbors
                .iter()
                .filter(|&&u| self.levels[u] == level)
                .map(|&u| self.bank_colors[u]),
        );
        self.graph.add_vertex(&reveal.neighbors);
        self.levels.push(level);
        self.bank_colors.push(slot);
        let next = self.compact.len() as Color + 1;
        *self.compact.entry((level, slot)).or_insert(next)
    }
}

/// Always answers a brand-new color.
#[derive(Debug, Default, Clone)]
pub struct Wasteful {
    next: Color,
}

impl OnlineAlgorithm for Wasteful {
    fn name(&self) -> String {
        "wasteful".into()
    }

    fn start(&mut self, _preamble: &Preamble) {
        self.next = 0;
    }

    fn step(&mut self, _reveal: &Reveal) -> Color {
        self.next += 1;
        self.next
    }
}

/// Uniform choice among the proper colors in `1..=deg+1`, driven by a
/// ChaCha stream so runs replay exactly.
#[derive(Debug, Clone)]
pub struct Seeded {
    seed: u64,
    rng: ChaCha8Rng,
    colors: Vec<Color>,
}

impl Seeded {
    pub fn new(seed: u64) -> Self {
        Seeded {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
            colors: Vec::new(),
        }
    }
}

impl OnlineAlgorithm for Seeded {
    fn name(&self) -> String {
        format!("seeded:{}", self.seed)
    }

    fn start(&mut self, _preamble: &Preamble) {
        self.rng = ChaCha8Rng::seed_from_u64(self.seed);
        self.colors.clear();
    }

    fn step(&mut self, reveal: &Reveal) -> Color {
        let used: BTreeSet<Color> = reveal.neighbors.iter().map(|&u| self.colors[u]).collect();
        let options: Vec<Color> = (1..=reveal.neighbors.len() as Color + 1)
            .filter(|c| !used.contains(c))
            .collect();
        let c = options[self.rng.gen_range(0..options.len())];
        self.colors.push(c);
        c
    }
}

/// Algorithm selector as used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgorithmSpec {
    FirstFit,
    Kt,
    Wasteful,
    Seeded(u64),
}

impl AlgorithmSpec {
    pub fn build(&self) -> Box<dyn OnlineAlgorithm> {
        match *self {
            AlgorithmSpec::FirstFit => Box::new(FirstFit::new()),
            AlgorithmSpec::Kt => Box::new(KiersteadTrotter::new()),
            AlgorithmSpec::Wasteful => Box::new(Wasteful::default()),
            AlgorithmSpec::Seeded(s) => Box::new(Seeded::new(s)),
        }
    }

    /// True for algorithms whose answers are a fixed function of the
    /// revealed history.
    pub fn is_deterministic(&self) -> bool {
        true
    }
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmSpec::FirstFit => write!(f, "first-fit"),
            AlgorithmSpec::Kt => write!(f, "kt"),
            AlgorithmSpec::Wasteful => write!(f, "wasteful"),
            AlgorithmSpec::Seeded(s) => write!(f, "seeded:{s}"),
        }
    }
}

impl FromStr for AlgorithmSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "first-fit" | "ff" => Ok(AlgorithmSpec::FirstFit),
            "kt" => Ok(AlgorithmSpec::Kt),
            "wasteful" => Ok(AlgorithmSpec::Wasteful),
            other => other
                .strip_prefix("seeded:")
                .and_then(|n| n.parse().ok())
                .map(AlgorithmSpec::Seeded)
                .ok_or_else(|| ParseError::Algorithm(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reveal(vertex: VertexId, neighbors: &[VertexId]) -> Reveal {
        Reveal {
            vertex,
            neighbors: neighbors.to_vec(),
            interval: None,
        }
    }

    fn run(alg: &mut dyn OnlineAlgorithm, cap: usize, adj: &[&[VertexId]]) -> Vec<Color> {
        alg.start(&Preamble {
            clique_cap: Some(cap),
            ..Preamble::default()
        });
        adj.iter().enumerate().map(|(v, ns)| alg.step(&reveal(v, ns))).collect()
    }

    #[test]
    fn first_fit_picks_smallest_gap() {
        let mut ff = FirstFit::new();
        let cols = run(&mut ff, 1, &[&[], &[0], &[0, 1], &[2], &[0, 1, 3]]);
        assert_eq!(cols, vec![1, 2, 3, 1, 3]);
        assert_eq!(smallest_free([1, 2, 4]), 3);
        assert_eq!(run(&mut ff, 1, &[&[]]), vec![1]);
    }

    #[test]
    fn kt_cap_one_is_first_fit_on_independent_sets() {
        let mut kt = KiersteadTrotter::new();
        assert_eq!(run(&mut kt, 1, &[&[], &[], &[], &[]]), vec![1, 1, 1, 1]);
    }

    #[test]
    fn kt_moves_clique_completers_up() {
        let mut kt = KiersteadTrotter::new();
        // level 0 must stay independent, so the second vertex already moves up
        let cols = run(&mut kt, 2, &[&[], &[0], &[0, 1]]);
        assert_eq!(kt.levels(), &[0, 1, 1]);
        assert_eq!(cols, vec![1, 2, 3]);
        assert!(kt.inner_clique(1) <= 1);
    }

    #[test]
    fn wasteful_counts_up() {
        let mut w = Wasteful::default();
        assert_eq!(run(&mut w, 1, &[&[], &[], &[], &[], &[]]), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn seeded_is_reproducible() {
        let adj: &[&[VertexId]] = &[&[], &[0], &[0, 1], &[1, 2], &[], &[3, 4]];
        let a = run(&mut Seeded::new(7), 1, adj);
        let b = run(&mut Seeded::new(7), 1, adj);
        assert_eq!(a, b);
    }

    #[test]
    fn spec_strings() {
        for s in ["first-fit", "kt", "wasteful", "seeded:42"] {
            assert_eq!(s.parse::<AlgorithmSpec>().unwrap().to_string(), s);
        }
        assert!("seeded:x".parse::<AlgorithmSpec>().is_err());
        assert!("greedy".parse::<AlgorithmSpec>().is_err());
    }
}
