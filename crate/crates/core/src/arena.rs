//! The referee-side game state that adversary strategies drive.
//!
//! A strategy calls [`Arena::present`] with the interval it intends for the
//! next vertex. The arena derives the vertex's neighbours from the
//! certificate, strips the interval when the representation is hidden, asks
//! the algorithm for a color, checks properness and records the step. Early
//! win is enforced before each presentation: once the palette has reached
//! the target, `present` refuses and unwinds the strategy with
//! [`Halt::TargetReached`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algorithms::{Color, OnlineAlgorithm, Preamble, Reveal};
use crate::certificate::{Certificate, ClassSpec};
use crate::coord::Coord;
use crate::error::GameError;
use crate::graph::{Graph, VertexId};
use crate::interval::Interval;

/// What the algorithm is allowed to know in a game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnowledgeSpec {
    pub representation_shown: bool,
    pub lengths_announced: bool,
    pub class: ClassSpec,
}

impl KnowledgeSpec {
    /// Regime label: `TWO++` (both known), `TWO+` (representation only),
    /// `TWO_+` (lengths only), `TWO` (neither).
    pub fn regime(&self) -> &'static str {
        match (self.representation_shown, self.lengths_announced) {
            (true, true) => "TWO++",
            (true, false) => "TWO+",
            (false, true) => "TWO_+",
            (false, false) => "TWO",
        }
    }

    pub fn announced_lengths(&self) -> Option<Vec<Coord>> {
        match (&self.class, self.lengths_announced) {
            (ClassSpec::TwoCountWithLengths { lengths }, true) => Some(lengths.clone()),
            (ClassSpec::Unit, true) => Some(vec![Coord::one()]),
            _ => None,
        }
    }
}

/// Why a strategy stopped presenting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "diagnostic", rename_all = "snake_case")]
pub enum StopReason {
    TargetReached,
    ConstructionComplete,
    StrategyFailure(String),
}

/// Non-local exit from a strategy's `play`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Halt {
    /// The palette reached the target; nothing further is presented.
    TargetReached,
    /// The construction could not proceed; carries a diagnostic.
    Failure(String),
    /// Referee-level error (illegal color, step cap).
    Game(GameError),
}

impl From<GameError> for Halt {
    fn from(e: GameError) -> Self {
        Halt::Game(e)
    }
}

/// One presentation as recorded in the transcript.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub seq: u64,
    pub reveal: Reveal,
    pub color: Color,
}

pub struct Arena<'a> {
    algorithm: &'a mut dyn OnlineAlgorithm,
    knowledge: KnowledgeSpec,
    preamble: Preamble,
    target: usize,
    max_steps: u64,
    graph: Graph,
    cert: Certificate,
    colors: Vec<Color>,
    palette: BTreeSet<Color>,
    steps: Vec<Step>,
    halted_early: bool,
    frontier: Coord,
    lengths_seen: BTreeSet<Coord>,
    violations: Vec<String>,
}

impl<'a> Arena<'a> {
    pub fn new(
        algorithm: &'a mut dyn OnlineAlgorithm,
        knowledge: KnowledgeSpec,
        clique_cap: usize,
        target: usize,
        seed: u64,
        max_steps: u64,
    ) -> Self {
        let preamble = Preamble {
            representation_shown: knowledge.representation_shown,
            announced_lengths: knowledge.announced_lengths(),
            clique_cap: Some(clique_cap),
            seed,
        };
        algorithm.start(&preamble);
        Arena {
            algorithm,
            knowledge,
            preamble,
            target,
            max_steps,
            graph: Graph::default(),
            cert: Certificate::default(),
            colors: Vec::new(),
            palette: BTreeSet::new(),
            steps: Vec::new(),
            halted_early: false,
            frontier: Coord::zero(),
            lengths_seen: BTreeSet::new(),
            violations: Vec::new(),
        }
    }

    pub fn preamble(&self) -> &Preamble {
        &self.preamble
    }

    pub fn knowledge(&self) -> &KnowledgeSpec {
        &self.knowledge
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Largest palette the opponent can have while the game is still running.
    pub fn palette_cap(&self) -> usize {
        self.target.saturating_sub(1)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn certificate(&self) -> &Certificate {
        &self.cert
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn palette_size(&self) -> usize {
        self.palette.len()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Distinct colors used on `vs`.
    pub fn color_set(&self, vs: &[VertexId]) -> BTreeSet<Color> {
        vs.iter().map(|&v| self.colors[v]).collect()
    }

    pub fn halted_early(&self) -> bool {
        self.halted_early
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }

    pub fn into_parts(self) -> ArenaRecord {
        ArenaRecord {
            preamble: self.preamble,
            graph: self.graph,
            certificate: self.cert,
            colors: self.colors,
            steps: self.steps,
            halted_early: self.halted_early,
            violations: self.violations,
        }
    }

    /// Leftmost point of untouched territory: strictly right of every
    /// interval ever placed and of every reservation, rounded to an integer.
    pub fn fresh_origin(&self) -> Coord {
        (&self.frontier + &Coord::from_int(2)).ceil()
    }

    /// Keep fresh territory to the right of `upto`.
    pub fn reserve(&mut self, upto: &Coord) {
        if *upto > self.frontier {
            self.frontier = upto.clone();
        }
    }

    /// Present a vertex with certificate interval `iv`. Neighbours are the
    /// intervals it meets.
    pub fn present(&mut self, iv: Interval) -> Result<Color, Halt> {
        let neighbors = self.cert.intersecting(&iv);
        self.emit(iv, neighbors)
    }

    /// Present a vertex whose intended neighbourhood is known abstractly;
    /// fails if the certificate disagrees.
    pub fn present_expecting(&mut self, iv: Interval, expected: &[VertexId]) -> Result<Color, Halt> {
        let neighbors = self.cert.intersecting(&iv);
        let mut want = expected.to_vec();
        want.sort_unstable();
        want.dedup();
        if neighbors != want {
            return Err(Halt::Failure(format!(
                "interval {iv} meets {neighbors:?} but the construction intends {want:?}"
            )));
        }
        self.emit(iv, neighbors)
    }

    fn emit(&mut self, iv: Interval, neighbors: Vec<VertexId>) -> Result<Color, Halt> {
        if self.palette.len() >= self.target {
            self.halted_early = true;
            return Err(Halt::TargetReached);
        }
        if self.steps.len() as u64 >= self.max_steps {
            return Err(Halt::Game(GameError::MaxSteps(self.max_steps)));
        }
        let vertex = self.colors.len();
        self.check_length(vertex, &iv);
        let reveal = Reveal {
            vertex,
            neighbors,
            interval: self.knowledge.representation_shown.then(|| iv.clone()),
        };
        let color = self.algorithm.step(&reveal);
        let name = || self.algorithm.name();
        if color == 0 {
            return Err(Halt::Game(GameError::ZeroColor { algorithm: name(), vertex }));
        }
        if let Some(&u) = reveal.neighbors.iter().find(|&&u| self.colors[u] == color) {
            return Err(Halt::Game(GameError::IllegalColor {
                algorithm: name(),
                vertex,
                color,
                neighbor: u,
            }));
        }
        self.graph.add_vertex(&reveal.neighbors);
        self.reserve(iv.right());
        self.cert.push(iv);
        self.colors.push(color);
        self.palette.insert(color);
        self.steps.push(Step {
            seq: self.steps.len() as u64 + 1,
            reveal,
            color,
        });
        Ok(color)
    }

    /// Move already-presented vertices to new certificate positions. Only
    /// legal while the representation is hidden, and only if the presented
    /// graph is unchanged; both are checked.
    pub fn relocate(&mut self, moves: Vec<(VertexId, Interval)>) -> Result<(), Halt> {
        if self.knowledge.representation_shown {
            return Err(Halt::Failure("relocation attempted in a representation-shown game".into()));
        }
        let moved: Vec<VertexId> = moves.iter().map(|(v, _)| *v).collect();
        for (v, iv) in moves {
            self.check_length(v, &iv);
            self.reserve(iv.right());
            self.cert.set(v, iv);
        }
        for &v in &moved {
            let mut got = self.cert.intersecting(self.cert.get(v));
            got.retain(|&u| u != v);
            let want: Vec<VertexId> = self.graph.neighbors(v).collect();
            if got != want {
                return Err(Halt::Failure(format!(
                    "relocated vertex {v} to {} meets {got:?}, graph says {want:?}",
                    self.cert.get(v)
                )));
            }
        }
        Ok(())
    }

    /// Translate every listed vertex by `by`.
    pub fn translate(&mut self, vs: &[VertexId], by: &Coord) -> Result<(), Halt> {
        let moves = vs.iter().map(|&v| (v, self.cert.get(v).translate(by))).collect();
        self.relocate(moves)
    }

    fn check_length(&mut self, v: VertexId, iv: &Interval) {
        let len = iv.length();
        if !self.knowledge.class.admits_length(&len) {
            self.violations
                .push(format!("vertex {v} placed at {iv}: length {len} outside {}", self.knowledge.class));
        }
        if let Some(lengths) = &self.preamble.announced_lengths {
            if !lengths.contains(&len) {
                self.violations.push(format!("vertex {v}: length {len} was not announced"));
            }
        }
        self.lengths_seen.insert(len);
        if matches!(self.knowledge.class, ClassSpec::TwoCount) && self.lengths_seen.len() > 2 {
            self.violations
                .push(format!("vertex {v}: {} distinct lengths used so far", self.lengths_seen.len()));
        }
    }
}

/// Everything a finished arena hands back to the harness.
#[derive(Clone, Debug)]
pub struct ArenaRecord {
    pub preamble: Preamble,
    pub graph: Graph,
    pub certificate: Certificate,
    pub colors: Vec<Color>,
    pub steps: Vec<Step>,
    pub halted_early: bool,
    pub violations: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{FirstFit, Wasteful};

    fn knowledge(shown: bool) -> KnowledgeSpec {
        KnowledgeSpec {
            representation_shown: shown,
            lengths_announced: false,
            class: ClassSpec::Interval,
        }
    }

    #[test]
    fn hidden_reveals_carry_no_interval() {
        let mut ff = FirstFit::new();
        let mut arena = Arena::new(&mut ff, knowledge(false), 2, 10, 0, 100);
        arena.present(Interval::from_ints(0, 1).unwrap()).unwrap();
        arena.present(Interval::from_ints(1, 2).unwrap()).unwrap();
        let rec = arena.into_parts();
        assert!(rec.steps.iter().all(|s| s.reveal.interval.is_none()));
        assert_eq!(rec.steps[1].reveal.neighbors, vec![0]);
        assert_eq!(rec.colors, vec![1, 2]);
    }

    #[test]
    fn early_win_refuses_further_presentations() {
        let mut w = Wasteful::default();
        let mut arena = Arena::new(&mut w, knowledge(true), 1, 2, 0, 100);
        arena.present(Interval::from_ints(0, 1).unwrap()).unwrap();
        arena.present(Interval::from_ints(5, 6).unwrap()).unwrap();
        assert_eq!(arena.present(Interval::from_ints(9, 10).unwrap()), Err(Halt::TargetReached));
        assert!(arena.halted_early());
        assert_eq!(arena.len(), 2);
    }

    #[test]
    fn relocation_must_preserve_graph() {
        let mut ff = FirstFit::new();
        let mut arena = Arena::new(&mut ff, knowledge(false), 2, 10, 0, 100);
        arena.present(Interval::from_ints(0, 1).unwrap()).unwrap();
        arena.present(Interval::from_ints(5, 6).unwrap()).unwrap();
        assert!(arena.translate(&[1], &Coord::from_int(10)).is_ok());
        assert!(matches!(arena.translate(&[1], &Coord::from_int(-15)), Err(Halt::Failure(_))));
    }

    #[test]
    fn relocation_forbidden_when_shown() {
        let mut ff = FirstFit::new();
        let mut arena = Arena::new(&mut ff, knowledge(true), 2, 10, 0, 100);
        arena.present(Interval::from_ints(0, 1).unwrap()).unwrap();
        assert!(matches!(arena.translate(&[0], &Coord::one()), Err(Halt::Failure(_))));
    }

    #[test]
    fn step_cap_is_an_error() {
        let mut ff = FirstFit::new();
        let mut arena = Arena::new(&mut ff, knowledge(true), 2, 10, 0, 1);
        arena.present(Interval::from_ints(0, 1).unwrap()).unwrap();
        assert_eq!(
            arena.present(Interval::from_ints(3, 4).unwrap()),
            Err(Halt::Game(GameError::MaxSteps(1)))
        );
    }
}
