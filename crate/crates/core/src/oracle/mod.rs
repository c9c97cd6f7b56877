//! Brute-force ground truth for tiny instances: offline chromatic numbers
//! and exact minimax values of small online coloring games.
//!
//! Both game solvers return the number of colors an optimal adversary can
//! force on an optimal online algorithm within `max_moves` presentations.
//! The algorithm's replies are limited to colors `1..=palette+1`; a color
//! further out is equivalent to `palette+1` up to renaming.

mod abstract_game;
mod rep_game;
mod unit_graph;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::error::OracleError;
use crate::graph::Graph;
use crate::interval::Interval;

pub use unit_graph::{is_unit_interval_graph, umbrella_ordering, unit_representation};

pub const CHROMATIC_LIMIT: usize = 16;
pub const MAX_MOVES_LIMIT: usize = 12;
pub const CLIQUE_CAP_LIMIT: usize = 2;
/// Searches that visit more nodes than this give up with an error.
pub const NODE_LIMIT: u64 = 50_000_000;

/// Exact chromatic number by increasing-k backtracking.
pub fn brute_chromatic(g: &Graph) -> Result<usize, OracleError> {
    let n = g.len();
    if n > CHROMATIC_LIMIT {
        return Err(OracleError::TooManyVertices {
            got: n,
            limit: CHROMATIC_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    // Highest degree first keeps the backtracking shallow.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![0usize; n];

    fn assign(g: &Graph, order: &[usize], i: usize, k: usize, colors: &mut [usize]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        // Colors are introduced in order, so a new one is only ever max+1.
        let highest = order[..i].iter().map(|&u| colors[u]).max().unwrap_or(0);
        for c in 1..=k.min(highest + 1) {
            if g.neighbors(v).any(|u| colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if assign(g, order, i + 1, k, colors) {
                return true;
            }
        }
        colors[v] = 0;
        false
    }

    let k = (1..=n)
        .find(|&k| assign(g, &order, 0, k, &mut colors))
        .expect("n colors always suffice");
    Ok(k)
}

/// Which game is solved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GameMode {
    /// Unit intervals with left ends on `window.left + j * grid`, inside
    /// `window`, shown to the algorithm.
    Representation { grid: Coord, window: Interval },
    /// The algorithm sees only the graph, which must stay a unit-interval
    /// graph.
    AbstractUnit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameSpec {
    pub mode: GameMode,
    pub clique_cap: usize,
    pub max_moves: usize,
}

impl GameSpec {
    pub fn representation(clique_cap: usize, grid: Coord, window: Interval, max_moves: usize) -> Self {
        GameSpec {
            mode: GameMode::Representation { grid, window },
            clique_cap,
            max_moves,
        }
    }

    pub fn abstract_unit(clique_cap: usize, max_moves: usize) -> Self {
        GameSpec {
            mode: GameMode::AbstractUnit,
            clique_cap,
            max_moves,
        }
    }

    fn check(&self) -> Result<(), OracleError> {
        if self.max_moves > MAX_MOVES_LIMIT {
            return Err(OracleError::TooManyMoves {
                got: self.max_moves,
                limit: MAX_MOVES_LIMIT,
            });
        }
        if self.clique_cap == 0 || self.clique_cap > CLIQUE_CAP_LIMIT {
            return Err(OracleError::CliqueCap {
                got: self.clique_cap,
                limit: CLIQUE_CAP_LIMIT,
            });
        }
        if let GameMode::Representation { grid, window } = &self.mode {
            if !grid.is_positive() {
                return Err(OracleError::BadSpec(format!("grid step {grid} must be positive")));
            }
            if window.length() < Coord::one() {
                return Err(OracleError::BadSpec(format!("window {window} is shorter than a unit interval")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleValue {
    pub value: usize,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

pub fn game_value_representation(spec: &GameSpec) -> Result<OracleValue, OracleError> {
    spec.check()?;
    let GameMode::Representation { grid, window } = &spec.mode else {
        return Err(OracleError::BadSpec("expected representation mode".into()));
    };
    timed(|| rep_game::solve(grid, window, spec.clique_cap, spec.max_moves))
}

pub fn game_value_abstract(spec: &GameSpec) -> Result<OracleValue, OracleError> {
    spec.check()?;
    if spec.mode != GameMode::AbstractUnit {
        return Err(OracleError::BadSpec("expected abstract mode".into()));
    }
    timed(|| abstract_game::solve(spec.clique_cap, spec.max_moves))
}

fn timed(solve: impl FnOnce() -> Result<(usize, u64), OracleError>) -> Result<OracleValue, OracleError> {
    let start = Instant::now();
    let (value, nodes_explored) = solve()?;
    Ok(OracleValue {
        value,
        nodes_explored,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Shared minimax driver. `S` is a game state, canonicalized by `key`.
pub(crate) trait Game {
    type State;
    type Key: std::hash::Hash + Eq;

    fn key(&self, s: &Self::State, moves_left: usize) -> Self::Key;
    fn palette(&self, s: &Self::State) -> usize;
    /// States reachable by one presentation, each with the reply options
    /// already applied: outer vec per adversary move, inner per reply.
    fn moves(&self, s: &Self::State) -> Vec<Vec<Self::State>>;
}

pub(crate) struct Solver<G: Game> {
    game: G,
    memo: std::collections::HashMap<G::Key, usize>,
    nodes: u64,
}

impl<G: Game> Solver<G> {
    pub fn new(game: G) -> Self {
        Solver {
            game,
            memo: Default::default(),
            nodes: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Forced palette size from `s` with `moves_left` presentations.
    pub fn value(&mut self, s: &G::State, moves_left: usize) -> Result<usize, OracleError> {
        let here = self.game.palette(s);
        if moves_left == 0 {
            return Ok(here);
        }
        let key = self.game.key(s, moves_left);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(OracleError::NodeBudget(self.nodes));
        }
        // Each move adds at most one color.
        let ceiling = here + moves_left;
        let mut best = here;
        for replies in self.game.moves(s) {
            let mut worst = usize::MAX;
            for next in replies {
                let v = self.value(&next, moves_left - 1)?;
                worst = worst.min(v);
                if worst <= best {
                    break;
                }
            }
            best = best.max(worst);
            if best == ceiling {
                break;
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }
}
