//! The representation-shown game on grid-aligned unit intervals.

use crate::coord::Coord;
use crate::error::OracleError;
use crate::interval::Interval;

use super::{Game, Solver};

type Item = (u8, u8);

struct RepGame {
    /// `adj[i][j]`: the unit intervals at grid slots `i` and `j` meet.
    adj: Vec<Vec<bool>>,
    /// `covers[i][j]`: the interval at slot `j` contains the left end of slot `i`.
    covers: Vec<Vec<bool>>,
    cap: usize,
    /// The slot grid is symmetric under reflecting the window.
    mirror: bool,
}

impl RepGame {
    fn new(grid: &Coord, window: &Interval, cap: usize) -> Result<Self, OracleError> {
        let one = Coord::one();
        let mut lefts = Vec::new();
        let mut x = window.left().clone();
        while &x + &one <= *window.right() {
            lefts.push(x.clone());
            x = &x + grid;
            if lefts.len() > u8::MAX as usize {
                return Err(OracleError::BadSpec(format!("window {window} has more than 255 grid slots")));
            }
        }
        let ivs: Vec<Interval> = lefts.iter().map(|l| Interval::unit(l.clone())).collect();
        let adj = ivs.iter().map(|a| ivs.iter().map(|b| a.intersects(b)).collect()).collect();
        let covers = lefts
            .iter()
            .map(|l| ivs.iter().map(|iv| iv.contains_point(l)).collect())
            .collect();
        let last = lefts.last().expect("window admits one unit interval");
        let mirror = last + &one == *window.right();
        Ok(RepGame { adj, covers, cap, mirror })
    }

    fn clique(&self, items: &[Item]) -> usize {
        items
            .iter()
            .map(|&(i, _)| items.iter().filter(|&&(j, _)| self.covers[i as usize][j as usize]).count())
            .max()
            .unwrap_or(0)
    }

    fn encode(items: impl Iterator<Item = Item>) -> Vec<Item> {
        let mut v: Vec<Item> = items.collect();
        v.sort_unstable();
        let mut rename = [0u8; 256];
        let mut next = 0u8;
        for item in &mut v {
            let c = &mut rename[item.1 as usize];
            if *c == 0 {
                next += 1;
                *c = next;
            }
            item.1 = *c;
        }
        v
    }
}

impl Game for RepGame {
    type State = Vec<Item>;
    type Key = (Vec<Item>, usize);

    fn key(&self, s: &Self::State, moves_left: usize) -> Self::Key {
        let plain = Self::encode(s.iter().copied());
        if !self.mirror {
            return (plain, moves_left);
        }
        let top = self.adj.len() as u8 - 1;
        let flipped = Self::encode(s.iter().map(|&(p, c)| (top - p, c)));
        (plain.min(flipped), moves_left)
    }

    fn palette(&self, s: &Self::State) -> usize {
        s.iter().map(|&(_, c)| c as usize).max().unwrap_or(0)
    }

    fn moves(&self, s: &Self::State) -> Vec<Vec<Self::State>> {
        let palette = self.palette(s) as u8;
        let mut out = Vec::new();
        for p in 0..self.adj.len() as u8 {
            let mut grown = s.clone();
            grown.push((p, 0));
            if self.clique(&grown) > self.cap {
                continue;
            }
            let replies = (1..=palette + 1)
                .filter(|&c| !s.iter().any(|&(q, d)| d == c && self.adj[p as usize][q as usize]))
                .map(|c| {
                    let mut next = s.clone();
                    next.push((p, c));
                    next
                })
                .collect();
            out.push(replies);
        }
        out
    }
}

pub(super) fn solve(grid: &Coord, window: &Interval, cap: usize, moves: usize) -> Result<(usize, u64), OracleError> {
    let mut solver = Solver::new(RepGame::new(grid, window, cap)?);
    let value = solver.value(&Vec::new(), moves)?;
    Ok((value, solver.nodes()))
}
