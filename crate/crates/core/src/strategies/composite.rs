//! The four-slot cover chain shared by the sigma recursion and the
//! lengths-known 2-count strategy.
//!
//! Blocks are played in fresh territory and bucketed by color set. Within
//! a bucket, a `k`-clique of long intervals (a wave) is laid over each
//! block except the two most recent, until two waves repeat a color set.
//! The two repeated waves, with their blocks, and the two uncovered blocks
//! are then moved into four consecutive slots, and two more waves are
//! presented that chain the slots together.

use std::collections::{BTreeMap, BTreeSet};

use crate::algorithms::Color;
use crate::arena::{Arena, Halt};
use crate::coord::Coord;
use crate::graph::VertexId;
use crate::interval::Interval;

use super::blocks::seg;
use super::binom;

/// A finished sub-construction whose core vertices lie inside
/// `[lo, lo + width]`. Everything else it presented lies right of
/// `lo + width + 1`.
#[derive(Clone, Debug)]
pub struct Block {
    pub core: Vec<VertexId>,
    pub lo: Coord,
}

/// Geometry of one chain level.
#[derive(Clone, Debug)]
pub struct CoverChain {
    /// Clique size of each covering wave.
    pub k: usize,
    /// Width of a child block's window.
    pub width: Coord,
    /// Margin between a child window and its covering wave. At most 1.
    pub gap: Coord,
}

impl CoverChain {
    pub fn pitch(&self) -> Coord {
        &self.width + &self.gap * Coord::from_int(2)
    }

    /// Width of the window the whole chain occupies.
    pub fn outer_width(&self) -> Coord {
        self.pitch() * Coord::from_int(4)
    }

    /// Worst-case number of child blocks before some bucket fills.
    pub fn block_budget(&self, cap: usize) -> u128 {
        let mut total: u128 = 1;
        for size in 1..=cap {
            let per_bucket = binom(cap - size, self.k).saturating_add(2);
            total = total.saturating_add(binom(cap, size).saturating_mul(per_bucket));
        }
        total
    }
}

/// Run one chain level with its window starting at `o`. `child` plays a
/// block whose window starts at the coordinate it is given.
pub fn cover_chain(
    arena: &mut Arena,
    chain: &CoverChain,
    o: &Coord,
    child: &mut dyn FnMut(&mut Arena, &Coord) -> Result<Block, Halt>,
) -> Result<Block, Halt> {
    assert!(chain.gap <= Coord::one() && !chain.gap.is_negative());
    let k = chain.k;
    let pitch = chain.pitch();
    // a parent wave may reach one unit past the window
    arena.reserve(&(o + chain.outer_width() + Coord::one()));
    let cap = arena.palette_cap();
    let budget = chain.block_budget(cap);

    let cover = |lo: &Coord| seg(lo - &chain.gap, lo + &chain.width + &chain.gap);

    // Per color set: blocks in arrival order and the waves laid over the
    // first of them. Two blocks per bucket are always kept uncovered.
    let mut buckets: BTreeMap<BTreeSet<Color>, (Vec<Block>, Vec<Vec<VertexId>>)> = BTreeMap::new();
    let mut played: u128 = 0;
    let (blocks, waves, i, j) = 'search: loop {
        if played > budget {
            return Err(Halt::Failure(format!(
                "cover chain: {budget} child blocks without two repeated waves"
            )));
        }
        let lo = arena.fresh_origin();
        let blk = child(arena, &lo)?;
        played += 1;
        arena.reserve(&(&lo + &chain.width + &chain.gap));
        let key = arena.color_set(&blk.core);
        let (blocks, waves) = buckets.entry(key).or_default();
        blocks.push(blk);
        while blocks.len() - waves.len() > 2 {
            let blk = &blocks[waves.len()];
            let iv = cover(&blk.lo)?;
            let mut wave = Vec::with_capacity(k);
            for _ in 0..k {
                let mut expected = blk.core.clone();
                expected.extend(&wave);
                arena.present_expecting(iv.clone(), &expected)?;
                wave.push(arena.len() - 1);
            }
            let colors = arena.color_set(&wave);
            let earlier = waves.iter().position(|w| arena.color_set(w) == colors);
            waves.push(wave);
            if let Some(i) = earlier {
                let j = waves.len() - 1;
                break 'search (std::mem::take(blocks), std::mem::take(waves), i, j);
            }
        }
    };
    let n = blocks.len();
    debug_assert_eq!(n, waves.len() + 2);

    // final layout: block i + wave i, block n-2, block n-1, block j + wave j
    let slot_lo = |u: i64| o + &pitch * Coord::from_int(u) + &chain.gap;
    let mut carried: Vec<(Vec<VertexId>, Coord, Coord)> = Vec::new();
    for (u, t) in [(0, i), (3, j)] {
        let mut vs = blocks[t].core.clone();
        vs.extend(&waves[t]);
        carried.push((vs, blocks[t].lo.clone(), slot_lo(u)));
    }
    for (u, t) in [(1, n - 2), (2, n - 1)] {
        carried.push((blocks[t].core.clone(), blocks[t].lo.clone(), slot_lo(u)));
    }
    let mut moves: Vec<(VertexId, Interval)> = Vec::new();
    for (vs, from, to) in &carried {
        let by = to - from;
        moves.extend(vs.iter().map(|&v| (v, arena.certificate().get(v).translate(&by))));
    }
    arena.relocate(moves)?;

    let mut wave_a = Vec::with_capacity(k);
    let iv = cover(&slot_lo(1))?;
    for _ in 0..k {
        let mut expected = blocks[n - 2].core.clone();
        expected.extend(&waves[i]);
        expected.extend(&wave_a);
        arena.present_expecting(iv.clone(), &expected)?;
        wave_a.push(arena.len() - 1);
    }
    let mut wave_b = Vec::with_capacity(k);
    let iv = cover(&slot_lo(2))?;
    for _ in 0..k {
        let mut expected = blocks[n - 1].core.clone();
        expected.extend(&wave_a);
        expected.extend(&waves[j]);
        expected.extend(&wave_b);
        arena.present_expecting(iv.clone(), &expected)?;
        wave_b.push(arena.len() - 1);
    }

    let mut core: Vec<VertexId> = carried.into_iter().flat_map(|(vs, _, _)| vs).collect();
    core.extend(wave_a);
    core.extend(wave_b);
    core.sort_unstable();
    Ok(Block { core, lo: o.clone() })
}
