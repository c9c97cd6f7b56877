//! Base constructions reused by the composite strategies.

use std::collections::BTreeSet;

use crate::algorithms::Color;
use crate::arena::{Arena, Halt};
use crate::coord::Coord;
use crate::graph::VertexId;
use crate::interval::Interval;

use super::{binom, Buckets};

pub(crate) fn seg(left: Coord, right: Coord) -> Result<Interval, Halt> {
    Interval::new(left, right).map_err(|e| Halt::Failure(e.to_string()))
}

pub(crate) fn unit_at(left: Coord) -> Interval {
    Interval::unit(left)
}

/// Present `copies` copies of `iv`; returns their ids.
pub(crate) fn present_copies(arena: &mut Arena, iv: &Interval, copies: usize) -> Result<Vec<VertexId>, Halt> {
    (0..copies)
        .map(|_| {
            arena.present(iv.clone())?;
            Ok(arena.len() - 1)
        })
        .collect()
}

/// Trace of one EL play.
#[derive(Clone, Debug)]
pub struct ElBlock {
    pub vertices: Vec<VertexId>,
    /// Colors of Phase I.
    pub old: BTreeSet<Color>,
    /// Final window `(L, R)` of Phase II.
    pub window: (Coord, Coord),
    pub b: Coord,
}

/// Unit-interval construction inside `[a, a+3]` forcing `3k` colors with
/// clique `2k`.
///
/// Phase II keeps the invariant that every interval whose center is left of
/// the window got an old color and every interval right of it a new one, so
/// the Phase III copies at `[b-1, b]` see `k` new colors and Phase I.
pub fn play_el_block(arena: &mut Arena, k: usize, a: &Coord) -> Result<ElBlock, Halt> {
    let one = Coord::one();
    let two = Coord::from_int(2);
    let mut vertices = present_copies(arena, &unit_at(a.clone()), k)?;
    let old = arena.color_set(&vertices);

    let mut l = a + &one;
    let mut r = a + Coord::from_int(3);
    let mut lefts = Vec::with_capacity(2 * k);
    for _ in 0..2 * k {
        let center = (&l + &r) / &two;
        let left = &center - Coord::ratio(1, 2);
        let color = arena.present(unit_at(left.clone()))?;
        vertices.push(arena.len() - 1);
        lefts.push(left);
        if old.contains(&color) {
            r = (&l + &r + &one) / &two;
        } else {
            l = (&l + &r - &one) / &two;
        }
    }

    lefts.sort();
    let b = lefts[k - 1].clone();
    vertices.extend(present_copies(arena, &unit_at(&b - &one), k)?);
    Ok(ElBlock {
        vertices,
        old,
        window: (l, r),
        b,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsVariant {
    /// Offsets exactly as originally written.
    Verbatim,
    /// Offsets that keep clique `k` and span `[a, a+4]`.
    Repaired,
}

/// The non-adaptive three-staircase intervals, in presentation order.
pub fn cs_intervals(k: usize, a: &Coord, variant: CsVariant) -> Vec<Interval> {
    let lambda = Coord::ratio(1, k as i64);
    let at = |offset: Coord| unit_at(a + offset);
    let step = |i: usize| &lambda * Coord::from_int(i as i64);
    let mut out = Vec::with_capacity(3 * k - 1);
    out.extend((1..=k).map(|i| at(step(i))));
    match variant {
        CsVariant::Verbatim => {
            out.extend((k + 1..=2 * k).map(|i| at(step(i + 1) + Coord::from_int(2))));
            out.extend((2 * k + 1..3 * k).map(|i| at(step(i + 1) + Coord::one())));
        }
        CsVariant::Repaired => {
            out.extend((1..=k).map(|i| at(step(i) + Coord::from_int(2))));
            let half = Coord::ratio(1, 2);
            out.extend((1..k).map(|m| at(Coord::one() + (Coord::from_int(m as i64) + &half) * &lambda)));
        }
    }
    out
}

pub fn play_cs_block(arena: &mut Arena, k: usize, a: &Coord, variant: CsVariant) -> Result<Vec<VertexId>, Halt> {
    cs_intervals(k, a, variant)
        .into_iter()
        .map(|iv| {
            arena.present(iv)?;
            Ok(arena.len() - 1)
        })
        .collect()
}

/// Outcome of one B play: the pigeonholed core and everything else.
#[derive(Clone, Debug)]
pub struct BBlock {
    pub core: Vec<VertexId>,
    pub junk: Vec<VertexId>,
}

/// Most k-cliques B may present before two must share a color set, given
/// the arena's palette cap.
pub fn b_clique_budget(palette_cap: usize, k: usize) -> u128 {
    binom(palette_cap, k).saturating_add(1)
}

/// Representation-hidden construction forcing `2k-1` colors with clique `k`.
///
/// Cliques are first placed in fresh territory; the same-colored pair is then
/// moved onto the staircase inside `[a, a+4]` (which is reserved up front).
pub fn play_b_block(arena: &mut Arena, k: usize, a: &Coord) -> Result<BBlock, Halt> {
    arena.reserve(&(a + Coord::from_int(4)));
    let budget = b_clique_budget(arena.palette_cap(), k);
    let mut buckets: Buckets<Vec<VertexId>> = Buckets::default();
    let mut all: Vec<VertexId> = Vec::new();
    let pair = loop {
        if buckets.total() as u128 > budget {
            return Err(Halt::Failure(format!(
                "B⟨{k}⟩: {budget} cliques presented without two sharing a color set"
            )));
        }
        let clique = present_copies(arena, &unit_at(arena.fresh_origin()), k)?;
        all.extend(&clique);
        let key = arena.color_set(&clique);
        if key.len() != k {
            return Err(Halt::Failure(format!("B⟨{k}⟩: clique colored with {key:?}")));
        }
        if buckets.insert(key.clone(), clique) == 2 {
            let both = buckets.take(&key);
            break (both[0].clone(), both[1].clone());
        }
    };

    let (mut s, mut t) = pair;
    s.sort_by_key(|&v| arena.color(v));
    t.sort_by_key(|&v| arena.color(v));
    let delta = Coord::ratio(1, 2 * k as i64);
    let at = |j: usize, shift: Coord| unit_at(a + &delta * Coord::from_int(j as i64) + shift);
    let mut moves = Vec::with_capacity(2 * k);
    for (j, &v) in s.iter().enumerate() {
        moves.push((v, at(j + 1, Coord::zero())));
    }
    let t_shift = Coord::from_int(2) + &delta / Coord::from_int(4);
    for (h, &v) in t.iter().enumerate() {
        moves.push((v, at(h + 1, t_shift.clone())));
    }
    arena.relocate(moves)?;

    let x_shift = Coord::one() + &delta / Coord::from_int(2);
    let mut xs: Vec<VertexId> = Vec::with_capacity(k.saturating_sub(1));
    for i in 1..k {
        let mut expected: Vec<VertexId> = s[i..].to_vec();
        expected.extend(&t[..i]);
        expected.extend(&xs);
        arena.present_expecting(at(i, x_shift.clone()), &expected)?;
        xs.push(arena.len() - 1);
    }

    let mut core: Vec<VertexId> = s.iter().chain(&t).chain(&xs).copied().collect();
    core.sort_unstable();
    let junk = all.into_iter().filter(|v| !core.contains(v)).collect();
    Ok(BBlock { core, junk })
}
