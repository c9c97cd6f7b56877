//! Strategies matching the Kierstead–Trotter bound.

use crate::arena::{Arena, Halt, KnowledgeSpec};
use crate::certificate::ClassSpec;
use crate::coord::Coord;
use crate::error::GameError;
use crate::graph::VertexId;
use crate::interval::{hull_of, Interval};

use super::blocks::{play_el_block, present_copies, seg, unit_at};
use super::{bad, set_count, Buckets, Claim, Opponent, StatedClaim, Strategy};

/// Representation-shown strategy forcing `3w-2` colors with clique `w` on
/// unrestricted intervals.
#[derive(Clone, Debug)]
pub struct KtStrategy {
    w: usize,
}

struct KtBlock {
    vertices: Vec<VertexId>,
    hull: Interval,
}

impl KtStrategy {
    pub fn new(w: usize) -> Result<Self, GameError> {
        if w == 0 {
            return Err(bad("kt-strategy needs w >= 1"));
        }
        Ok(KtStrategy { w })
    }

    /// Sub-blocks needed before some color set is held by four of them.
    fn block_budget(cap: usize, w: usize) -> u128 {
        let min_set = (3 * w).saturating_sub(5).max(1);
        set_count(cap, min_set).saturating_mul(3).saturating_add(1)
    }

    fn play_level(arena: &mut Arena, w: usize, cursor: &Coord) -> Result<KtBlock, Halt> {
        let half = Coord::ratio(1, 2);
        let one = Coord::one();
        if w == 1 {
            let iv = unit_at(cursor.clone());
            arena.present(iv.clone())?;
            return Ok(KtBlock {
                vertices: vec![arena.len() - 1],
                hull: iv,
            });
        }
        let budget = Self::block_budget(arena.palette_cap(), w);
        let mut buckets: Buckets<KtBlock> = Buckets::default();
        let mut vertices = Vec::new();
        let mut next = cursor.clone();
        let four = loop {
            if buckets.total() as u128 > budget {
                return Err(Halt::Failure(format!(
                    "KT⟨{w}⟩: {budget} sub-blocks without four sharing a color set"
                )));
            }
            let blk = Self::play_level(arena, w - 1, &next)?;
            next = blk.hull.right() + Coord::from_int(3);
            vertices.extend(&blk.vertices);
            let key = arena.color_set(&blk.vertices);
            if buckets.insert(key.clone(), blk) == 4 {
                break buckets.take(&key);
            }
        };
        let [ha, hb, hc, hd] = [&four[0].hull, &four[1].hull, &four[2].hull, &four[3].hull];
        let p_ab = hb.left() - &one;
        let r_bc = hc.left() - &one;
        let q_cd = hd.left() - &one;

        let mut present = |iv: Interval| -> Result<_, Halt> {
            let c = arena.present(iv)?;
            vertices.push(arena.len() - 1);
            Ok(c)
        };
        let ca = present(seg(ha.left() - &half, p_ab.clone())?)?;
        let cd = present(seg(q_cd.clone(), hd.right() + &half)?)?;
        if ca != cd {
            present(seg(p_ab, q_cd)?)?;
        } else {
            present(seg(p_ab, r_bc.clone())?)?;
            present(seg(r_bc, q_cd)?)?;
        }
        let hull = hull_of(vertices.iter().map(|&v| arena.certificate().get(v))).expect("non-empty block");
        Ok(KtBlock { vertices, hull })
    }
}

impl Strategy for KtStrategy {
    fn name(&self) -> String {
        format!("kt-strategy:w={}", self.w)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        KnowledgeSpec {
            representation_shown: true,
            lengths_announced: false,
            class: ClassSpec::Interval,
        }
    }

    fn claim(&self) -> Claim {
        Claim::new(3 * self.w - 2, self.w, ClassSpec::Interval, Opponent::AnyDeterministic)
    }

    fn budget(&self) -> Option<u128> {
        let cap = 3 * self.w - 3;
        let mut total: u128 = 1;
        for w in 2..=self.w {
            total = Self::block_budget(cap, w).saturating_mul(total).saturating_add(3);
        }
        Some(total)
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        let start = arena.fresh_origin();
        Self::play_level(arena, self.w, &start).map(|_| ())
    }
}

/// Unit-interval strategy aimed at the Kierstead–Trotter algorithm itself.
#[derive(Clone, Debug)]
pub struct KtPrimeStrategy {
    w: usize,
    a: Coord,
}

impl KtPrimeStrategy {
    pub fn new(w: usize, a: Coord) -> Result<Self, GameError> {
        if w == 0 {
            return Err(bad("kt-prime needs w >= 1"));
        }
        Ok(KtPrimeStrategy { w, a })
    }

    /// Plays level `w` starting at `a`; returns the right end of everything
    /// presented.
    fn play_level(arena: &mut Arena, w: usize, a: &Coord) -> Result<Coord, Halt> {
        match w {
            1 => {
                arena.present(unit_at(a.clone()))?;
                return Ok(a + Coord::one());
            }
            2 => {
                play_el_block(arena, 1, a)?;
                return Ok(a + Coord::from_int(3));
            }
            _ => {}
        }
        let sup = Self::play_level(arena, w - 1, a)?;
        let base = sup + Coord::one();
        for u in 0..5 {
            let copies = if u % 2 == 0 { w / 2 } else { (w - 1) / 2 };
            present_copies(arena, &unit_at(&base + Coord::from_int(u)), copies)?;
        }
        for offset in [(1, 2), (7, 2), (3, 2), (5, 2)] {
            arena.present(unit_at(&base + Coord::ratio(offset.0, offset.1)))?;
        }
        Ok(base + Coord::from_int(5))
    }
}

impl Strategy for KtPrimeStrategy {
    fn name(&self) -> String {
        format!("kt-prime:w={},a={}", self.w, self.a)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        KnowledgeSpec {
            representation_shown: true,
            lengths_announced: false,
            class: ClassSpec::Unit,
        }
    }

    fn claim(&self) -> Claim {
        let forced = if self.w == 1 { 1 } else { 3 * self.w - 3 };
        Claim::new(forced, self.w, ClassSpec::Unit, Opponent::KtOnly).with_stated(StatedClaim {
            forced_colors: (self.w >= 3).then_some(3 * self.w - 2),
            note: "group copies alternate between ceil((w-1)/2) and floor((w-1)/2) to keep the clique at w".into(),
            ..StatedClaim::default()
        })
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        Self::play_level(arena, self.w, &self.a).map(|_| ())
    }
}
