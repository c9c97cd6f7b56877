//! Strategies on graphs whose representations use at most two lengths.

use crate::arena::{Arena, Halt, KnowledgeSpec};
use crate::certificate::ClassSpec;
use crate::coord::Coord;
use crate::error::GameError;

use super::blocks::{play_b_block, play_cs_block, play_el_block, present_copies, seg, CsVariant};
use super::composite::{cover_chain, Block, CoverChain};
use super::{bad, binom, set_count, Buckets, Claim, Opponent, StatedClaim, Strategy};

fn check_k(k: usize, family: &str) -> Result<(), GameError> {
    if k == 0 {
        return Err(bad(format!("{family} needs k >= 1")));
    }
    Ok(())
}

/// First-Fit specific: four repaired CS blocks joined by four long waves.
#[derive(Clone, Debug)]
pub struct FfTwoCount {
    k: usize,
}

impl FfTwoCount {
    pub fn new(k: usize) -> Result<Self, GameError> {
        check_k(k, "ff-two-count")?;
        Ok(FfTwoCount { k })
    }

    fn class() -> ClassSpec {
        ClassSpec::with_lengths([Coord::one(), Coord::from_int(8)])
    }
}

impl Strategy for FfTwoCount {
    fn name(&self) -> String {
        format!("ff-two-count:k={}", self.k)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        KnowledgeSpec {
            representation_shown: true,
            lengths_announced: false,
            class: Self::class(),
        }
    }

    fn claim(&self) -> Claim {
        Claim::new(5 * self.k - 1, 2 * self.k, Self::class(), Opponent::FirstFitOnly)
    }

    fn budget(&self) -> Option<u128> {
        Some(4 * (3 * self.k as u128 - 1) + 4 * self.k as u128)
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        for a in [0, 7, 14, 21] {
            play_cs_block(arena, self.k, &Coord::from_int(a), CsVariant::Repaired)?;
        }
        for (l, r) in [(-2, 6), (19, 27), (5, 13), (12, 20)] {
            present_copies(arena, &seg(Coord::from_int(l), Coord::from_int(r))?, self.k)?;
        }
        Ok(())
    }
}

/// Representation hidden, lengths `{1, 4}` announced: a cover chain of B
/// blocks with length-4 waves laid exactly over the block windows.
#[derive(Clone, Debug)]
pub struct TcLengthsKnown {
    k: usize,
}

impl TcLengthsKnown {
    pub fn new(k: usize) -> Result<Self, GameError> {
        check_k(k, "tc-lengths")?;
        Ok(TcLengthsKnown { k })
    }

    fn class() -> ClassSpec {
        ClassSpec::with_lengths([Coord::one(), Coord::from_int(4)])
    }

    fn chain(&self) -> CoverChain {
        CoverChain {
            k: self.k,
            width: Coord::from_int(4),
            gap: Coord::zero(),
        }
    }
}

impl Strategy for TcLengthsKnown {
    fn name(&self) -> String {
        format!("tc-lengths:k={}", self.k)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        KnowledgeSpec {
            representation_shown: false,
            lengths_announced: true,
            class: Self::class(),
        }
    }

    fn claim(&self) -> Claim {
        Claim::new(5 * self.k - 1, 2 * self.k, Self::class(), Opponent::AnyDeterministic).with_stated(StatedClaim {
            forced_colors: Some(5 * self.k),
            note: "construction accounts for (2k-1) + 3k colors".into(),
            ..StatedClaim::default()
        })
    }

    fn early_win_target(&self) -> usize {
        5 * self.k
    }

    fn budget(&self) -> Option<u128> {
        let cap = 5 * self.k - 1;
        let per_block = binom(cap, self.k).saturating_add(1).saturating_mul(self.k as u128) + self.k as u128;
        let blocks = self.chain().block_budget(cap);
        Some(blocks.saturating_mul(per_block + self.k as u128).saturating_add(2 * self.k as u128))
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        let k = self.k;
        let o = arena.fresh_origin();
        let mut child = |arena: &mut Arena, lo: &Coord| -> Result<Block, Halt> {
            let core = play_b_block(arena, k, lo)?.core;
            Ok(Block { core, lo: lo.clone() })
        };
        cover_chain(arena, &self.chain(), &o, &mut child).map(|_| ())
    }
}

/// Representation shown, lengths `{1, L}` announced: EL blocks at spacing 4
/// and two long waves meeting between a same-colored pair.
#[derive(Clone, Debug)]
pub struct TcRepAndLengths {
    k: usize,
}

impl TcRepAndLengths {
    pub fn new(k: usize) -> Result<Self, GameError> {
        check_k(k, "tc-rep-lengths")?;
        if k > 4 {
            return Err(bad("tc-rep-lengths supports k <= 4"));
        }
        Ok(TcRepAndLengths { k })
    }

    /// Blocks after which two must share a color set under the palette cap.
    pub fn blocks_needed(&self) -> usize {
        set_count(7 * self.k - 1, 3 * self.k) as usize + 1
    }

    pub fn long_length(&self) -> Coord {
        Coord::from_int(4 * self.blocks_needed() as i64 + 1)
    }

    fn class(&self) -> ClassSpec {
        ClassSpec::with_lengths([Coord::one(), self.long_length()])
    }
}

impl Strategy for TcRepAndLengths {
    fn name(&self) -> String {
        format!("tc-rep-lengths:k={}", self.k)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        KnowledgeSpec {
            representation_shown: true,
            lengths_announced: true,
            class: self.class(),
        }
    }

    fn claim(&self) -> Claim {
        let n_stated = binom(7 * self.k, 3 * self.k) + 1;
        Claim::new(7 * self.k, 4 * self.k, self.class(), Opponent::AnyDeterministic).with_stated(StatedClaim {
            lengths: Some(vec![Coord::one(), Coord::from_int(3 * n_stated as i64)]),
            note: format!("stated block count {n_stated}; long waves [3b-N, 3b] and [3b, 3b+N]"),
            ..StatedClaim::default()
        })
    }

    fn budget(&self) -> Option<u128> {
        Some(self.blocks_needed() as u128 * 4 * self.k as u128 + 4 * self.k as u128)
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        let k = self.k;
        let n = self.blocks_needed();
        let mut buckets: Buckets<usize> = Buckets::default();
        let mut pair = None;
        for i in 1..=n {
            let blk = play_el_block(arena, k, &Coord::from_int(4 * i as i64))?;
            let key = arena.color_set(&blk.vertices);
            if buckets.insert(key.clone(), i) == 2 {
                pair = Some(buckets.get(&key)[1]);
                break;
            }
        }
        let b = pair.ok_or_else(|| Halt::Failure(format!("{n} EL blocks with pairwise distinct color sets")))?;
        let len = self.long_length();
        let m = Coord::from_int(4 * b as i64) - Coord::ratio(1, 2);
        present_copies(arena, &seg(&m - &len, m.clone())?, 2 * k)?;
        present_copies(arena, &seg(m.clone(), &m + &len)?, 2 * k)?;
        Ok(())
    }
}
