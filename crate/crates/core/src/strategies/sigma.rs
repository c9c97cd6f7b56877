//! The recursive sigma construction: base blocks nested in cover chains.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arena::{Arena, Halt, KnowledgeSpec};
use crate::certificate::ClassSpec;
use crate::coord::Coord;
use crate::error::GameError;

use super::blocks::{play_b_block, play_el_block};
use super::composite::{cover_chain, Block, CoverChain};
use super::{bad, Claim, Opponent, StatedClaim, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaBase {
    El,
    B,
}

impl fmt::Display for SigmaBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaBase::El => "el",
            SigmaBase::B => "b",
        })
    }
}

impl FromStr for SigmaBase {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "el" => Ok(SigmaBase::El),
            "b" => Ok(SigmaBase::B),
            _ => Err(()),
        }
    }
}

impl SigmaBase {
    fn width(&self) -> Coord {
        Coord::from_int(match self {
            SigmaBase::El => 3,
            SigmaBase::B => 4,
        })
    }

    /// Colors the base block forces at clique `w`.
    fn forced(&self, w: usize) -> usize {
        match self {
            SigmaBase::El => 3 * w / 2,
            SigmaBase::B => 2 * w - 1,
        }
    }

    fn sigma_factor(&self) -> Coord {
        Coord::from_int(match self {
            SigmaBase::El => 2,
            SigmaBase::B => 3,
        })
    }
}

/// Forced-color target F(w, i): the base target at depth 0, and
/// F(2k, d) = F(k, d-1) + 3k above it.
pub fn sigma_target(w: usize, i: u32, base: SigmaBase) -> usize {
    if i == 0 {
        base.forced(w)
    } else {
        sigma_target(w / 2, i - 1, base) + 3 * (w / 2)
    }
}

#[derive(Clone, Debug)]
pub struct SigmaStrategy {
    w: usize,
    i: u32,
    base: SigmaBase,
    eps: Coord,
}

impl SigmaStrategy {
    pub fn new(w: usize, i: u32, base: SigmaBase, eps: Coord) -> Result<Self, GameError> {
        if i >= 16 {
            return Err(bad("sigma depth must be below 16"));
        }
        let unit = 1usize << i;
        if w == 0 || !w.is_multiple_of(unit) {
            return Err(bad(format!("w={w} must be a positive multiple of 2^{i}")));
        }
        if base == SigmaBase::El && !(w / unit).is_multiple_of(2) {
            return Err(bad(format!("EL base needs an even clique, got w/2^i = {}", w / unit)));
        }
        if !eps.is_positive() {
            return Err(bad("eps must be positive"));
        }
        Ok(SigmaStrategy { w, i, base, eps })
    }

    /// Window width of a depth-`d` block.
    fn width(&self, d: u32) -> Coord {
        match d {
            0 => self.base.width(),
            _ => (self.width(d - 1) + Coord::from_int(2)) * Coord::from_int(4),
        }
    }

    pub fn sigma(&self) -> Coord {
        Coord::pow_int(4, self.i) * (self.base.sigma_factor() + &self.eps)
    }

    fn play_level(&self, arena: &mut Arena, d: u32, lo: &Coord) -> Result<Block, Halt> {
        let w = self.w >> (self.i - d);
        if d == 0 {
            let core = match self.base {
                SigmaBase::El => play_el_block(arena, w / 2, lo)?.vertices,
                SigmaBase::B => play_b_block(arena, w, lo)?.core,
            };
            return Ok(Block { core, lo: lo.clone() });
        }
        let chain = CoverChain {
            k: w / 2,
            width: self.width(d - 1),
            gap: Coord::one(),
        };
        cover_chain(arena, &chain, lo, &mut |arena, child_lo| self.play_level(arena, d - 1, child_lo))
    }
}

impl Strategy for SigmaStrategy {
    fn name(&self) -> String {
        format!("sigma:w={},i={},base={},eps={}", self.w, self.i, self.base, self.eps)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        KnowledgeSpec {
            representation_shown: false,
            lengths_announced: false,
            class: ClassSpec::sigma(self.sigma()),
        }
    }

    fn claim(&self) -> Claim {
        let mut claim = Claim::new(
            sigma_target(self.w, self.i, self.base),
            self.w,
            ClassSpec::sigma(self.sigma()),
            Opponent::AnyDeterministic,
        );
        if self.base == SigmaBase::B {
            claim = claim.with_stated(StatedClaim {
                note: "sigma threshold originally stated as 27/eps^2 for the B base".into(),
                ..StatedClaim::default()
            });
        }
        claim
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        let lo = arena.fresh_origin();
        self.play_level(arena, self.i, &lo).map(|_| ())
    }
}
