//! Stand-alone unit-interval strategies.

use crate::arena::{Arena, Halt, KnowledgeSpec};
use crate::certificate::ClassSpec;
use crate::coord::Coord;
use crate::error::GameError;
use crate::interval::Interval;

use super::blocks::{b_clique_budget, play_b_block, play_cs_block, play_el_block, seg, CsVariant};
use super::{bad, Claim, Opponent, StatedClaim, Strategy};

fn unit_knowledge(shown: bool) -> KnowledgeSpec {
    KnowledgeSpec {
        representation_shown: shown,
        lengths_announced: false,
        class: ClassSpec::Unit,
    }
}

fn window(a: &Coord, width: i64) -> Interval {
    seg(a.clone(), a + Coord::from_int(width)).expect("positive width")
}

#[derive(Clone, Debug)]
pub struct ElStrategy {
    k: usize,
    a: Coord,
}

impl ElStrategy {
    pub fn new(k: usize, a: Coord) -> Result<Self, GameError> {
        if k == 0 {
            return Err(bad("el needs k >= 1"));
        }
        Ok(ElStrategy { k, a })
    }
}

impl Strategy for ElStrategy {
    fn name(&self) -> String {
        format!("el:k={},a={}", self.k, self.a)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        unit_knowledge(true)
    }

    fn claim(&self) -> Claim {
        Claim::new(3 * self.k, 2 * self.k, ClassSpec::Unit, Opponent::AnyDeterministic).with_span(window(&self.a, 3))
    }

    fn budget(&self) -> Option<u128> {
        Some(4 * self.k as u128)
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        play_el_block(arena, self.k, &self.a).map(|_| ())
    }
}

#[derive(Clone, Debug)]
pub struct CsStrategy {
    k: usize,
    a: Coord,
    variant: CsVariant,
}

impl CsStrategy {
    pub fn new(k: usize, a: Coord, variant: CsVariant) -> Result<Self, GameError> {
        if k == 0 {
            return Err(bad("cs needs k >= 1"));
        }
        Ok(CsStrategy { k, a, variant })
    }
}

impl Strategy for CsStrategy {
    fn name(&self) -> String {
        match self.variant {
            CsVariant::Repaired => format!("cs:k={},a={}", self.k, self.a),
            CsVariant::Verbatim => format!("cs-verbatim:k={},a={}", self.k, self.a),
        }
    }

    fn knowledge(&self) -> KnowledgeSpec {
        unit_knowledge(true)
    }

    fn claim(&self) -> Claim {
        let mut claim = Claim::new(2 * self.k - 1, self.k, ClassSpec::Unit, Opponent::FirstFitOnly)
            .with_span(window(&self.a, 4));
        if self.variant == CsVariant::Verbatim {
            claim.audit_only = true;
            claim = claim.with_stated(StatedClaim {
                note: "offsets reproduced as written; clique and span claims are not expected to hold".into(),
                ..StatedClaim::default()
            });
        }
        claim
    }

    fn budget(&self) -> Option<u128> {
        Some(3 * self.k as u128 - 1)
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        play_cs_block(arena, self.k, &self.a, self.variant).map(|_| ())
    }
}

#[derive(Clone, Debug)]
pub struct BStrategy {
    k: usize,
    a: Coord,
}

impl BStrategy {
    pub fn new(k: usize, a: Coord) -> Result<Self, GameError> {
        if k == 0 {
            return Err(bad("b needs k >= 1"));
        }
        Ok(BStrategy { k, a })
    }
}

impl Strategy for BStrategy {
    fn name(&self) -> String {
        format!("b:k={},a={}", self.k, self.a)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        unit_knowledge(false)
    }

    fn claim(&self) -> Claim {
        Claim::new(2 * self.k - 1, self.k, ClassSpec::Unit, Opponent::AnyDeterministic).with_stated(StatedClaim {
            span_bound: Some(window(&self.a, 4)),
            note: "span bound holds for the pigeonholed core only; other cliques sit right of it".into(),
            ..StatedClaim::default()
        })
    }

    fn budget(&self) -> Option<u128> {
        let cliques = b_clique_budget(2 * self.k - 2, self.k);
        Some(cliques.saturating_mul(self.k as u128).saturating_add(self.k as u128 - 1))
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        play_b_block(arena, self.k, &self.a).map(|_| ())
    }
}
