//! Representation shown, lengths unknown: nested subphases of EL blocks
//! and a final set of long waves of one common length.
//!
//! Subphase `t` places EL blocks at `lo_t + s_t * 12^j` until two share a
//! color set and the region between them is free. The next subphase is
//! played inside that pair's middle region, left of its midpoint, at a
//! scale `12^(M+1)` times smaller. Once two subphases `p < q` repeat a
//! color set, long waves of length `4 * delta_p` close the construction.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Pow;

use crate::algorithms::Color;
use crate::arena::{Arena, Halt, KnowledgeSpec};
use crate::certificate::{clique_number_of, ClassSpec};
use crate::coord::Coord;
use crate::error::GameError;
use crate::graph::VertexId;
use crate::interval::Interval;

use super::blocks::{play_el_block, present_copies, seg};
use super::{bad, set_count, Claim, Opponent, Strategy};

/// Record of one finished subphase.
#[derive(Clone, Debug)]
pub struct Subphase {
    pub colors: BTreeSet<Color>,
    pub block_a: Vec<VertexId>,
    pub block_b: Vec<VertexId>,
    pub l: Coord,
    pub r: Coord,
}

impl Subphase {
    pub fn delta(&self) -> Coord {
        (&self.r - &self.l) / Coord::from_int(12)
    }

    pub fn mid(&self) -> Coord {
        self.l.midpoint(&self.r)
    }
}

/// The five candidate long intervals for a subphase pair.
struct Candidates {
    a: Interval,
    b: Interval,
    c_free: Interval,
    c_mid: Interval,
    d: Interval,
}

#[derive(Clone, Debug)]
pub struct TcRep {
    k: usize,
    notes: BTreeMap<String, String>,
}

impl TcRep {
    pub fn new(k: usize) -> Result<Self, GameError> {
        if k != 1 {
            return Err(bad("tc-rep is implemented for k = 1 only (coordinates grow as 12^(N^2))"));
        }
        Ok(TcRep {
            k,
            notes: BTreeMap::new(),
        })
    }

    /// Blocks per subphase, and subphases, before a repeat is forced.
    pub fn pigeonhole_count(&self) -> usize {
        set_count(8 * self.k - 1, 3 * self.k) as usize + 1
    }

    fn scale(&self, t: usize) -> Coord {
        let n = self.pigeonhole_count();
        let exp = (n + 1) * (n - t);
        Coord::from_bigint(Pow::pow(BigInt::from(12), exp))
    }

    fn candidates(p: &Subphase, q: &Subphase) -> Result<Candidates, Halt> {
        let big_delta = p.delta() * Coord::from_int(4);
        let mq = q.mid();
        Ok(Candidates {
            a: seg(p.l.clone(), &p.l + &big_delta)?,
            b: seg(&p.r - &big_delta, p.r.clone())?,
            c_free: seg(&p.l + &big_delta, &p.r - &big_delta)?,
            c_mid: seg(&mq - &big_delta, mq.clone())?,
            d: seg(mq.clone(), &mq + &big_delta)?,
        })
    }

    /// Certificate-level check that the long waves for `(p, q)` meet every
    /// block they must and keep the clique within `4k` in both branches.
    fn admissible(&self, arena: &Arena, p: &Subphase, q: &Subphase) -> Result<Option<Candidates>, Halt> {
        let cand = Self::candidates(p, q)?;
        let cert = arena.certificate();
        let meets_all = |iv: &Interval, block: &[VertexId]| block.iter().all(|&v| cert.get(v).intersects(iv));
        let adjacency = meets_all(&cand.a, &p.block_a)
            && meets_all(&cand.b, &p.block_b)
            && !cand.a.intersects(&cand.b)
            && meets_all(&cand.c_free, &q.block_a)
            && meets_all(&cand.c_mid, &q.block_a)
            && cand.c_mid.intersects(&cand.a)
            && meets_all(&cand.d, &q.block_b)
            && cand.d.intersects(&cand.b);
        if !adjacency {
            return Ok(None);
        }
        let cap = 4 * self.k;
        let waves = 2 * self.k;
        for layout in [vec![&cand.a, &cand.b, &cand.c_free], vec![&cand.a, &cand.b, &cand.c_mid, &cand.d]] {
            let mut ivs = cert.intervals().to_vec();
            for iv in layout {
                ivs.extend(std::iter::repeat_n(iv.clone(), waves));
            }
            if clique_number_of(&ivs) > cap {
                return Ok(None);
            }
        }
        Ok(Some(cand))
    }

    /// Play one subphase with blocks at `lo + s * 12^j`, stopping at the
    /// first same-colored pair whose middle region is free.
    fn play_subphase(&self, arena: &mut Arena, lo: &Coord, hi: &Coord, s: &Coord) -> Result<Subphase, Halt> {
        let n = self.pigeonhole_count();
        let twelve = Coord::from_int(12);
        let mut blocks: Vec<(BTreeSet<Color>, Vec<VertexId>, Coord)> = Vec::new();
        let mut pos = s * &twelve;
        for j in 1..=n {
            let x = lo + &pos;
            if &x + Coord::from_int(3) > *hi {
                return Err(Halt::Failure(format!("subphase block {j} at {x} leaves its window ending at {hi}")));
            }
            let blk = play_el_block(arena, self.k, &x)?;
            let colors = arena.color_set(&blk.vertices);
            let right = blk
                .vertices
                .iter()
                .map(|&v| arena.certificate().get(v).right().clone())
                .max()
                .expect("EL block is non-empty");
            for (colors_a, block_a, l) in &blocks {
                if *colors_a != colors {
                    continue;
                }
                let sub = Subphase {
                    colors: colors.clone(),
                    block_a: block_a.clone(),
                    block_b: blk.vertices.clone(),
                    l: l.clone(),
                    r: right.clone(),
                };
                let delta = sub.delta();
                let middle = seg(&sub.l + &delta, &sub.r - &delta)?;
                if arena.certificate().intersecting(&middle).is_empty() {
                    return Ok(sub);
                }
            }
            blocks.push((colors, blk.vertices, x));
            pos = pos * &twelve;
        }
        Err(Halt::Failure(format!("{n} blocks in a subphase without a free same-colored pair")))
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.notes.insert(key.to_string(), value.to_string());
    }
}

impl Strategy for TcRep {
    fn name(&self) -> String {
        format!("tc-rep:k={}", self.k)
    }

    fn knowledge(&self) -> KnowledgeSpec {
        KnowledgeSpec {
            representation_shown: true,
            lengths_announced: false,
            class: ClassSpec::TwoCount,
        }
    }

    fn claim(&self) -> Claim {
        Claim::new(8 * self.k, 4 * self.k, ClassSpec::TwoCount, Opponent::AnyDeterministic)
    }

    fn budget(&self) -> Option<u128> {
        let n = self.pigeonhole_count() as u128;
        Some(n * n * 4 * self.k as u128 + 8 * self.k as u128)
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt> {
        let k = self.k;
        let n = self.pigeonhole_count();
        let mut done: Vec<Subphase> = Vec::new();
        let mut lo = Coord::zero();
        let mut hi = self.scale(0);
        let mut chosen = None;
        for t in 1..=n {
            let sub = self.play_subphase(arena, &lo, &hi, &self.scale(t))?;
            let delta = sub.delta();
            lo = (&sub.l + &delta * Coord::ratio(16, 3)).ceil();
            hi = (&sub.l + &delta * Coord::ratio(17, 3)).floor();
            done.push(sub);
            let q = done.len() - 1;
            for p in 0..q {
                if done[p].colors != done[q].colors {
                    continue;
                }
                if let Some(cand) = self.admissible(arena, &done[p], &done[q])? {
                    chosen = Some((p, q, cand));
                    break;
                }
            }
            if chosen.is_some() {
                break;
            }
        }
        self.note("subphases", done.len());
        let (p, q, cand) = chosen.ok_or_else(|| {
            Halt::Failure(format!(
                "no subphase pair passed the freeness check after {} subphases",
                done.len()
            ))
        })?;
        self.note("p", p + 1);
        self.note("q", q + 1);
        self.note("delta_p_digits", done[p].delta().digits());

        let a = present_copies(arena, &cand.a, 2 * k)?;
        let b = present_copies(arena, &cand.b, 2 * k)?;
        let (ca, cb) = (arena.color_set(&a), arena.color_set(&b));
        self.note("a_colors", format!("{ca:?}"));
        self.note("b_colors", format!("{cb:?}"));
        self.note("gamma", format!("{:?}", done[p].colors));
        let shared = ca.intersection(&cb).count();
        let union_ab = ca.union(&cb).count();
        let gamma = done[p].colors.clone();
        let mut all: BTreeSet<Color> = gamma.iter().chain(&ca).chain(&cb).copied().collect();
        self.note("a_cap_b", shared);
        // Recorded before C/D are presented: an early win can end the game there.
        if shared < k {
            self.note("branch", "disjoint");
            self.note("identity_bound", 3 * k + union_ab + 2 * k);
            let c = present_copies(arena, &cand.c_free, 2 * k)?;
            all.extend(arena.color_set(&c));
        } else {
            self.note("branch", "overlap");
            self.note("identity_bound", 7 * k + shared);
            let c = present_copies(arena, &cand.c_mid, 2 * k)?;
            let d = present_copies(arena, &cand.d, 2 * k)?;
            all.extend(arena.color_set(&c));
            all.extend(arena.color_set(&d));
        }
        self.note("colors_accounted", all.len());
        Ok(())
    }

    fn notes(&self) -> BTreeMap<String, String> {
        self.notes.clone()
    }
}
