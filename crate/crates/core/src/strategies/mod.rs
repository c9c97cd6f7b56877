//! Adaptive adversaries.
//!
//! Every strategy is written in direct style against an [`Arena`]: it
//! presents intervals one at a time, reads back the colors, and returns
//! `Ok(())` when its construction is complete. Early win surfaces as
//! [`Halt::TargetReached`] from `present` and is propagated with `?`.
//!
//! Representation-hidden strategies keep their certificate honest by
//! placing provisional blocks in fresh territory and translating the ones
//! the pigeonhole selects into their final slots; the arena re-checks that
//! every relocation leaves the presented graph unchanged.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algorithms::{AlgorithmSpec, Color};
use crate::arena::{Arena, Halt, KnowledgeSpec};
use crate::certificate::ClassSpec;
use crate::coord::Coord;
use crate::error::{GameError, ParseError};
use crate::interval::Interval;

mod blocks;
mod composite;
mod kt;
mod sigma;
mod tc_rep;
mod two_count;
mod unit;

pub use blocks::{play_b_block, play_cs_block, play_el_block, BBlock, CsVariant, ElBlock};
pub use composite::{cover_chain, Block, CoverChain};
pub use kt::{KtPrimeStrategy, KtStrategy};
pub use sigma::{sigma_target, SigmaBase, SigmaStrategy};
pub use tc_rep::{Subphase, TcRep};
pub use two_count::{FfTwoCount, TcLengthsKnown, TcRepAndLengths};
pub use unit::{BStrategy, CsStrategy, ElStrategy};

/// Which opponents a strategy's claim covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Opponent {
    AnyDeterministic,
    FirstFitOnly,
    KtOnly,
}

impl Opponent {
    pub fn admits(&self, alg: &AlgorithmSpec) -> bool {
        match self {
            Opponent::AnyDeterministic => alg.is_deterministic(),
            Opponent::FirstFitOnly => *alg == AlgorithmSpec::FirstFit,
            Opponent::KtOnly => *alg == AlgorithmSpec::Kt,
        }
    }
}

impl fmt::Display for Opponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Opponent::AnyDeterministic => "any deterministic algorithm",
            Opponent::FirstFitOnly => "first-fit",
            Opponent::KtOnly => "kt",
        })
    }
}

/// Values as originally stated for a construction, where they differ from
/// what the implementation asserts. Audited, never asserted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatedClaim {
    pub forced_colors: Option<usize>,
    pub clique_bound: Option<usize>,
    pub span_bound: Option<Interval>,
    pub lengths: Option<Vec<Coord>>,
    pub note: String,
}

/// Machine-checkable targets of a strategy, all concrete integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub forced_colors_target: usize,
    pub clique_bound: usize,
    pub span_bound: Option<Interval>,
    pub class: ClassSpec,
    pub opponent: Opponent,
    /// When set, the claim itself is only audited (e.g. a construction
    /// reproduced verbatim that is known not to meet its stated bounds).
    pub audit_only: bool,
    pub stated: Option<StatedClaim>,
}

impl Claim {
    pub fn new(forced: usize, clique: usize, class: ClassSpec, opponent: Opponent) -> Self {
        Claim {
            forced_colors_target: forced,
            clique_bound: clique,
            span_bound: None,
            class,
            opponent,
            audit_only: false,
            stated: None,
        }
    }

    pub fn with_span(mut self, span: Interval) -> Self {
        self.span_bound = Some(span);
        self
    }

    pub fn with_stated(mut self, stated: StatedClaim) -> Self {
        self.stated = Some(stated);
        self
    }
}

pub trait Strategy: Send {
    /// Canonical spec string, e.g. `el:k=3,a=0`.
    fn name(&self) -> String;

    fn knowledge(&self) -> KnowledgeSpec;

    fn claim(&self) -> Claim;

    /// Palette size at which the strategy stops presenting. Defaults to the
    /// claimed forced-color target.
    fn early_win_target(&self) -> usize {
        self.claim().forced_colors_target
    }

    /// Worst-case number of presentations implied by the pigeonhole budgets,
    /// when the strategy has one. Saturates at `u128::MAX`.
    fn budget(&self) -> Option<u128> {
        None
    }

    fn play(&mut self, arena: &mut Arena) -> Result<(), Halt>;

    /// Free-form facts recorded during play (branches taken, identities
    /// checked), surfaced in the game result.
    fn notes(&self) -> BTreeMap<String, String> {
        BTreeMap::new()
    }
}

/// Binomial coefficient, saturating.
pub fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of color sets of size at least `min_size` drawn from a palette
/// of `cap` colors.
pub fn set_count(cap: usize, min_size: usize) -> u128 {
    (min_size.max(1)..=cap).fold(0u128, |acc, s| acc.saturating_add(binom(cap, s)))
}

/// Pigeonhole buckets keyed on the exact set of colors an item received.
#[derive(Debug)]
pub struct Buckets<T> {
    map: BTreeMap<BTreeSet<Color>, Vec<T>>,
    total: usize,
}

impl<T> Default for Buckets<T> {
    fn default() -> Self {
        Buckets {
            map: BTreeMap::new(),
            total: 0,
        }
    }
}

impl<T> Buckets<T> {
    /// Insert and return the size of the bucket it joined.
    pub fn insert(&mut self, key: BTreeSet<Color>, item: T) -> usize {
        self.total += 1;
        let bucket = self.map.entry(key).or_default();
        bucket.push(item);
        bucket.len()
    }

    pub fn take(&mut self, key: &BTreeSet<Color>) -> Vec<T> {
        self.map.remove(key).unwrap_or_default()
    }

    pub fn get(&self, key: &BTreeSet<Color>) -> &[T] {
        self.map.get(key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn total(&self) -> usize {
        self.total
    }
}

/// Parsed strategy selector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StrategySpec {
    El { k: usize, a: Coord },
    Cs { k: usize, a: Coord, verbatim: bool },
    B { k: usize, a: Coord },
    KtStrategy { w: usize },
    KtPrime { w: usize, a: Coord },
    Sigma { w: usize, i: u32, base: SigmaBase, eps: Coord },
    FfTwoCount { k: usize },
    TcLengths { k: usize },
    TcRepLengths { k: usize },
    TcRep { k: usize },
}

impl StrategySpec {
    pub fn build(&self) -> Result<Box<dyn Strategy>, GameError> {
        Ok(match self {
            StrategySpec::El { k, a } => Box::new(ElStrategy::new(*k, a.clone())?),
            StrategySpec::Cs { k, a, verbatim } => {
                let variant = if *verbatim { CsVariant::Verbatim } else { CsVariant::Repaired };
                Box::new(CsStrategy::new(*k, a.clone(), variant)?)
            }
            StrategySpec::B { k, a } => Box::new(BStrategy::new(*k, a.clone())?),
            StrategySpec::KtStrategy { w } => Box::new(KtStrategy::new(*w)?),
            StrategySpec::KtPrime { w, a } => Box::new(KtPrimeStrategy::new(*w, a.clone())?),
            StrategySpec::Sigma { w, i, base, eps } => Box::new(SigmaStrategy::new(*w, *i, *base, eps.clone())?),
            StrategySpec::FfTwoCount { k } => Box::new(FfTwoCount::new(*k)?),
            StrategySpec::TcLengths { k } => Box::new(TcLengthsKnown::new(*k)?),
            StrategySpec::TcRepLengths { k } => Box::new(TcRepAndLengths::new(*k)?),
            StrategySpec::TcRep { k } => Box::new(TcRep::new(*k)?),
        })
    }

    /// Family name (the part before `:`).
    pub fn family(&self) -> &'static str {
        match self {
            StrategySpec::El { .. } => "el",
            StrategySpec::Cs { verbatim: false, .. } => "cs",
            StrategySpec::Cs { verbatim: true, .. } => "cs-verbatim",
            StrategySpec::B { .. } => "b",
            StrategySpec::KtStrategy { .. } => "kt-strategy",
            StrategySpec::KtPrime { .. } => "kt-prime",
            StrategySpec::Sigma { .. } => "sigma",
            StrategySpec::FfTwoCount { .. } => "ff-two-count",
            StrategySpec::TcLengths { .. } => "tc-lengths",
            StrategySpec::TcRepLengths { .. } => "tc-rep-lengths",
            StrategySpec::TcRep { .. } => "tc-rep",
        }
    }

    /// The size parameter a sweep varies (`k` or `w`).
    pub fn size_param(&self) -> usize {
        match self {
            StrategySpec::El { k, .. }
            | StrategySpec::Cs { k, .. }
            | StrategySpec::B { k, .. }
            | StrategySpec::FfTwoCount { k }
            | StrategySpec::TcLengths { k }
            | StrategySpec::TcRepLengths { k }
            | StrategySpec::TcRep { k } => *k,
            StrategySpec::KtStrategy { w } | StrategySpec::KtPrime { w, .. } | StrategySpec::Sigma { w, .. } => *w,
        }
    }

    /// Name of the size parameter for a family, as used in spec strings.
    pub fn size_key(family: &str) -> Option<&'static str> {
        match family {
            "el" | "cs" | "cs-verbatim" | "b" | "ff-two-count" | "tc-lengths" | "tc-rep-lengths" | "tc-rep" => Some("k"),
            "kt-strategy" | "kt-prime" | "sigma" => Some("w"),
            _ => None,
        }
    }

    /// Same family with the size parameter replaced.
    pub fn with_size(&self, n: usize) -> StrategySpec {
        let mut s = self.clone();
        match &mut s {
            StrategySpec::El { k, .. }
            | StrategySpec::Cs { k, .. }
            | StrategySpec::B { k, .. }
            | StrategySpec::FfTwoCount { k }
            | StrategySpec::TcLengths { k }
            | StrategySpec::TcRepLengths { k }
            | StrategySpec::TcRep { k } => *k = n,
            StrategySpec::KtStrategy { w } | StrategySpec::KtPrime { w, .. } | StrategySpec::Sigma { w, .. } => *w = n,
        }
        s
    }
}

impl fmt::Display for StrategySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = self.family();
        match self {
            StrategySpec::El { k, a } | StrategySpec::Cs { k, a, .. } | StrategySpec::B { k, a } => {
                write!(f, "{fam}:k={k},a={a}")
            }
            StrategySpec::KtStrategy { w } => write!(f, "{fam}:w={w}"),
            StrategySpec::KtPrime { w, a } => write!(f, "{fam}:w={w},a={a}"),
            StrategySpec::Sigma { w, i, base, eps } => write!(f, "{fam}:w={w},i={i},base={base},eps={eps}"),
            StrategySpec::FfTwoCount { k }
            | StrategySpec::TcLengths { k }
            | StrategySpec::TcRepLengths { k }
            | StrategySpec::TcRep { k } => write!(f, "{fam}:k={k}"),
        }
    }
}

impl FromStr for StrategySpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseError::Strategy {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (fam, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let mut params: BTreeMap<&str, &str> = BTreeMap::new();
        for kv in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, val) = kv.split_once('=').ok_or_else(|| err("parameters are key=value"))?;
            params.insert(key.trim(), val.trim());
        }
        let int = |key: &str, default: Option<usize>| -> Result<usize, ParseError> {
            match params.get(key) {
                Some(v) => v.parse().map_err(|_| err(&format!("`{key}` must be a non-negative integer"))),
                None => default.ok_or_else(|| err(&format!("missing `{key}`"))),
            }
        };
        let coord = |key: &str, default: Coord| -> Result<Coord, ParseError> {
            match params.get(key) {
                Some(v) => v.parse(),
                None => Ok(default),
            }
        };
        let k = || int("k", None);
        let w = || int("w", None);
        Ok(match fam {
            "el" => StrategySpec::El {
                k: k()?,
                a: coord("a", Coord::zero())?,
            },
            "cs" | "cs-verbatim" => StrategySpec::Cs {
                k: k()?,
                a: coord("a", Coord::zero())?,
                verbatim: fam == "cs-verbatim",
            },
            "b" => StrategySpec::B {
                k: k()?,
                a: coord("a", Coord::zero())?,
            },
            "kt-strategy" => StrategySpec::KtStrategy { w: w()? },
            "kt-prime" => StrategySpec::KtPrime {
                w: w()?,
                a: coord("a", Coord::zero())?,
            },
            "sigma" => StrategySpec::Sigma {
                w: w()?,
                i: int("i", Some(0))? as u32,
                base: params.get("base").copied().unwrap_or("el").parse().map_err(|_| err("base is el or b"))?,
                eps: coord("eps", Coord::ratio(1, 2))?,
            },
            "ff-two-count" => StrategySpec::FfTwoCount { k: k()? },
            "tc-lengths" => StrategySpec::TcLengths { k: k()? },
            "tc-rep-lengths" => StrategySpec::TcRepLengths { k: k()? },
            "tc-rep" => StrategySpec::TcRep { k: k()? },
            _ => return Err(err("unknown strategy family")),
        })
    }
}

pub(crate) fn bad(msg: impl Into<String>) -> GameError {
    GameError::BadParameters(msg.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(7, 3), 35);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(500, 250), u128::MAX);
        assert_eq!(set_count(3, 1), 7);
        assert_eq!(set_count(7, 3), 99);
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "el:k=3,a=0",
            "cs:k=2,a=1/2",
            "cs-verbatim:k=4,a=0",
            "b:k=2,a=0",
            "kt-strategy:w=3",
            "kt-prime:w=4,a=0",
            "sigma:w=8,i=1,base=el,eps=1/2",
            "ff-two-count:k=1",
            "tc-lengths:k=1",
            "tc-rep-lengths:k=1",
            "tc-rep:k=1",
        ] {
            let spec: StrategySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("el:k=2".parse::<StrategySpec>().unwrap().to_string(), "el:k=2,a=0");
        assert!("el".parse::<StrategySpec>().is_err());
        assert!("nope:k=1".parse::<StrategySpec>().is_err());
        assert!("sigma:w=4,base=zz".parse::<StrategySpec>().is_err());
    }

    #[test]
    fn buckets_count() {
        let mut b: Buckets<usize> = Buckets::default();
        let key: BTreeSet<Color> = [1, 2].into();
        assert_eq!(b.insert(key.clone(), 0), 1);
        assert_eq!(b.insert([3].into(), 1), 1);
        assert_eq!(b.insert(key.clone(), 2), 2);
        assert_eq!(b.get(&key), &[0, 2]);
        assert_eq!(b.total(), 3);
    }
}
