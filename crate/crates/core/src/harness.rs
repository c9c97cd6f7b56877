//! Running, validating, auditing and sweeping games.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithms::{AlgorithmSpec, Color, Preamble, Reveal};
use crate::arena::{Arena, Halt, KnowledgeSpec, Step, StopReason};
use crate::certificate::{clique_number, intersection_graph, offline_color, validate_class, Certificate};
use crate::coord::Coord;
use crate::error::GameError;
use crate::graph::Graph;
use crate::interval::Interval;
use crate::strategies::{Claim, StrategySpec};

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;
pub const MAX_STEPS_ENV: &str = "ARENA_MAX_STEPS";

/// Step cap from `ARENA_MAX_STEPS`, falling back to the default.
pub fn max_steps_from_env() -> u64 {
    std::env::var(MAX_STEPS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(DEFAULT_MAX_STEPS)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameConfig {
    pub strategy: StrategySpec,
    pub algorithm: AlgorithmSpec,
    pub seed: u64,
    pub max_steps: u64,
}

impl GameConfig {
    pub fn new(strategy: StrategySpec, algorithm: AlgorithmSpec) -> Self {
        GameConfig {
            strategy,
            algorithm,
            seed: 0,
            max_steps: max_steps_from_env(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    /// Certificate intersection graph equals the presented graph.
    pub adjacency_ok: bool,
    pub class_ok: bool,
    pub class_violations: Vec<String>,
    /// Certificate clique within the claimed bound.
    pub clique_ok: bool,
    /// Per-placement violations recorded by the arena (including
    /// intermediate positions of relocated vertices).
    pub placement_violations: Vec<String>,
    /// Hidden games delivered no interval data; unannounced lengths were
    /// not delivered.
    pub hygiene_ok: bool,
}

impl Validation {
    pub fn ok(&self) -> bool {
        self.adjacency_ok && self.class_ok && self.clique_ok && self.placement_violations.is_empty() && self.hygiene_ok
    }
}

/// Summary of one finished game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameResult {
    pub strategy: String,
    pub algorithm: String,
    pub seed: u64,
    pub regime: String,
    pub colors_used: usize,
    pub clique: usize,
    pub span: Option<Interval>,
    pub distinct_lengths: Vec<Coord>,
    pub n_vertices: usize,
    pub stop_reason: StopReason,
    pub halted_early: bool,
    pub claim: Claim,
    /// `colors_used / clique`; the offline chromatic number equals the clique.
    pub ratio: Option<Coord>,
    /// Worst-case presentations implied by the strategy's pigeonhole budgets.
    pub budget: Option<String>,
    pub notes: BTreeMap<String, String>,
    pub validation: Validation,
}

/// A result together with the full record it was computed from.
#[derive(Clone, Debug)]
pub struct GameRun {
    pub result: GameResult,
    pub transcript: Transcript,
    pub certificate: Certificate,
    pub graph: Graph,
    pub colors: Vec<Color>,
}

pub fn run_game(config: &GameConfig) -> Result<GameRun, GameError> {
    let mut strategy = config.strategy.build()?;
    let claim = strategy.claim();
    if !claim.opponent.admits(&config.algorithm) {
        return Err(GameError::OpponentScope {
            strategy: strategy.name(),
            scope: claim.opponent.to_string(),
            algorithm: config.algorithm.to_string(),
        });
    }
    let knowledge = strategy.knowledge();
    let mut algorithm = config.algorithm.build();
    let target = strategy.early_win_target();
    let mut arena = Arena::new(
        algorithm.as_mut(),
        knowledge.clone(),
        claim.clique_bound,
        target,
        config.seed,
        config.max_steps,
    );
    let outcome = strategy.play(&mut arena);
    let palette = arena.palette_size();
    let stop_reason = match outcome {
        Ok(()) if palette >= target => StopReason::TargetReached,
        Ok(()) => StopReason::ConstructionComplete,
        Err(Halt::TargetReached) => StopReason::TargetReached,
        Err(Halt::Failure(d)) => StopReason::StrategyFailure(d),
        Err(Halt::Game(e)) => return Err(e),
    };
    let record = arena.into_parts();
    let transcript = Transcript {
        header: TranscriptHeader::from(&record.preamble),
        steps: record.steps,
    };
    let cert = record.certificate;
    let clique = clique_number(&cert);
    let (_, chromatic) = offline_color(&cert);
    let class = validate_class(&cert, &claim.class);
    let validation = Validation {
        adjacency_ok: intersection_graph(&cert) == record.graph,
        class_ok: class.ok,
        class_violations: class.violations,
        clique_ok: clique <= claim.clique_bound,
        placement_violations: record.violations,
        hygiene_ok: hygiene_ok(&knowledge, &transcript),
    };
    let colors_used = record.colors.iter().collect::<BTreeSet<_>>().len();
    let result = GameResult {
        strategy: strategy.name(),
        algorithm: config.algorithm.to_string(),
        seed: config.seed,
        regime: knowledge.regime().to_string(),
        colors_used,
        clique,
        span: cert.span(),
        distinct_lengths: cert.distinct_lengths().into_iter().collect(),
        n_vertices: cert.len(),
        stop_reason,
        halted_early: record.halted_early,
        claim,
        ratio: (chromatic > 0).then(|| Coord::ratio(colors_used as i64, chromatic as i64)),
        budget: strategy.budget().map(|b| b.to_string()),
        notes: strategy.notes(),
        validation,
    };
    Ok(GameRun {
        result,
        transcript,
        certificate: cert,
        graph: record.graph,
        colors: record.colors,
    })
}

/// Transcript-level information check: in representation-hidden games no
/// delivered reveal carries an interval, and lengths reach the preamble only
/// when announced.
pub fn hygiene_ok(knowledge: &KnowledgeSpec, transcript: &Transcript) -> bool {
    let lengths_ok = knowledge.lengths_announced || transcript.header.lengths.is_none();
    let reveals_ok = knowledge.representation_shown
        || transcript.steps.iter().all(|s| {
            let delivered = serde_json::to_value(&s.reveal).expect("reveal serializes");
            delivered.get("interval").is_some_and(serde_json::Value::is_null)
        });
    lengths_ok && reveals_ok
}

/// Line 0 of a transcript file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptHeader {
    pub rep_shown: bool,
    pub lengths: Option<Vec<Coord>>,
    pub seed: u64,
    pub clique_cap: Option<usize>,
}

impl From<&Preamble> for TranscriptHeader {
    fn from(p: &Preamble) -> Self {
        TranscriptHeader {
            rep_shown: p.representation_shown,
            lengths: p.announced_lengths.clone(),
            seed: p.seed,
            clique_cap: p.clique_cap,
        }
    }
}

impl TranscriptHeader {
    pub fn preamble(&self) -> Preamble {
        Preamble {
            representation_shown: self.rep_shown,
            announced_lengths: self.lengths.clone(),
            clique_cap: self.clique_cap,
            seed: self.seed,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct StepLine {
    seq: u64,
    v: usize,
    nbrs: Vec<usize>,
    iv: Option<Interval>,
    color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub header: TranscriptHeader,
    pub steps: Vec<Step>,
}

impl Transcript {
    pub fn to_jsonl(&self) -> String {
        let mut out = serde_json::to_string(&self.header).expect("header serializes");
        out.push('\n');
        for s in &self.steps {
            let line = StepLine {
                seq: s.seq,
                v: s.reveal.vertex,
                nbrs: s.reveal.neighbors.clone(),
                iv: s.reveal.interval.clone(),
                color: s.color,
            };
            out.push_str(&serde_json::to_string(&line).expect("step serializes"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Transcript, serde_json::Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: TranscriptHeader = serde_json::from_str(lines.next().unwrap_or(""))?;
        let steps = lines
            .map(|l| {
                let s: StepLine = serde_json::from_str(l)?;
                Ok(Step {
                    seq: s.seq,
                    reveal: Reveal {
                        vertex: s.v,
                        neighbors: s.nbrs,
                        interval: s.iv,
                    },
                    color: s.color,
                })
            })
            .collect::<Result<_, serde_json::Error>>()?;
        Ok(Transcript { header, steps })
    }

    /// Feed the recorded reveals to a fresh algorithm; returns its answers.
    pub fn replay(&self, algorithm: &AlgorithmSpec) -> Vec<Color> {
        let mut alg = algorithm.build();
        alg.start(&self.header.preamble());
        self.steps.iter().map(|s| alg.step(&s.reveal)).collect()
    }

    pub fn colors(&self) -> Vec<Color> {
        self.steps.iter().map(|s| s.color).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "met")]
    Met,
    #[serde(rename = "exceeded")]
    Exceeded,
    #[serde(rename = "MISSED")]
    Missed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Met => "met",
            Verdict::Exceeded => "exceeded",
            Verdict::Missed => "MISSED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Measured {
    pub colors: usize,
    pub clique: usize,
    pub span: Option<Interval>,
    pub class_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claimed {
    pub colors: usize,
    pub clique: usize,
    pub span: Option<Interval>,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub strategy: String,
    pub algorithm: String,
    pub seed: u64,
    /// `claim` for the implemented claim, `stated` for originally stated values.
    pub kind: String,
    pub claimed: Claimed,
    pub measured: Measured,
    pub verdict: Verdict,
    /// Whether a MISSED verdict counts as a failure.
    pub asserted: bool,
    pub diagnostic: String,
}

impl AuditRow {
    pub fn is_failure(&self) -> bool {
        self.asserted && self.verdict == Verdict::Missed
    }
}

fn judge(result: &GameResult, claimed: &Claimed) -> (Verdict, String) {
    let mut problems = Vec::new();
    let early = result.halted_early || result.stop_reason == StopReason::TargetReached;
    if let StopReason::StrategyFailure(d) = &result.stop_reason {
        problems.push(format!("strategy failure: {d}"));
    }
    if result.colors_used < claimed.colors && !early {
        problems.push(format!("forced {} colors, claimed {}", result.colors_used, claimed.colors));
    }
    if result.clique > claimed.clique {
        problems.push(format!("certificate clique {} exceeds bound {}", result.clique, claimed.clique));
    }
    if let (Some(bound), Some(span)) = (&claimed.span, &result.span) {
        if !bound.covers(span) {
            problems.push(format!("span {span} not within {bound}"));
        }
    }
    let v = &result.validation;
    if !v.adjacency_ok {
        problems.push("certificate graph differs from presented graph".into());
    }
    if !v.class_ok {
        problems.push(format!("class {}: {}", claimed.class, v.class_violations.join("; ")));
    }
    if !v.placement_violations.is_empty() {
        problems.push(format!("placements: {}", v.placement_violations.join("; ")));
    }
    if !v.hygiene_ok {
        problems.push("hidden information reached the algorithm".into());
    }
    if !problems.is_empty() {
        return (Verdict::Missed, problems.join(" | "));
    }
    if result.colors_used > claimed.colors || result.halted_early {
        (Verdict::Exceeded, String::new())
    } else {
        (Verdict::Met, String::new())
    }
}

/// One row for the implemented claim, plus one audit-only row when the
/// originally stated values differ.
pub fn audit_claims(result: &GameResult) -> Vec<AuditRow> {
    let claim = &result.claim;
    let measured = Measured {
        colors: result.colors_used,
        clique: result.clique,
        span: result.span.clone(),
        class_ok: result.validation.class_ok,
    };
    let base = Claimed {
        colors: claim.forced_colors_target,
        clique: claim.clique_bound,
        span: claim.span_bound.clone(),
        class: claim.class.to_string(),
    };
    let row = |kind: &str, claimed: Claimed, asserted: bool| {
        let (verdict, diagnostic) = judge(result, &claimed);
        AuditRow {
            strategy: result.strategy.clone(),
            algorithm: result.algorithm.clone(),
            seed: result.seed,
            kind: kind.into(),
            claimed,
            measured: measured.clone(),
            verdict,
            asserted,
            diagnostic,
        }
    };
    let mut rows = vec![row("claim", base.clone(), !claim.audit_only)];
    if let Some(stated) = &claim.stated {
        let mut claimed = Claimed {
            colors: stated.forced_colors.unwrap_or(base.colors),
            clique: stated.clique_bound.unwrap_or(base.clique),
            span: stated.span_bound.clone().or(base.span.clone()),
            class: base.class.clone(),
        };
        if let Some(lengths) = &stated.lengths {
            let ls: Vec<String> = lengths.iter().map(Coord::to_string).collect();
            claimed.class = format!("two_count{{{}}}", ls.join(","));
        }
        let mut r = row("stated", claimed, false);
        if let Some(lengths) = &stated.lengths {
            if !result.distinct_lengths.iter().all(|l| lengths.contains(l)) {
                r.verdict = Verdict::Missed;
                r.diagnostic = format!("lengths {:?} outside stated set", result.distinct_lengths);
            }
        }
        if !stated.note.is_empty() {
            r.diagnostic = [r.diagnostic.as_str(), stated.note.as_str()]
                .iter()
                .filter(|s| !s.is_empty())
                .copied()
                .collect::<Vec<_>>()
                .join(" | ");
        }
        rows.push(r);
    }
    rows
}

/// One cell of a sweep: the run's result or its error message.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: String,
    pub params: String,
    pub size: usize,
    pub algorithm: String,
    pub outcome: Result<GameResult, String>,
}

impl SweepRow {
    pub fn verdict(&self) -> String {
        match &self.outcome {
            Ok(r) => audit_claims(r)[0].verdict.to_string(),
            Err(_) => "error".into(),
        }
    }
}

/// Cross product of sizes and algorithms over one strategy family; cells run
/// in parallel and come back in cell order.
pub fn sweep(
    template: &StrategySpec,
    sizes: impl IntoIterator<Item = usize>,
    algorithms: &[AlgorithmSpec],
    seed: u64,
    max_steps: u64,
) -> Vec<SweepRow> {
    let cells: Vec<(StrategySpec, AlgorithmSpec)> = sizes
        .into_iter()
        .flat_map(|n| algorithms.iter().map(move |a| (template.with_size(n), *a)))
        .collect();
    cells
        .into_par_iter()
        .map(|(spec, alg)| {
            let config = GameConfig {
                strategy: spec.clone(),
                algorithm: alg,
                seed,
                max_steps,
            };
            let params = spec.to_string().split_once(':').map(|(_, p)| p.to_string()).unwrap_or_default();
            SweepRow {
                family: spec.family().to_string(),
                params,
                size: spec.size_param(),
                algorithm: alg.to_string(),
                outcome: run_game(&config).map(|run| run.result).map_err(|e| e.to_string()),
            }
        })
        .collect()
}

/// CSV with header `strategy,params,algorithm,colors,clique,ratio,verdict`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("strategy,params,algorithm,colors,clique,ratio,verdict\n");
    for row in rows {
        let (colors, clique, ratio) = match &row.outcome {
            Ok(r) => (
                r.colors_used.to_string(),
                r.clique.to_string(),
                r.ratio.as_ref().map(Coord::to_string).unwrap_or_default(),
            ),
            Err(_) => Default::default(),
        };
        out.push_str(&format!(
            "{},\"{}\",{},{},{},{},{}\n",
            row.family,
            row.params,
            row.algorithm,
            colors,
            clique,
            ratio,
            row.verdict()
        ));
    }
    out
}
