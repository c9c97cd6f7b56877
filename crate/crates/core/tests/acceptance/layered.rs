//! Criteria on the composite strategies: sigma chains and the 2-count games.

use std::collections::BTreeSet;

use arena_core::algorithms::AlgorithmSpec;
use arena_core::certificate::{validate_class, ClassSpec};
use arena_core::coord::Coord;
use arena_core::harness::{audit_claims, Verdict};

use crate::{suite, Ctx, Outcome};

/// Forced colors of the depth-`i` sigma construction, from
/// `F(2k, d) = 3k + F(k, d-1)` with the base block's exact value at depth 0.
fn sigma_forced(w: usize, i: u32, base_b: bool) -> usize {
    if i == 0 {
        return if base_b { 2 * w - 1 } else { 3 * (w / 2) };
    }
    3 * (w / 2) + sigma_forced(w / 2, i - 1, base_b)
}

pub fn c7_sigma(ctx: &mut Ctx) -> Outcome {
    let eps = Coord::ratio(1, 2);
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for (base, factor) in [("el", 2), ("b", 3)] {
        // Lengths stay below 4^i (factor + eps).
        let sigma = Coord::from_int(4) * (Coord::from_int(factor) + &eps);
        for w in [4, 8] {
            let want = sigma_forced(w, 1, base == "b");
            for alg in [AlgorithmSpec::FirstFit, AlgorithmSpec::Kt] {
                let run = ctx.play(&format!("sigma:w={w},i=1,base={base},eps=1/2"), alg);
                let r = &run.result;
                let ratio = r.ratio.clone().unwrap_or_else(Coord::zero);
                let class_ok = validate_class(&run.certificate, &ClassSpec::sigma(sigma.clone())).ok;
                seen.push(format!("{base} w={w} vs {alg}: {} (ratio {ratio})", r.colors_used));
                if r.colors_used < want || r.clique > w || !class_ok || ratio < Coord::ratio(9, 4) {
                    failures.push(format!(
                        "{base} w={w} vs {alg}: {} colors (want {want}), clique {}, sigma-valid {class_ok}",
                        r.colors_used, r.clique
                    ));
                }
            }
        }
    }
    Outcome::new(failures, seen.join(", "))
}

pub fn c9_tc_lengths(ctx: &mut Ctx) -> Outcome {
    let allowed = [Coord::one(), Coord::from_int(4)];
    let mut failures = Vec::new();
    let mut stated = [0usize; 3];
    let mut runs = 0;
    for k in 1..=2 {
        for alg in suite() {
            let r = ctx.play(&format!("tc-lengths:k={k}"), alg).result;
            runs += 1;
            let lengths_ok = r.distinct_lengths.iter().all(|l| allowed.contains(l));
            if r.colors_used < 5 * k - 1 || r.clique > 2 * k || !lengths_ok {
                failures.push(format!(
                    "k={k} vs {alg}: {} colors, clique {}, lengths {:?}",
                    r.colors_used, r.clique, r.distinct_lengths
                ));
            }
            if let Some(row) = audit_claims(&r).into_iter().find(|row| row.kind == "stated") {
                stated[match row.verdict {
                    Verdict::Met => 0,
                    Verdict::Exceeded => 1,
                    Verdict::Missed => 2,
                }] += 1;
            }
        }
    }
    Outcome::new(
        failures,
        format!(
            "{runs} runs >= 5k-1 at clique <= 2k, lengths in {{1,4}}; audit vs 5k: {} met, {} exceeded, {} missed",
            stated[0], stated[1], stated[2]
        ),
    )
}

pub fn c10_tc_rep_lengths(ctx: &mut Ctx) -> Outcome {
    let mut failures = Vec::new();
    let mut games: Vec<(usize, AlgorithmSpec)> = suite().into_iter().map(|a| (1, a)).collect();
    games.push((2, AlgorithmSpec::FirstFit));
    for &(k, alg) in &games {
        let r = ctx.play(&format!("tc-rep-lengths:k={k}"), alg).result;
        let announced: BTreeSet<Coord> = match &r.claim.class {
            ClassSpec::TwoCountWithLengths { lengths } => lengths.iter().cloned().collect(),
            other => {
                failures.push(format!("k={k}: class {other} announces no lengths"));
                continue;
            }
        };
        let used: BTreeSet<Coord> = r.distinct_lengths.iter().cloned().collect();
        if r.colors_used < 7 * k || r.clique > 4 * k || used != announced {
            failures.push(format!(
                "k={k} vs {alg}: {} colors, clique {}, lengths {used:?} vs announced {announced:?}",
                r.colors_used, r.clique
            ));
        }
    }
    Outcome::new(
        failures,
        format!("{} runs >= 7k at clique <= 4k using exactly the two announced lengths", games.len()),
    )
}

pub fn c11_tc_rep(ctx: &mut Ctx) -> Outcome {
    let mut algs = vec![AlgorithmSpec::FirstFit, AlgorithmSpec::Kt];
    algs.extend((0..5).map(AlgorithmSpec::Seeded));
    let mut failures = Vec::new();
    let mut branches: BTreeSet<String> = BTreeSet::new();
    let mut seen = Vec::new();
    for alg in algs {
        let run = ctx.play("tc-rep:k=1", alg);
        let r = &run.result;
        let branch = r.notes.get("branch").cloned().unwrap_or_else(|| "none".into());
        seen.push(format!("{alg}: {} {branch}", r.colors_used));
        branches.insert(branch);
        let hidden_lengths = run.transcript.header.lengths.is_none() && r.validation.hygiene_ok;
        if r.colors_used < 8 || r.clique > 4 || r.distinct_lengths.len() != 2 || !hidden_lengths {
            failures.push(format!(
                "vs {alg}: {} colors, clique {}, {} lengths, lengths hidden {hidden_lengths}",
                r.colors_used,
                r.clique,
                r.distinct_lengths.len()
            ));
        }
    }
    let summary = format!(">= 8 at clique <= 4 with 2 unannounced lengths ({})", seen.join(", "));
    let main_ok = failures.is_empty();
    let missing: Vec<&str> = ["disjoint", "overlap"]
        .into_iter()
        .filter(|b| !branches.contains(*b))
        .collect();
    if !missing.is_empty() {
        failures.push(format!("Phase-II branch never taken: {}", missing.join(", ")));
    }
    let mut outcome = Outcome::new(failures, summary);
    outcome.known_gap = main_ok && missing == ["disjoint"];
    outcome
}
