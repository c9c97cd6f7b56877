//! Criteria on the unit-interval and general-interval strategies, and the
//! cross-run checks.

use arena_core::algorithms::AlgorithmSpec;
use arena_core::coord::Coord;
use arena_core::harness::audit_claims;
use arena_core::interval::Interval;

use crate::{suite, Ctx, Outcome};

pub fn c2_el(ctx: &mut Ctx) -> Outcome {
    let a = 5;
    let window = Interval::from_ints(a, a + 3).unwrap();
    let mut failures = Vec::new();
    let mut runs = 0;
    let mut worst = Coord::from_int(100);
    for k in 1..=6 {
        for alg in suite() {
            let r = ctx.play(&format!("el:k={k},a={a}"), alg).result;
            runs += 1;
            let ratio = r.ratio.clone().unwrap_or_else(Coord::zero);
            worst = worst.min(ratio.clone());
            let span_ok = r.span.as_ref().is_some_and(|s| window.covers(s));
            if r.colors_used < 3 * k || r.clique != 2 * k || !span_ok || ratio < Coord::ratio(3, 2) {
                failures.push(format!(
                    "k={k} vs {alg}: {} colors, clique {}, span {:?}",
                    r.colors_used, r.clique, r.span
                ));
            }
        }
    }
    Outcome::new(failures, format!("{runs} runs, >= 3k colors at clique 2k inside [5,8], min ratio {worst}"))
}

pub fn c3_b(ctx: &mut Ctx) -> Outcome {
    let mut failures = Vec::new();
    let mut runs = 0;
    for k in 1..=4 {
        for alg in suite() {
            let r = ctx.play(&format!("b:k={k},a=0"), alg).result;
            runs += 1;
            if r.colors_used < 2 * k - 1 || r.clique > k {
                failures.push(format!("k={k} vs {alg}: {} colors, clique {}", r.colors_used, r.clique));
            }
        }
    }
    Outcome::new(failures, format!("{runs} runs, >= 2k-1 colors at clique <= k"))
}

pub fn c5_kt_strategy(ctx: &mut Ctx) -> Outcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for w in [2, 3] {
        for alg in [AlgorithmSpec::FirstFit, AlgorithmSpec::Kt] {
            let r = ctx.play(&format!("kt-strategy:w={w}"), alg).result;
            seen.push(format!("w={w} vs {alg}: {}", r.colors_used));
            if r.colors_used != 3 * w - 2 || r.clique > w {
                failures.push(format!("w={w} vs {alg}: {} colors, clique {}", r.colors_used, r.clique));
            }
        }
    }
    Outcome::new(failures, format!("forced exactly 3w-2 ({})", seen.join(", ")))
}

pub fn c6_kt_prime(ctx: &mut Ctx) -> Outcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for w in [4, 6] {
        let r = ctx.play(&format!("kt-prime:w={w},a=0"), AlgorithmSpec::Kt).result;
        if r.colors_used < 3 * w - 3 || r.clique > w {
            failures.push(format!("w={w}: {} colors, clique {}", r.colors_used, r.clique));
        }
        let stated = audit_claims(&r)
            .into_iter()
            .find(|row| row.kind == "stated")
            .map(|row| format!("{} vs stated {}", row.verdict, row.claimed.colors))
            .unwrap_or_else(|| "no stated row".into());
        seen.push(format!("w={w}: {} colors ({stated})", r.colors_used));
    }
    Outcome::new(failures, format!(">= 3w-3 against KT; {}", seen.join(", ")))
}

pub fn c4_kt_upper(ctx: &mut Ctx) -> Outcome {
    let kt_runs: Vec<_> = ctx.runs.iter().filter(|r| r.algorithm == "kt").collect();
    let failures = kt_runs
        .iter()
        .filter(|r| r.colors_used + 2 > 3 * r.clique)
        .map(|r| format!("{}: {} colors at clique {}", r.strategy, r.colors_used, r.clique))
        .collect();
    Outcome::new(failures, format!("{} KT runs within 3w-2", kt_runs.len()))
}

pub fn c13_validation(ctx: &mut Ctx) -> Outcome {
    let failures = ctx
        .runs
        .iter()
        .filter(|r| !r.validation.ok())
        .map(|r| format!("{} vs {}: {:?}", r.strategy, r.algorithm, r.validation))
        .collect();
    Outcome::new(
        failures,
        format!("{} runs with certificate graph = presented graph and class/clique checks passing", ctx.runs.len()),
    )
}
