//! Criteria on random certificates and the oracle cross-checks.

use std::collections::BTreeSet;

use arena_core::algorithms::{AlgorithmSpec, Color, Preamble, Reveal};
use arena_core::certificate::{clique_number, Certificate};
use arena_core::coord::Coord;
use arena_core::interval::Interval;
use arena_core::oracle::{game_value_abstract, game_value_representation, GameSpec, MAX_MOVES_LIMIT};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{suite, Ctx, Outcome};

const INSTANCES: usize = 200;
const MAX_N: usize = 60;
const RNG_SEED: u64 = 20_240_601;

fn random_certificate(rng: &mut ChaCha8Rng, lengths: &[Coord]) -> Certificate {
    let n = rng.gen_range(1..=MAX_N);
    Certificate::new(
        (0..n)
            .map(|_| {
                let left = Coord::ratio(rng.gen_range(0..160), 4);
                Interval::with_length(left, &lengths[rng.gen_range(0..lengths.len())])
            })
            .collect(),
    )
}

fn first_fit_palette(cert: &Certificate) -> usize {
    let mut ff = AlgorithmSpec::FirstFit.build();
    ff.start(&Preamble::default());
    let colors: Vec<Color> = cert
        .iter()
        .map(|(v, iv)| {
            ff.step(&Reveal {
                vertex: v,
                neighbors: (0..v).filter(|&u| cert.get(u).intersects(iv)).collect(),
                interval: Some(iv.clone()),
            })
        })
        .collect();
    colors.iter().collect::<BTreeSet<_>>().len()
}

pub fn c1_first_fit_unit(ctx: &mut Ctx) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED);
    let mut failures = Vec::new();
    let mut tight = 0;
    for i in 0..INSTANCES {
        let cert = random_certificate(&mut rng, &[Coord::one()]);
        let (used, omega) = (first_fit_palette(&cert), clique_number(&cert));
        tight += usize::from(used == 2 * omega - 1);
        if used > 2 * omega - 1 {
            failures.push(format!("instance {i}: {used} colors at clique {omega}"));
        }
    }
    for w in 2..=8 {
        let r = ctx.play(&format!("cs:k={w},a=0"), AlgorithmSpec::FirstFit).result;
        if r.colors_used != 2 * w - 1 || r.clique != w {
            failures.push(format!("repaired CS w={w}: {} colors, clique {}", r.colors_used, r.clique));
        }
    }
    Outcome::new(
        failures,
        format!("{INSTANCES} random unit inputs within 2w-1 ({tight} tight); repaired CS hits 2w-1 for w=2..8"),
    )
}

pub fn c8_first_fit_two_count(ctx: &mut Ctx) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED + 8);
    let longs = [Coord::ratio(3, 2), Coord::from_int(2), Coord::from_int(5), Coord::from_int(8)];
    let mut failures = Vec::new();
    for i in 0..INSTANCES {
        let lengths = [Coord::one(), longs[i % longs.len()].clone()];
        let cert = random_certificate(&mut rng, &lengths);
        let (used, omega) = (first_fit_palette(&cert), clique_number(&cert));
        if used > 4 * omega - 3 {
            failures.push(format!("instance {i}: {used} colors at clique {omega}"));
        }
    }
    let allowed = [Coord::one(), Coord::from_int(8)];
    let mut ratios = Vec::new();
    for k in 1..=4 {
        let r = ctx.play(&format!("ff-two-count:k={k}"), AlgorithmSpec::FirstFit).result;
        if r.colors_used < 5 * k - 1 || r.clique > 2 * k || !r.distinct_lengths.iter().all(|l| allowed.contains(l)) {
            failures.push(format!(
                "ff-two-count k={k}: {} colors, clique {}, lengths {:?}",
                r.colors_used, r.clique, r.distinct_lengths
            ));
        }
        ratios.push(format!("{}", r.ratio.unwrap_or_else(Coord::zero)));
    }
    Outcome::new(
        failures,
        format!("{INSTANCES} random 2-count inputs within 4w-3; 5k-1 forced for k=1..4, ratios {}", ratios.join(" ")),
    )
}

fn rep_value(omega: usize, grid: Coord, l: i64, r: i64, moves: usize) -> usize {
    let window = Interval::from_ints(l, r).unwrap();
    game_value_representation(&GameSpec::representation(omega, grid, window, moves))
        .unwrap()
        .value
}

fn abstract_value(omega: usize, moves: usize) -> usize {
    game_value_abstract(&GameSpec::abstract_unit(omega, moves)).unwrap().value
}

pub fn c12_oracle(ctx: &mut Ctx) -> Outcome {
    let mut failures = Vec::new();
    let rep = rep_value(2, Coord::ratio(1, 2), 0, 6, 8);
    if rep < 3 {
        failures.push(format!("representation value {rep} < 3"));
    }
    let abs = abstract_value(2, 10);
    if abs < 3 {
        failures.push(format!("abstract value {abs} < 3"));
    }
    let abs8 = abstract_value(2, 8);
    if abs8 < rep {
        failures.push(format!("abstract value {abs8} below representation value {rep} at 8 moves"));
    }

    // A fixed strategy cannot beat the optimal adversary against its best opponent.
    let quarter = Coord::ratio(1, 4);
    let el_value = rep_value(2, quarter.clone(), 0, 3, 4);
    let el_best = suite()
        .into_iter()
        .map(|alg| ctx.play("el:k=1,a=0", alg).result.colors_used)
        .min()
        .unwrap();
    if el_best > el_value {
        failures.push(format!("EL(1) forced {el_best} on every opponent, oracle value {el_value}"));
    }
    let cs_value = rep_value(2, quarter, 0, 4, 5);
    let cs = ctx.play("cs:k=2,a=0", AlgorithmSpec::FirstFit).result.colors_used;
    if cs > cs_value {
        failures.push(format!("CS(2) forced {cs} on First-Fit, oracle value {cs_value}"));
    }
    let b_runs: Vec<(usize, usize)> = suite()
        .into_iter()
        .map(|alg| {
            let r = ctx.play("b:k=2,a=0", alg).result;
            (r.colors_used, r.n_vertices)
        })
        .filter(|&(_, n)| n <= MAX_MOVES_LIMIT)
        .collect();
    let b_moves = b_runs.iter().map(|&(_, n)| n).max().unwrap_or(0);
    let b_value = abstract_value(2, b_moves);
    let b_best = b_runs.iter().map(|&(c, _)| c).min().unwrap_or(0);
    if b_best > b_value {
        failures.push(format!("B(2) forced {b_best} on every opponent, oracle value {b_value}"));
    }
    Outcome::new(
        failures,
        format!(
            "rep(w=2, grid 1/2, [0,6], 8 moves) = {rep}; abstract(w=2, 10 moves) = {abs}; \
             EL(1) {el_best} <= {el_value}, CS(2) {cs} <= {cs_value}, B(2) {b_best} <= {b_value}"
        ),
    )
}
