use std::path::Path;

use anyhow::{bail, Context, Result};
use arena_core::algorithms::AlgorithmSpec;
use arena_core::coord::Coord;
use arena_core::harness::{self, audit_claims, max_steps_from_env, AuditRow, GameConfig, GameResult};
use arena_core::interval::Interval;
use arena_core::oracle::{game_value_abstract, game_value_representation, GameSpec};
use arena_core::report::{render_report, ReportBundle};
use arena_core::strategies::StrategySpec;

fn write(path: &Path, body: &str) -> Result<()> {
    std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))
}

fn emit_report(bundle: &ReportBundle, results: &[GameResult], out: Option<&Path>) -> Result<()> {
    let Some(dir) = out else {
        return Ok(());
    };
    bundle.write_to(dir)?;
    write(&dir.join("results.json"), &serde_json::to_string_pretty(results)?)?;
    Ok(())
}

fn print_rows(rows: &[AuditRow]) {
    for r in rows {
        let tag = if r.asserted { "" } else { " (audit only)" };
        println!(
            "{:<8} {:<8} {} vs {}: colors {}/{} clique {}/{}{tag}{}",
            r.verdict.to_string(),
            r.kind,
            r.strategy,
            r.algorithm,
            r.measured.colors,
            r.claimed.colors,
            r.measured.clique,
            r.claimed.clique,
            if r.diagnostic.is_empty() { String::new() } else { format!(" [{}]", r.diagnostic) }
        );
    }
}

pub fn run(strategy: StrategySpec, algorithm: AlgorithmSpec, seed: u64, out: Option<&Path>) -> Result<u8> {
    let config = GameConfig::new(strategy, algorithm).with_seed(seed);
    let run = harness::run_game(&config)?;
    println!("{}", serde_json::to_string_pretty(&run.result)?);
    let results = vec![run.result.clone()];
    let bundle = render_report(&results, seed);
    print_rows(&bundle.rows);
    if let Some(dir) = out {
        emit_report(&bundle, &results, Some(dir))?;
        write(&dir.join("transcript.jsonl"), &run.transcript.to_jsonl())?;
        write(&dir.join("certificate.json"), &serde_json::to_string_pretty(&run.certificate)?)?;
    }
    Ok(bundle.exit_code as u8)
}

pub fn sweep(
    family: &str,
    (lo, hi): (usize, usize),
    algorithms: &[AlgorithmSpec],
    params: &str,
    seed: u64,
    out: Option<&Path>,
) -> Result<u8> {
    let key = StrategySpec::size_key(family).with_context(|| format!("unknown strategy family `{family}`"))?;
    let extra = if params.is_empty() { String::new() } else { format!(",{params}") };
    let template: StrategySpec = format!("{family}:{key}={lo}{extra}").parse()?;
    let rows = harness::sweep(&template, lo..=hi, algorithms, seed, max_steps_from_env());
    print!("{}", harness::sweep_csv(&rows));
    let mut results = Vec::new();
    for row in &rows {
        match &row.outcome {
            Ok(r) => results.push(r.clone()),
            Err(e) => eprintln!("{}:{} vs {}: {e}", row.family, row.params, row.algorithm),
        }
    }
    let bundle = render_report(&results, seed);
    print!("{}", bundle.plot_ascii);
    emit_report(&bundle, &results, out)?;
    let errored = results.len() < rows.len();
    Ok(if errored { 2 } else { bundle.exit_code as u8 })
}

pub fn oracle_rep(omega: usize, grid: Coord, window: &[Coord], moves: usize) -> Result<u8> {
    let [l, r] = window else {
        bail!("--window takes exactly two coordinates");
    };
    let window = Interval::new(l.clone(), r.clone())?;
    let value = game_value_representation(&GameSpec::representation(omega, grid, window, moves))?;
    println!("{}", serde_json::to_string(&value)?);
    Ok(0)
}

pub fn oracle_abstract(omega: usize, moves: usize) -> Result<u8> {
    let value = game_value_abstract(&GameSpec::abstract_unit(omega, moves))?;
    println!("{}", serde_json::to_string(&value)?);
    Ok(0)
}

pub fn audit(input: &Path) -> Result<u8> {
    let text = std::fs::read_to_string(input).with_context(|| format!("cannot read {}", input.display()))?;
    let results: Vec<GameResult> =
        serde_json::from_str(&text).with_context(|| format!("{} is not a JSON array of game results", input.display()))?;
    let rows: Vec<AuditRow> = results.iter().flat_map(audit_claims).collect();
    print_rows(&rows);
    Ok(u8::from(rows.iter().any(AuditRow::is_failure)))
}
