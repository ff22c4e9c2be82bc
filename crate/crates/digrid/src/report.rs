use std::fmt::Write as _;

use digrid_core::search::{SearchReport, Strategy};
use serde_json::{Value, json};

use crate::table::decimal6;

fn strategy_json(s: &Strategy) -> Value {
    match *s {
        Strategy::Exhaustive { use_symmetry } => json!({
            "kind": "exhaustive",
            "use_symmetry": use_symmetry,
        }),
        Strategy::LocalSearch { seed, restarts, max_plateau_moves } => json!({
            "kind": "local",
            "seed": seed.to_string(),
            "restarts": restarts.to_string(),
            "max_plateau_moves": max_plateau_moves.to_string(),
        }),
    }
}

/// JSON form; every number is a decimal string.
pub fn report_json(r: &SearchReport) -> Value {
    let ratio = digrid_core::formulas::cubic_ratio(r.max_wiener, r.dims.m(), r.dims.n());
    json!({
        "m": r.dims.m().to_string(),
        "n": r.dims.n().to_string(),
        "strategy": strategy_json(&r.strategy),
        "max_wiener": r.max_wiener.to_string(),
        "proven_optimal": r.proven_optimal,
        "ratio": ratio.to_string(),
        "ratio_decimal": decimal6(&ratio),
        "optimal_orbits": r.optimal_orbits.to_string(),
        "evaluated_count": r.evaluated_count.to_string(),
        "pruned_count": r.pruned_count.to_string(),
        "wall_time_ms": r.wall_time.as_millis().to_string(),
        "witnesses": r.witnesses.iter().zip(&r.witnesses_strongly_connected).map(|(o, strong)| json!({
            "bits": o.bit_string(),
            "strongly_connected": strong,
        })).collect::<Vec<_>>(),
    })
}

pub fn report_text(r: &SearchReport) -> String {
    let mut s = String::new();
    let kind = match r.strategy {
        Strategy::Exhaustive { use_symmetry: true } => "exhaustive (orbit pruning)".to_string(),
        Strategy::Exhaustive { use_symmetry: false } => "exhaustive".to_string(),
        Strategy::LocalSearch { seed, restarts, .. } => format!("local search (seed {seed}, {restarts} random restarts)"),
    };
    let _ = writeln!(s, "grid: {}", r.dims);
    let _ = writeln!(s, "strategy: {kind}");
    if r.proven_optimal {
        let _ = writeln!(s, "max W: {}", r.max_wiener);
    } else {
        let _ = writeln!(s, "best W found: {} (lower bound on the maximum)", r.max_wiener);
    }
    let ratio = digrid_core::formulas::cubic_ratio(r.max_wiener, r.dims.m(), r.dims.n());
    let _ = writeln!(s, "W/(mn)^3: {ratio} = {}", decimal6(&ratio));
    let _ = writeln!(s, "optimal orbits: {}", r.optimal_orbits);
    let _ = writeln!(s, "evaluated: {}, pruned: {}", r.evaluated_count, r.pruned_count);
    let _ = writeln!(s, "wall time: {:.3} s", r.wall_time.as_secs_f64());
    for (o, strong) in r.witnesses.iter().zip(&r.witnesses_strongly_connected) {
        let _ = writeln!(s, "witness {} strongly connected: {strong}", o.bit_string());
    }
    s
}
