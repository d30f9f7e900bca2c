//! JSON report construction. serde_json's default map keeps keys sorted, so
//! identical inputs serialize byte-identically; nothing here emits
//! timestamps or other run-dependent data.

use serde_json::{json, Value};
use tgg_core::{
    ClassLabels, Color, Coloring, GameReport, NashReport, TemporalDistanceRow, TemporalGraph,
    UnderlyingKind,
};

fn color_code(c: Color) -> i64 {
    match c {
        Color::Uncolored => -1,
        Color::Gray => 0,
        Color::Player(i) => i as i64,
    }
}

fn coloring_value(c: &Coloring) -> Value {
    Value::Array(c.as_slice().iter().map(|&c| json!(color_code(c))).collect())
}

pub fn classify_report(g: &TemporalGraph, labels: &ClassLabels) -> Value {
    let kind = match labels.underlying_kind {
        UnderlyingKind::Path => "path",
        UnderlyingKind::Cycle => "cycle",
        UnderlyingKind::LinearForest => "linear_forest",
        UnderlyingKind::Other => "other",
    };
    json!({
        "n": g.n(),
        "tau": g.lifetime(),
        "underlying": kind,
        "superset": labels.is_superset,
        "growing": labels.is_growing,
        "shrinking": labels.is_shrinking,
        "static": labels.is_static,
    })
}

fn arrival_value(a: Option<usize>) -> Value {
    match a {
        Some(d) => json!(d),
        None => json!("inf"),
    }
}

pub fn distances_report(g: &TemporalGraph, row: &TemporalDistanceRow) -> Value {
    json!({
        "n": g.n(),
        "tau": g.lifetime(),
        "source": row.source(),
        "distances": row.values().iter().map(|&a| arrival_value(a)).collect::<Vec<_>>(),
    })
}

pub fn game_report(g: &TemporalGraph, positions: &[usize], report: &GameReport) -> Value {
    let mut v = json!({
        "n": g.n(),
        "tau": g.lifetime(),
        "game": report.variant.name(),
        "positions": positions,
        "payoffs": report.payoffs,
        "coloring": coloring_value(&report.coloring),
    });
    let obj = v.as_object_mut().unwrap();
    if let Some(d) = report.delta {
        obj.insert("delta".into(), json!(d));
    }
    if let Some(trace) = &report.trace {
        obj.insert(
            "trace".into(),
            Value::Array(trace.iter().map(coloring_value).collect()),
        );
    }
    v
}

pub fn nash_find_report(game: &str, method: &str, equilibria: &[(usize, usize)]) -> Value {
    json!({
        "game": game,
        "method": method,
        "equilibria": equilibria.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

pub fn nash_check_report(game: &str, report: &NashReport) -> Value {
    let mut v = json!({
        "game": game,
        "method": report.method.name(),
        "positions": report.profile.positions(),
        "is_equilibrium": report.is_equilibrium,
    });
    if let Some(w) = report.witness {
        v.as_object_mut().unwrap().insert(
            "witness".into(),
            json!({"player": w.player, "vertex": w.vertex, "gain": w.gain}),
        );
    }
    v
}
