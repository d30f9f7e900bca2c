//! The `.tg` instance format.
//!
//! ```text
//! tg 1              # magic + format version
//! n 6 tau 5
//! layer 1
//! 1 2
//! layer 2
//! ...
//! ```
//!
//! Layers must appear in order 1..tau; a layer without edge lines is empty.
//! `#` starts a comment; blank lines are ignored. Parsing and serialization
//! round-trip exactly.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Result};
use tgg_core::TemporalGraph;

fn strip(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

pub fn parse_tg(text: &str) -> Result<TemporalGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip(l)))
        .filter(|(_, l)| !l.is_empty());

    let (ln, magic) = lines.next().ok_or_else(|| anyhow!("empty document"))?;
    if magic != "tg 1" {
        bail!("line {ln}: expected header `tg 1`, got `{magic}`");
    }
    let (ln, header) = lines.next().ok_or_else(|| anyhow!("missing `n <N> tau <T>` line"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let (n, tau) = match parts.as_slice() {
        ["n", n, "tau", t] => (
            n.parse::<usize>().map_err(|_| anyhow!("line {ln}: bad vertex count `{n}`"))?,
            t.parse::<usize>().map_err(|_| anyhow!("line {ln}: bad lifetime `{t}`"))?,
        ),
        _ => bail!("line {ln}: expected `n <N> tau <T>`, got `{header}`"),
    };

    let mut layers: Vec<Vec<(usize, usize)>> = Vec::with_capacity(tau);
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("layer") {
            let idx: usize = rest
                .trim()
                .parse()
                .map_err(|_| anyhow!("line {ln}: bad layer index `{}`", rest.trim()))?;
            if idx != layers.len() + 1 {
                bail!("line {ln}: layer {idx} out of order (expected layer {})", layers.len() + 1);
            }
            layers.push(Vec::new());
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        let (u, v) = match nums.as_slice() {
            [u, v] => (
                u.parse::<usize>().map_err(|_| anyhow!("line {ln}: bad vertex `{u}`"))?,
                v.parse::<usize>().map_err(|_| anyhow!("line {ln}: bad vertex `{v}`"))?,
            ),
            _ => bail!("line {ln}: expected `<u> <v>` edge line, got `{line}`"),
        };
        match layers.last_mut() {
            Some(layer) => layer.push((u, v)),
            None => bail!("line {ln}: edge before any `layer` line"),
        }
    }
    if layers.len() != tau {
        bail!("declared tau {} but found {} layer sections", tau, layers.len());
    }
    TemporalGraph::construct(n, layers).map_err(|e| anyhow!("{e}"))
}

pub fn serialize_tg(g: &TemporalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tg 1");
    let _ = writeln!(out, "n {} tau {}", g.n(), g.lifetime());
    for t in 1..=g.lifetime() {
        let _ = writeln!(out, "layer {t}");
        for &(u, v) in g.layer(t) {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}
