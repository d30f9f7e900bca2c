//! Canonical and random instance generation.
//!
//! The canonical families reproduce specific small instances bit-exactly;
//! the random families draw from a seeded ChaCha8 stream, so identical
//! parameters always yield identical graphs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::temporal_graph::TemporalGraph;

/// An instance family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `E_t = {{t, t+1}}` on n vertices; lifetime n-1.
    SequentialPath { n: usize },
    /// Path on 8 vertices, two layers; layer 2 drops the edge {2,3}.
    ShrinkingPath8,
    /// Cycle on 11 vertices, two layers; layer 2 drops five edges.
    ShrinkingCycle11,
    /// Sequential path plus a final full-cycle layer; lifetime n.
    SupersetCycle { n: usize },
    /// ShrinkingPath8 with layer 2 repeated up to lifetime 7, then a full
    /// path as the final layer.
    VoronoiNonexPath,
    /// Same, but the final layer is a full cycle.
    VoronoiNonexCycle,
    /// Growing path on 15 vertices, lifetime 10, with fixed edge
    /// first-appearance times.
    FigBoundaryPath,
    RandomGrowingPath { n: usize, tau: usize, seed: u64 },
    RandomGrowingCycle { n: usize, tau: usize, seed: u64 },
    RandomGrowingForest { n: usize, tau: usize, seed: u64 },
    RandomShrinkingForest { n: usize, tau: usize, seed: u64 },
    RandomShrinkingCycle { n: usize, tau: usize, seed: u64 },
    /// Independent uniform edge sets per layer.
    Random { n: usize, tau: usize, seed: u64 },
}

impl Family {
    /// Builds a family from CLI-style parts. `n`/`tau` are required only by
    /// the families that take them; `seed` defaults to 0 upstream.
    pub fn from_parts(name: &str, n: Option<usize>, tau: Option<usize>, seed: u64) -> Result<Family> {
        let need_n = || n.ok_or_else(|| Error::BadFamilyParams(format!("family `{name}` requires --n")));
        let need_tau =
            || tau.ok_or_else(|| Error::BadFamilyParams(format!("family `{name}` requires --tau")));
        Ok(match name {
            "sequential_path" => Family::SequentialPath { n: need_n()? },
            "shrinking_path8" => Family::ShrinkingPath8,
            "shrinking_cycle11" => Family::ShrinkingCycle11,
            "superset_cycle" => Family::SupersetCycle { n: need_n()? },
            "voronoi_nonex_path" => Family::VoronoiNonexPath,
            "voronoi_nonex_cycle" => Family::VoronoiNonexCycle,
            "fig_boundary_path" => Family::FigBoundaryPath,
            "random_growing_path" => Family::RandomGrowingPath { n: need_n()?, tau: need_tau()?, seed },
            "random_growing_cycle" => Family::RandomGrowingCycle { n: need_n()?, tau: need_tau()?, seed },
            "random_growing_forest" => Family::RandomGrowingForest { n: need_n()?, tau: need_tau()?, seed },
            "random_shrinking_forest" => {
                Family::RandomShrinkingForest { n: need_n()?, tau: need_tau()?, seed }
            }
            "random_shrinking_cycle" => {
                Family::RandomShrinkingCycle { n: need_n()?, tau: need_tau()?, seed }
            }
            "random" => Family::Random { n: need_n()?, tau: need_tau()?, seed },
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

fn path_edges(lo: usize, hi: usize) -> Vec<(usize, usize)> {
    (lo..hi).map(|i| (i, i + 1)).collect()
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = path_edges(1, n);
    e.push((1, n));
    e
}

/// Layers from per-edge first-appearance times: layer t holds every edge
/// with `first_app <= t`. The result is monotonically growing by
/// construction.
fn growing_from_first_app(n: usize, tau: usize, edges: &[((usize, usize), usize)]) -> TemporalGraph {
    let layers: Vec<Vec<(usize, usize)>> = (1..=tau)
        .map(|t| edges.iter().filter(|&&(_, fa)| fa <= t).map(|&(e, _)| e).collect())
        .collect();
    TemporalGraph::construct(n, layers).expect("generator produced an invalid graph")
}

/// Layers from per-edge last-presence times: layer t holds every edge with
/// `last >= t`. Monotonically shrinking by construction.
fn shrinking_from_last(n: usize, tau: usize, edges: &[((usize, usize), usize)]) -> TemporalGraph {
    let layers: Vec<Vec<(usize, usize)>> = (1..=tau)
        .map(|t| edges.iter().filter(|&&(_, last)| last >= t).map(|&(e, _)| e).collect())
        .collect();
    TemporalGraph::construct(n, layers).expect("generator produced an invalid graph")
}

/// Splits `1..=n` into consecutive segments at random cut points; each
/// segment becomes a path component of the forest.
fn random_segments(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut segments = Vec::new();
    let mut lo = 1;
    for v in 1..n {
        if rng.gen_bool(0.25) {
            segments.push((lo, v));
            lo = v + 1;
        }
    }
    segments.push((lo, n));
    segments
}

fn check_n_tau(name: &str, n: usize, min_n: usize, tau: usize) -> Result<()> {
    if n < min_n {
        return Err(Error::BadFamilyParams(format!("family `{name}` requires n >= {min_n}, got {n}")));
    }
    if tau < 1 {
        return Err(Error::BadFamilyParams(format!("family `{name}` requires tau >= 1")));
    }
    Ok(())
}

/// Produces the instance described by `family`. Deterministic: equal
/// parameters (including seed) give equal graphs.
pub fn generate(family: &Family) -> Result<TemporalGraph> {
    match *family {
        Family::SequentialPath { n } => {
            check_n_tau("sequential_path", n, 2, 1)?;
            let layers: Vec<Vec<(usize, usize)>> = (1..n).map(|t| vec![(t, t + 1)]).collect();
            TemporalGraph::construct(n, layers)
        }
        Family::ShrinkingPath8 => {
            let e1 = path_edges(1, 8);
            let e2: Vec<_> = e1.iter().copied().filter(|&e| e != (2, 3)).collect();
            TemporalGraph::construct(8, vec![e1, e2])
        }
        Family::ShrinkingCycle11 => {
            let e1 = cycle_edges(11);
            let dropped = [(1, 2), (3, 4), (9, 10), (10, 11), (1, 11)];
            let e2: Vec<_> = e1.iter().copied().filter(|e| !dropped.contains(e)).collect();
            TemporalGraph::construct(11, vec![e1, e2])
        }
        Family::SupersetCycle { n } => {
            check_n_tau("superset_cycle", n, 6, 1)?;
            let mut layers: Vec<Vec<(usize, usize)>> = (1..n).map(|t| vec![(t, t + 1)]).collect();
            layers.push(cycle_edges(n));
            TemporalGraph::construct(n, layers)
        }
        Family::VoronoiNonexPath | Family::VoronoiNonexCycle => {
            let e1 = path_edges(1, 8);
            let e2: Vec<_> = e1.iter().copied().filter(|&e| e != (2, 3)).collect();
            let mut layers = vec![e1.clone()];
            for _ in 2..=7 {
                layers.push(e2.clone());
            }
            if matches!(family, Family::VoronoiNonexPath) {
                layers.push(e1);
            } else {
                layers.push(cycle_edges(8));
            }
            TemporalGraph::construct(8, layers)
        }
        Family::FigBoundaryPath => {
            let first_app: Vec<((usize, usize), usize)> = vec![
                ((5, 6), 1),
                ((6, 7), 1),
                ((7, 8), 1),
                ((4, 5), 3),
                ((8, 9), 3),
                ((9, 10), 3),
                ((1, 2), 4),
                ((2, 3), 4),
                ((3, 4), 4),
                ((10, 11), 5),
                ((11, 12), 5),
                ((12, 13), 8),
                ((13, 14), 9),
                ((14, 15), 9),
            ];
            Ok(growing_from_first_app(15, 10, &first_app))
        }
        Family::RandomGrowingPath { n, tau, seed } => {
            check_n_tau("random_growing_path", n, 2, tau)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edges: Vec<_> = path_edges(1, n)
                .into_iter()
                .map(|e| (e, rng.gen_range(1..=tau)))
                .collect();
            Ok(growing_from_first_app(n, tau, &edges))
        }
        Family::RandomGrowingCycle { n, tau, seed } => {
            check_n_tau("random_growing_cycle", n, 3, tau)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edges: Vec<_> = cycle_edges(n)
                .into_iter()
                .map(|e| (e, rng.gen_range(1..=tau)))
                .collect();
            Ok(growing_from_first_app(n, tau, &edges))
        }
        Family::RandomGrowingForest { n, tau, seed } => {
            check_n_tau("random_growing_forest", n, 1, tau)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for (lo, hi) in random_segments(n, &mut rng) {
                for e in path_edges(lo, hi) {
                    edges.push((e, rng.gen_range(1..=tau)));
                }
            }
            Ok(growing_from_first_app(n, tau, &edges))
        }
        Family::RandomShrinkingForest { n, tau, seed } => {
            check_n_tau("random_shrinking_forest", n, 1, tau)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for (lo, hi) in random_segments(n, &mut rng) {
                for e in path_edges(lo, hi) {
                    edges.push((e, rng.gen_range(1..=tau)));
                }
            }
            Ok(shrinking_from_last(n, tau, &edges))
        }
        Family::RandomShrinkingCycle { n, tau, seed } => {
            check_n_tau("random_shrinking_cycle", n, 3, tau)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edges: Vec<_> = cycle_edges(n)
                .into_iter()
                .map(|e| (e, rng.gen_range(1..=tau)))
                .collect();
            Ok(shrinking_from_last(n, tau, &edges))
        }
        Family::Random { n, tau, seed } => {
            check_n_tau("random", n, 1, tau)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let layers: Vec<Vec<(usize, usize)>> = (0..tau)
                .map(|_| {
                    let mut layer = Vec::new();
                    for u in 1..n {
                        for v in (u + 1)..=n {
                            if rng.gen_bool(0.3) {
                                layer.push((u, v));
                            }
                        }
                    }
                    layer
                })
                .collect();
            TemporalGraph::construct(n, layers)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal_graph::{classify, UnderlyingKind};

    #[test]
    fn sequential_path_matches_definition() {
        let g = generate(&Family::SequentialPath { n: 6 }).unwrap();
        assert_eq!(g.lifetime(), 5);
        for t in 1..=5 {
            assert_eq!(g.layer(t), &[(t, t + 1)]);
        }
    }

    #[test]
    fn shrinking_path8_exact() {
        let g = generate(&Family::ShrinkingPath8).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.layer(1).len(), 7);
        assert_eq!(
            g.layer(2),
            &[(1, 2), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        );
    }

    #[test]
    fn shrinking_cycle11_exact() {
        let g = generate(&Family::ShrinkingCycle11).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(g.layer(1).len(), 11);
        let kept: Vec<(usize, usize)> =
            vec![(2, 3), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)];
        assert_eq!(g.layer(2), kept.as_slice());
        assert!(classify(&g).is_shrinking);
        assert_eq!(classify(&g).underlying_kind, UnderlyingKind::Cycle);
    }

    #[test]
    fn superset_cycle_layers() {
        let g = generate(&Family::SupersetCycle { n: 6 }).unwrap();
        assert_eq!(g.lifetime(), 6);
        for t in 1..6 {
            assert_eq!(g.layer(t), &[(t, t + 1)]);
        }
        assert_eq!(g.layer(6).len(), 6);
        assert!(classify(&g).is_superset);
        assert!(generate(&Family::SupersetCycle { n: 5 }).is_err());
    }

    #[test]
    fn voronoi_nonex_variants() {
        let p = generate(&Family::VoronoiNonexPath).unwrap();
        assert_eq!((p.n(), p.lifetime()), (8, 8));
        assert_eq!(p.layer(2), p.layer(7));
        assert_eq!(p.layer(8).len(), 7); // full path
        assert_eq!(classify(&p).underlying_kind, UnderlyingKind::Path);
        assert!(classify(&p).is_superset);

        let c = generate(&Family::VoronoiNonexCycle).unwrap();
        assert_eq!(c.layer(8).len(), 8); // full cycle
        assert_eq!(classify(&c).underlying_kind, UnderlyingKind::Cycle);
        assert!(classify(&c).is_superset);
    }

    #[test]
    fn fig_boundary_first_appearances() {
        let g = generate(&Family::FigBoundaryPath).unwrap();
        assert_eq!((g.n(), g.lifetime()), (15, 10));
        assert!(classify(&g).is_growing);
        let first = |u: usize, v: usize| (1..=10).find(|&t| g.has_edge(t, u, v));
        assert_eq!(first(5, 6), Some(1));
        assert_eq!(first(7, 8), Some(1));
        assert_eq!(first(4, 5), Some(3));
        assert_eq!(first(9, 10), Some(3));
        assert_eq!(first(1, 2), Some(4));
        assert_eq!(first(3, 4), Some(4));
        assert_eq!(first(10, 11), Some(5));
        assert_eq!(first(12, 13), Some(8));
        assert_eq!(first(14, 15), Some(9));
    }

    #[test]
    fn random_families_meet_their_class() {
        let g = generate(&Family::RandomGrowingCycle { n: 8, tau: 4, seed: 1 }).unwrap();
        let labels = classify(&g);
        assert!(labels.is_growing);
        assert_eq!(labels.underlying_kind, UnderlyingKind::Cycle);

        let p = generate(&Family::RandomGrowingPath { n: 9, tau: 5, seed: 3 }).unwrap();
        assert!(classify(&p).is_growing);
        assert_eq!(classify(&p).underlying_kind, UnderlyingKind::Path);

        let f = generate(&Family::RandomGrowingForest { n: 9, tau: 5, seed: 3 }).unwrap();
        assert!(classify(&f).is_growing);
        assert!(classify(&f).underlying_kind.is_linear_forest());

        let s = generate(&Family::RandomShrinkingForest { n: 9, tau: 5, seed: 3 }).unwrap();
        assert!(classify(&s).is_shrinking);

        let sc = generate(&Family::RandomShrinkingCycle { n: 9, tau: 5, seed: 3 }).unwrap();
        assert!(classify(&sc).is_shrinking);
        assert_eq!(classify(&sc).underlying_kind, UnderlyingKind::Cycle);
    }

    #[test]
    fn generation_is_deterministic() {
        for fam in [
            Family::Random { n: 7, tau: 3, seed: 42 },
            Family::RandomGrowingPath { n: 10, tau: 6, seed: 42 },
            Family::RandomShrinkingCycle { n: 10, tau: 4, seed: 42 },
        ] {
            assert_eq!(generate(&fam).unwrap(), generate(&fam).unwrap());
        }
    }

    #[test]
    fn family_parsing() {
        assert!(matches!(
            Family::from_parts("sequential_path", Some(6), None, 0),
            Ok(Family::SequentialPath { n: 6 })
        ));
        assert!(Family::from_parts("sequential_path", None, None, 0).is_err());
        assert!(matches!(
            Family::from_parts("nope", None, None, 0),
            Err(crate::Error::UnknownFamily(_))
        ));
    }
}
