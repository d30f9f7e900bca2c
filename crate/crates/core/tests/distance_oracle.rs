//! Cross-checks of the optimized reachability code against a deliberately
//! naive time-stepped simulation, plus structural properties of the
//! classification and generator helpers.

use proptest::prelude::*;
use tgg_core::{
    all_distances, central_vertices, classify, cycle_distances, diffusion_play, generate,
    normalize_growing_cycle, reachable_interval, Family, StrategyProfile, TemporalGraph,
};

/// Earliest strict-walk arrival times by brute-force simulation: one pass
/// per time step, layers past the lifetime repeat the last layer. A vertex
/// reached at step t may only propagate at steps > t.
fn naive_distances(g: &TemporalGraph, src: usize) -> Vec<Option<usize>> {
    let n = g.n();
    let tau = g.lifetime();
    let mut arrival: Vec<Option<usize>> = vec![None; n + 1];
    arrival[src] = Some(0);
    for t in 1..=tau + n + 2 {
        let mut next = arrival.clone();
        for &(a, b) in g.layer(t.min(tau)) {
            for (x, y) in [(a, b), (b, a)] {
                if arrival[x].is_some_and(|ax| ax < t) && next[y].is_none() {
                    next[y] = Some(t);
                }
            }
        }
        arrival = next;
    }
    arrival[1..].to_vec()
}

fn mixed_instances() -> Vec<TemporalGraph> {
    let mut out = Vec::new();
    for seed in 0..40u64 {
        let n = 1 + (seed as usize % 9);
        let tau = 1 + (seed as usize % 5);
        for fam in [
            Family::Random { n, tau, seed },
            Family::RandomGrowingPath { n: n.max(2), tau, seed },
            Family::RandomGrowingCycle { n: n.max(3), tau, seed },
            Family::RandomGrowingForest { n: n.max(2), tau, seed },
            Family::RandomShrinkingForest { n: n.max(2), tau, seed },
            Family::RandomShrinkingCycle { n: n.max(3), tau, seed },
        ] {
            out.push(generate(&fam).unwrap());
        }
    }
    out.push(generate(&Family::SequentialPath { n: 6 }).unwrap());
    out.push(generate(&Family::ShrinkingPath8).unwrap());
    out.push(generate(&Family::ShrinkingCycle11).unwrap());
    out.push(generate(&Family::VoronoiNonexPath).unwrap());
    out.push(generate(&Family::VoronoiNonexCycle).unwrap());
    out.push(generate(&Family::FigBoundaryPath).unwrap());
    out
}

#[test]
fn all_distances_matches_naive_simulation() {
    for g in mixed_instances() {
        for src in 1..=g.n() {
            let row = all_distances(&g, src).unwrap();
            assert_eq!(row.values(), naive_distances(&g, src).as_slice());
        }
    }
}

proptest! {
    #[test]
    fn all_distances_matches_naive_on_arbitrary_graphs(
        n in 1usize..9,
        tau in 1usize..6,
        seed in 0u64..500,
    ) {
        let g = generate(&Family::Random { n, tau, seed }).unwrap();
        for src in 1..=n {
            let row = all_distances(&g, src).unwrap();
            let naive = naive_distances(&g, src);
            prop_assert_eq!(row.values(), naive.as_slice());
        }
    }

    #[test]
    fn central_vertices_split_interval_evenly(lo in 1usize..50, len in 1usize..50) {
        let hi = lo + len - 1;
        let (m, m2) = central_vertices(lo, hi).unwrap();
        prop_assert!(lo <= m && m <= hi);
        // the two sides of a central vertex differ in size by at most one
        prop_assert!((m - lo).abs_diff(hi - m) <= 1);
        match m2 {
            Some(m2) => {
                prop_assert_eq!(len % 2, 0);
                prop_assert_eq!(m2, m + 1);
                prop_assert!((m2 - lo).abs_diff(hi - m2) <= 1);
            }
            None => prop_assert_eq!(len % 2, 1),
        }
    }

    #[test]
    fn cycle_distances_sum_to_n(n in 3usize..200, a in 1usize..200, b in 1usize..200) {
        let (u, v) = (1 + a % n, 1 + b % n);
        if u < v {
            let (d1, d2) = cycle_distances(u, v, n).unwrap();
            prop_assert_eq!(d1 + d2, n);
            prop_assert_eq!(d1, v - u);
        }
    }
}

#[test]
fn reach_interval_equals_truncated_distances() {
    for seed in 0..120u64 {
        let n = 2 + (seed as usize % 12);
        let tau = 1 + (seed as usize % 6);
        let g = generate(&Family::RandomGrowingForest { n, tau, seed }).unwrap();
        for v in 1..=n {
            let row = all_distances(&g, v).unwrap();
            for horizon in 0..=tau {
                let iv = reachable_interval(&g, v, horizon).unwrap();
                // arrivals <= tau never involve the repeated-last-layer rule,
                // so the two notions of reach agree up to that horizon
                let expected: Vec<usize> = (1..=n)
                    .filter(|&x| row.get(x).is_some_and(|d| d <= horizon))
                    .collect();
                let got: Vec<usize> = (iv.lo..=iv.hi).collect();
                assert_eq!(got, expected, "seed {seed} v {v} horizon {horizon}");
            }
        }
    }
}

#[test]
fn normalization_preserves_payoffs_up_to_relabeling() {
    for seed in 0..200u64 {
        let n = 3 + (seed as usize % 8);
        let tau = 1 + (seed as usize % 5);
        let g = generate(&Family::RandomGrowingCycle { n, tau, seed }).unwrap();
        let nc = normalize_growing_cycle(&g).unwrap();
        for p1 in 1..=n {
            for p2 in 1..=n {
                let orig = diffusion_play(&g, &StrategyProfile::pair(p1, p2), false).unwrap();
                let mapped = StrategyProfile::pair(nc.relabeling[p1], nc.relabeling[p2]);
                let norm = diffusion_play(&nc.graph, &mapped, false).unwrap();
                assert_eq!(orig.payoffs, norm.payoffs, "seed {seed} profile ({p1},{p2})");
            }
        }
    }
}

#[test]
fn generation_is_deterministic() {
    for seed in [0u64, 1, 17, 993] {
        for fam in [
            Family::Random { n: 8, tau: 4, seed },
            Family::RandomGrowingCycle { n: 9, tau: 5, seed },
            Family::RandomShrinkingForest { n: 7, tau: 3, seed },
        ] {
            assert_eq!(generate(&fam).unwrap(), generate(&fam).unwrap());
        }
    }
}

#[test]
fn growing_implies_superset() {
    for g in mixed_instances() {
        let labels = classify(&g);
        if labels.is_growing {
            assert!(labels.is_superset);
        }
        if labels.is_static {
            assert!(labels.is_growing && labels.is_shrinking);
        }
    }
}

#[test]
fn classification_ignores_edge_order() {
    for g in mixed_instances() {
        // feed the layers back in reversed order within each layer; the
        // canonical representation (and hence every label) must not change
        let reversed: Vec<Vec<(usize, usize)>> = g
            .layers()
            .iter()
            .map(|l| l.iter().rev().map(|&(u, v)| (v, u)).collect())
            .collect();
        let h = TemporalGraph::construct(g.n(), reversed).unwrap();
        assert_eq!(g, h);
        assert_eq!(classify(&g), classify(&h));
    }
}
