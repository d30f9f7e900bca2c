//! Strict foremost temporal walks and the interval/boundary machinery for
//! growing paths and forests.
//!
//! Distances follow the repeated-last-layer rule: a walk may keep using the
//! final layer after the lifetime has passed. Unreachable stays `None`, never
//! a large integer.

use crate::error::{Error, Result};
use crate::temporal_graph::{classify, TemporalGraph};

/// Arrival times of strict foremost walks from one source to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalDistanceRow {
    source: usize,
    /// 1-indexed; `arrival[0]` unused. `None` = unreachable.
    arrival: Vec<Option<usize>>,
}

impl TemporalDistanceRow {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.arrival[v]
    }

    /// Arrivals for vertices 1..n in order.
    pub fn values(&self) -> &[Option<usize>] {
        &self.arrival[1..]
    }
}

/// Single-source arrival times in one forward sweep: one pass per layer,
/// then a hop-count search on the last layer for steps past the lifetime.
pub fn all_distances(g: &TemporalGraph, u: usize) -> Result<TemporalDistanceRow> {
    g.check_vertex(u)?;
    let n = g.n();
    let tau = g.lifetime();
    let mut arrival: Vec<Option<usize>> = vec![None; n + 1];
    arrival[u] = Some(0);
    let mut reached = vec![u];

    for t in 1..=tau {
        let mut newly = Vec::new();
        for &(a, b) in g.layer(t) {
            // only vertices reached strictly before step t may extend a walk
            // at step t (timestamps along a walk strictly increase)
            let a_in = arrival[a].map_or(false, |x| x < t);
            let b_in = arrival[b].map_or(false, |x| x < t);
            if a_in != b_in {
                let w = if a_in { b } else { a };
                if arrival[w].is_none() {
                    arrival[w] = Some(t);
                    newly.push(w);
                }
            }
        }
        reached.extend(newly);
    }

    // Steps beyond the lifetime reuse the last layer: plain breadth-first
    // search seeded with everything reached so far, arrival = tau + hops.
    let adj = g.layer_adjacency(tau);
    let mut queue: std::collections::VecDeque<usize> = reached.into_iter().collect();
    while let Some(v) = queue.pop_front() {
        let base = arrival[v].unwrap().max(tau);
        for &w in &adj[v] {
            if arrival[w].is_none() {
                arrival[w] = Some(base + 1);
                queue.push_back(w);
            }
        }
    }

    Ok(TemporalDistanceRow { source: u, arrival })
}

/// `td(u,v)`: earliest arrival of a strict temporal walk from u to v.
pub fn temporal_distance(g: &TemporalGraph, u: usize, v: usize) -> Result<Option<usize>> {
    g.check_vertex(v)?;
    Ok(all_distances(g, u)?.get(v))
}

/// The interval of vertices reachable from `v` within `horizon` steps on a
/// growing linear forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReachInterval {
    pub lo: usize,
    pub hi: usize,
    pub horizon: usize,
}

impl ReachInterval {
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }
}

/// A monotonically growing temporal linear forest whose components are
/// intervals of consecutive vertices, indexed by edge first-appearance
/// times for O(1) per-step frontier checks.
///
/// Built once and reused when many reach intervals are needed on the same
/// graph (the cycle equilibrium algorithm queries every vertex).
#[derive(Debug, Clone)]
pub struct GrowingForest {
    n: usize,
    tau: usize,
    /// `first_app[i]` = first layer containing edge {i, i+1}; `None` when
    /// that edge never exists (component boundary). Index 0 unused,
    /// valid for i in 1..n.
    first_app: Vec<Option<usize>>,
}

impl GrowingForest {
    /// Validates that `g` is a growing linear forest whose components are
    /// consecutive-vertex intervals, and indexes its edges.
    pub fn new(g: &TemporalGraph) -> Result<GrowingForest> {
        let labels = classify(g);
        if !labels.is_growing || !labels.underlying_kind.is_linear_forest() {
            return Err(Error::NotGrowingForest);
        }
        let n = g.n();
        let tau = g.lifetime();
        let mut first_app: Vec<Option<usize>> = vec![None; n.max(1)];
        for t in (1..=tau).rev() {
            for &(a, b) in g.layer(t) {
                if b != a + 1 {
                    // the interval machinery needs components laid out as
                    // consecutive vertex ranges
                    return Err(Error::NotGrowingForest);
                }
                first_app[a] = Some(t);
            }
        }
        Ok(GrowingForest { n, tau, first_app })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lifetime(&self) -> usize {
        self.tau
    }

    /// First layer in which edge {i, i+1} appears.
    pub fn edge_first_app(&self, i: usize) -> Option<usize> {
        self.first_app[i]
    }

    /// Frontier-extension sweep: at step t the interval grows by one vertex
    /// on each side whose bordering edge is already present. Steps past the
    /// lifetime add nothing (no last-layer repetition here).
    pub fn interval(&self, v: usize, horizon: usize) -> ReachInterval {
        let (mut lo, mut hi) = (v, v);
        for t in 1..=horizon.min(self.tau) {
            if lo > 1 && self.first_app[lo - 1].map_or(false, |fa| fa <= t) {
                lo -= 1;
            }
            if hi < self.n && self.first_app[hi].map_or(false, |fa| fa <= t) {
                hi += 1;
            }
        }
        ReachInterval { lo, hi, horizon }
    }
}

/// One-shot form of [`GrowingForest::interval`].
pub fn reachable_interval(g: &TemporalGraph, v: usize, horizon: usize) -> Result<ReachInterval> {
    g.check_vertex(v)?;
    Ok(GrowingForest::new(g)?.interval(v, horizon))
}

/// Which side of the vertex an interval lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A maximal run of vertices between two consecutive boundaries, stored as
/// the inclusive range `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryInterval {
    pub side: Side,
    pub lo: usize,
    pub hi: usize,
}

impl BoundaryInterval {
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Left/right boundaries of a vertex on a growing path and the intervals
/// between them.
///
/// A vertex `b <= v` is a left boundary when the edge {b-1, b} first appears
/// strictly after a foremost walk from v arrives at b (with the missing edge
/// at b = 1 counting as "appears never"); right boundaries are symmetric
/// via {b, b+1} and b = n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDecomposition {
    pub vertex: usize,
    pub left_boundaries: Vec<usize>,
    pub right_boundaries: Vec<usize>,
    /// `[l, l')` runs between consecutive left boundaries, ascending.
    pub left_intervals: Vec<BoundaryInterval>,
    /// `(r, r']` runs between consecutive right boundaries, ascending.
    pub right_intervals: Vec<BoundaryInterval>,
}

impl BoundaryDecomposition {
    /// All intervals in left-to-right order.
    pub fn intervals(&self) -> impl Iterator<Item = &BoundaryInterval> {
        self.left_intervals.iter().chain(self.right_intervals.iter())
    }

    /// The unique interval containing `w`; `w` must differ from the vertex.
    pub fn interval_of(&self, w: usize) -> Result<BoundaryInterval> {
        if w == self.vertex {
            return Err(Error::IntervalAtSelf(w));
        }
        let list = if w < self.vertex { &self.left_intervals } else { &self.right_intervals };
        let idx = list.partition_point(|iv| iv.hi < w);
        Ok(list[idx])
    }
}

/// Boundary decomposition of `v` on a growing temporal path.
pub fn boundaries(g: &TemporalGraph, v: usize) -> Result<BoundaryDecomposition> {
    g.check_vertex(v)?;
    let labels = classify(g);
    if !labels.is_growing || labels.underlying_kind != crate::temporal_graph::UnderlyingKind::Path {
        return Err(Error::NotGrowingPath);
    }
    let forest = GrowingForest::new(g).map_err(|_| Error::NotGrowingPath)?;
    let n = g.n();
    let row = all_distances(g, v)?;
    // growing implies the last layer is the whole path, so every td is finite
    let td = |x: usize| row.get(x).expect("growing path is connected");

    let mut left_boundaries = Vec::new();
    for b in 1..=v {
        let blocked = match b.checked_sub(1).filter(|&i| i >= 1) {
            None => true, // b = 1: no edge to the left
            Some(i) => forest.edge_first_app(i).map_or(true, |fa| fa > td(b)),
        };
        if blocked {
            left_boundaries.push(b);
        }
    }
    let mut right_boundaries = Vec::new();
    for b in v..=n {
        let blocked = if b == n {
            true
        } else {
            forest.edge_first_app(b).map_or(true, |fa| fa > td(b))
        };
        if blocked {
            right_boundaries.push(b);
        }
    }

    let left_intervals = left_boundaries
        .windows(2)
        .map(|w| BoundaryInterval { side: Side::Left, lo: w[0], hi: w[1] - 1 })
        .collect();
    let right_intervals = right_boundaries
        .windows(2)
        .map(|w| BoundaryInterval { side: Side::Right, lo: w[0] + 1, hi: w[1] })
        .collect();

    Ok(BoundaryDecomposition {
        vertex: v,
        left_boundaries,
        right_boundaries,
        left_intervals,
        right_intervals,
    })
}
