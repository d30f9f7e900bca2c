//! Temporal graph representation, validation and classification.
//!
//! Vertices are the integers `1..=n`. A temporal graph is a fixed vertex set
//! together with an ordered sequence of edge sets (layers); the underlying
//! graph is the union of all layers.

use crate::error::{Error, Result};

/// An undirected edge stored canonically with `u < v`.
pub type Edge = (usize, usize);

/// A temporal graph: `n` vertices and `tau >= 1` per-step edge sets.
///
/// Values are immutable after construction and safe to share across threads;
/// every operation in this crate is a pure function of its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    layers: Vec<Vec<Edge>>,
}

fn canonical(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl TemporalGraph {
    /// Validates and builds a temporal graph. Edges may be given in either
    /// orientation; they are stored sorted with `u < v`.
    pub fn construct<L, E>(n: usize, layers: L) -> Result<Self>
    where
        L: IntoIterator<Item = E>,
        E: IntoIterator<Item = (usize, usize)>,
    {
        let mut out: Vec<Vec<Edge>> = Vec::new();
        for (idx, layer) in layers.into_iter().enumerate() {
            let t = idx + 1;
            let mut edges: Vec<Edge> = Vec::new();
            for (u, v) in layer {
                if u == v {
                    return Err(Error::SelfLoop { vertex: u, layer: t });
                }
                for w in [u, v] {
                    if w < 1 || w > n {
                        return Err(Error::VertexOutOfRange { vertex: w, n });
                    }
                }
                edges.push(canonical(u, v));
            }
            edges.sort_unstable();
            if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                    layer: t,
                });
            }
            out.push(edges);
        }
        if out.is_empty() {
            return Err(Error::NoLayers);
        }
        Ok(TemporalGraph { n, layers: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The lifetime tau (number of layers).
    pub fn lifetime(&self) -> usize {
        self.layers.len()
    }

    /// Edge list of layer `t` (1-indexed), sorted.
    pub fn layer(&self, t: usize) -> &[Edge] {
        &self.layers[t - 1]
    }

    pub fn layers(&self) -> &[Vec<Edge>] {
        &self.layers
    }

    /// Membership query in layer `t`; binary search over the sorted list.
    pub fn has_edge(&self, t: usize, u: usize, v: usize) -> bool {
        self.layers[t - 1].binary_search(&canonical(u, v)).is_ok()
    }

    /// Sorted edge list of the underlying graph (union of all layers).
    pub fn underlying(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self.layers.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Adjacency lists of layer `t`, 1-indexed (`adj[0]` unused).
    pub fn layer_adjacency(&self, t: usize) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in self.layer(t) {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }
}

/// Shape of the underlying graph, most specific kind first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnderlyingKind {
    Path,
    Cycle,
    LinearForest,
    Other,
}

impl UnderlyingKind {
    /// Paths are linear forests with a single component.
    pub fn is_linear_forest(self) -> bool {
        matches!(self, UnderlyingKind::Path | UnderlyingKind::LinearForest)
    }
}

/// Classification flags for a temporal graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassLabels {
    pub underlying_kind: UnderlyingKind,
    /// Last layer equals the underlying graph.
    pub is_superset: bool,
    /// `E_i ⊆ E_{i+1}` for all i.
    pub is_growing: bool,
    /// `E_{i+1} ⊆ E_i` for all i.
    pub is_shrinking: bool,
    /// All layers are equal.
    pub is_static: bool,
}

fn is_subset(a: &[Edge], b: &[Edge]) -> bool {
    // both sorted
    a.iter().all(|e| b.binary_search(e).is_ok())
}

/// Computes all class labels against the definitions.
pub fn classify(g: &TemporalGraph) -> ClassLabels {
    let underlying = g.underlying();
    let n = g.n();

    let mut degree = vec![0usize; n + 1];
    let mut uf: Vec<usize> = (0..=n).collect();
    // iterative find with path compression; paths can be 10^5 vertices long
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while uf[root] != root {
            root = uf[root];
        }
        let mut cur = x;
        while uf[cur] != root {
            let next = uf[cur];
            uf[cur] = root;
            cur = next;
        }
        root
    }
    for &(u, v) in &underlying {
        degree[u] += 1;
        degree[v] += 1;
        let (ru, rv) = (find(&mut uf, u), find(&mut uf, v));
        uf[ru] = rv;
    }
    let mut components = 0usize;
    for v in 1..=n {
        if find(&mut uf, v) == v {
            components += 1;
        }
    }
    let m = underlying.len();
    let max_degree = (1..=n).map(|v| degree[v]).max().unwrap_or(0);
    let connected = components == 1;
    let acyclic = m + components == n;

    let underlying_kind = if connected && acyclic && max_degree <= 2 {
        UnderlyingKind::Path
    } else if connected && n >= 3 && m == n && max_degree == 2 {
        UnderlyingKind::Cycle
    } else if acyclic && max_degree <= 2 {
        UnderlyingKind::LinearForest
    } else {
        UnderlyingKind::Other
    };

    let tau = g.lifetime();
    let is_growing = (1..tau).all(|t| is_subset(g.layer(t), g.layer(t + 1)));
    let is_shrinking = (1..tau).all(|t| is_subset(g.layer(t + 1), g.layer(t)));
    let is_static = (1..tau).all(|t| g.layer(t) == g.layer(t + 1));
    let is_superset = g.layer(tau) == underlying.as_slice();

    ClassLabels {
        underlying_kind,
        is_superset,
        is_growing,
        is_shrinking,
        is_static,
    }
}

/// Central vertex (or the two central vertices) of the interval `[lo, hi]`.
///
/// For odd length the single center is `lo + len/2`; for even length the
/// pair `(lo + len/2 - 1, lo + len/2)`.
pub fn central_vertices(lo: usize, hi: usize) -> Result<(usize, Option<usize>)> {
    if lo > hi {
        return Err(Error::EmptyInterval { lo, hi });
    }
    let len = hi - lo + 1;
    if len % 2 == 1 {
        Ok((lo + len / 2, None))
    } else {
        Ok((lo + len / 2 - 1, Some(lo + len / 2)))
    }
}

/// True if `m` is a central vertex of `[lo, hi]`.
pub fn is_central(m: usize, lo: usize, hi: usize) -> bool {
    match central_vertices(lo, hi) {
        Ok((a, b)) => m == a || b == Some(m),
        Err(_) => false,
    }
}

/// The two around-the-cycle distances between `u < v` on a cycle with `n`
/// vertices in numeric order: `d1 = v - u` and `d2 = u + (n - v)`.
pub fn cycle_distances(u: usize, v: usize, n: usize) -> Result<(usize, usize)> {
    if u >= v || v > n {
        return Err(Error::BadCyclePair { u, v, n });
    }
    Ok((v - u, u + (n - v)))
}

/// A monotonically growing temporal cycle brought into canonical position:
/// trailing duplicate layers removed and vertices relabeled along the cycle
/// so that the edge `{n,1}` first appears in the last layer.
#[derive(Debug, Clone)]
pub struct NormalizedCycle {
    pub graph: TemporalGraph,
    /// `relabeling[orig] = new`, 1-indexed (`relabeling[0]` unused).
    pub relabeling: Vec<usize>,
    /// True when trimming left a single (static) layer; no canonical
    /// rotation exists in that case.
    pub degenerate: bool,
}

impl NormalizedCycle {
    /// Maps a vertex of the normalized graph back to the original label.
    pub fn original_of(&self, new: usize) -> usize {
        self.relabeling.iter().position(|&x| x == new).unwrap()
    }
}

/// Walks the underlying cycle and returns the vertex order starting at
/// `start`, first step towards `next`.
fn cycle_order(underlying: &[Edge], n: usize, start: usize, next: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in underlying {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut order = Vec::with_capacity(n);
    order.push(start);
    let (mut prev, mut cur) = (start, next);
    while cur != start {
        order.push(cur);
        let step = adj[cur].iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = step;
    }
    order
}

/// Normalizes a monotonically growing temporal cycle.
///
/// Trailing layers equal to their predecessor are removed first. If only one
/// layer remains the instance is flagged degenerate. Otherwise the vertices
/// are relabeled along the cycle so that an edge of `E_tau \ E_{tau-1}`
/// becomes `{n,1}`: if the graph already carries `{1,n}` as such an edge with
/// the cycle in numeric order the relabeling is the identity, else the
/// lexicographically smallest candidate edge is used.
pub fn normalize_growing_cycle(g: &TemporalGraph) -> Result<NormalizedCycle> {
    let labels = classify(g);
    if !labels.is_growing || labels.underlying_kind != UnderlyingKind::Cycle {
        return Err(Error::NotGrowingCycle);
    }
    let n = g.n();

    let mut layers: Vec<Vec<Edge>> = g.layers().to_vec();
    while layers.len() > 1 && layers[layers.len() - 1] == layers[layers.len() - 2] {
        layers.pop();
    }
    let tau = layers.len();
    let identity: Vec<usize> = (0..=n).collect();
    if tau == 1 {
        return Ok(NormalizedCycle {
            graph: TemporalGraph { n, layers },
            relabeling: identity,
            degenerate: true,
        });
    }

    let last = &layers[tau - 1];
    let prev = &layers[tau - 2];
    let candidates: Vec<Edge> = last
        .iter()
        .copied()
        .filter(|e| prev.binary_search(e).is_err())
        .collect();
    let underlying = g.underlying();
    let numeric_order = {
        let mut expected: Vec<Edge> = (1..n).map(|i| (i, i + 1)).collect();
        expected.push((1, n));
        expected.sort_unstable();
        underlying == expected
    };

    if numeric_order && candidates.binary_search(&(1, n)).is_ok() {
        return Ok(NormalizedCycle {
            graph: TemporalGraph { n, layers },
            relabeling: identity,
            degenerate: false,
        });
    }

    // candidates is sorted, so the first entry is lexicographically smallest
    let (a, b) = candidates[0];
    // Walk from a to b around the cycle avoiding the chosen edge; the walk
    // order becomes the new labels 1..n, putting {a,b} at {1,n}.
    let mut adj_next = b; // any neighbor of a other than b starts the walk
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in &underlying {
        adj[u].push(v);
        adj[v].push(u);
    }
    for &w in &adj[a] {
        if w != b {
            adj_next = w;
            break;
        }
    }
    let order = cycle_order(&underlying, n, a, adj_next);
    debug_assert_eq!(*order.last().unwrap(), b);
    let mut relabeling = vec![0usize; n + 1];
    for (i, &orig) in order.iter().enumerate() {
        relabeling[orig] = i + 1;
    }

    let relabeled: Vec<Vec<(usize, usize)>> = layers
        .iter()
        .map(|layer| layer.iter().map(|&(u, v)| (relabeling[u], relabeling[v])).collect())
        .collect();
    let graph = TemporalGraph::construct(n, relabeled)?;
    debug_assert!(graph.has_edge(tau, 1, n) && !graph.has_edge(tau - 1, 1, n));
    Ok(NormalizedCycle {
        graph,
        relabeling,
        degenerate: false,
    })
}

/// Deletes the last layer of a normalized growing cycle, yielding the
/// monotonically growing temporal linear forest used by the cycle algorithm.
pub fn forest_of_cycle(nc: &NormalizedCycle) -> Result<TemporalGraph> {
    if nc.degenerate {
        return Err(Error::DegenerateCycle);
    }
    let layers = nc.graph.layers()[..nc.graph.lifetime() - 1].to_vec();
    Ok(TemporalGraph {
        n: nc.graph.n(),
        layers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> TemporalGraph {
        let layers: Vec<Vec<(usize, usize)>> = (1..6).map(|t| vec![(t, t + 1)]).collect();
        TemporalGraph::construct(6, layers).unwrap()
    }

    #[test]
    fn construct_sequential_path() {
        let g = fig1();
        assert_eq!(g.n(), 6);
        assert_eq!(g.lifetime(), 5);
        assert!(g.has_edge(3, 3, 4));
        assert!(g.has_edge(3, 4, 3)); // orientation-insensitive
    }

    #[test]
    fn construct_rejects_out_of_range() {
        let err = TemporalGraph::construct(3, vec![vec![(0, 2)]]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 0, n: 3 });
    }

    #[test]
    fn construct_rejects_self_loop_and_duplicate() {
        assert_eq!(
            TemporalGraph::construct(3, vec![vec![(2, 2)]]).unwrap_err(),
            Error::SelfLoop { vertex: 2, layer: 1 }
        );
        assert_eq!(
            TemporalGraph::construct(3, vec![vec![(1, 2), (2, 1)]]).unwrap_err(),
            Error::DuplicateEdge { u: 1, v: 2, layer: 1 }
        );
    }

    #[test]
    fn construct_accepts_empty_layer() {
        let g = TemporalGraph::construct(4, vec![Vec::<(usize, usize)>::new()]).unwrap();
        assert_eq!(g.lifetime(), 1);
        assert!(g.layer(1).is_empty());
    }

    #[test]
    fn construct_rejects_zero_lifetime() {
        let layers: Vec<Vec<(usize, usize)>> = vec![];
        assert_eq!(TemporalGraph::construct(4, layers).unwrap_err(), Error::NoLayers);
    }

    #[test]
    fn classify_sequential_path() {
        let labels = classify(&fig1());
        assert_eq!(labels.underlying_kind, UnderlyingKind::Path);
        assert!(!labels.is_superset);
        assert!(!labels.is_growing);
        assert!(!labels.is_shrinking);
        assert!(!labels.is_static);
    }

    #[test]
    fn classify_static_path() {
        let edges: Vec<(usize, usize)> = (1..6).map(|i| (i, i + 1)).collect();
        let g = TemporalGraph::construct(6, vec![edges.clone(), edges]).unwrap();
        let labels = classify(&g);
        assert_eq!(labels.underlying_kind, UnderlyingKind::Path);
        assert!(labels.is_superset && labels.is_growing && labels.is_shrinking && labels.is_static);
    }

    #[test]
    fn classify_shrinking_path() {
        let e1: Vec<(usize, usize)> = (1..8).map(|i| (i, i + 1)).collect();
        let e2: Vec<(usize, usize)> = e1.iter().copied().filter(|&e| e != (2, 3)).collect();
        let g = TemporalGraph::construct(8, vec![e1, e2]).unwrap();
        let labels = classify(&g);
        assert_eq!(labels.underlying_kind, UnderlyingKind::Path);
        assert!(labels.is_shrinking);
        assert!(!labels.is_superset);
        assert!(!labels.is_growing);
    }

    #[test]
    fn classify_forest_and_other() {
        let g = TemporalGraph::construct(5, vec![vec![(1, 2), (4, 5)]]).unwrap();
        assert_eq!(classify(&g).underlying_kind, UnderlyingKind::LinearForest);
        assert!(classify(&g).underlying_kind.is_linear_forest());
        let star = TemporalGraph::construct(4, vec![vec![(1, 2), (1, 3), (1, 4)]]).unwrap();
        assert_eq!(classify(&star).underlying_kind, UnderlyingKind::Other);
    }

    #[test]
    fn central_vertices_examples() {
        assert_eq!(central_vertices(1, 5).unwrap(), (3, None));
        assert_eq!(central_vertices(1, 4).unwrap(), (2, Some(3)));
        assert_eq!(central_vertices(7, 7).unwrap(), (7, None));
        assert_eq!(central_vertices(3, 2).unwrap_err(), Error::EmptyInterval { lo: 3, hi: 2 });
    }

    #[test]
    fn cycle_distances_examples() {
        assert_eq!(cycle_distances(2, 5, 8).unwrap(), (3, 5));
        assert_eq!(cycle_distances(1, 9, 9).unwrap(), (8, 1));
        assert!(cycle_distances(5, 5, 8).is_err());
    }

    #[test]
    fn normalize_rotates_new_edge_to_n1() {
        // underlying 4-cycle 1-2-3-4; layer 2 completes it
        let g = TemporalGraph::construct(
            4,
            vec![vec![(1, 2), (1, 4)], vec![(1, 2), (2, 3), (3, 4), (1, 4)]],
        )
        .unwrap();
        let nc = normalize_growing_cycle(&g).unwrap();
        assert!(!nc.degenerate);
        assert_eq!(nc.relabeling[1..], [2, 1, 4, 3]);
        let f = forest_of_cycle(&nc).unwrap();
        assert!(classify(&f).underlying_kind.is_linear_forest());
    }

    #[test]
    fn normalize_static_cycle_is_degenerate() {
        let cyc = vec![(1, 2), (2, 3), (3, 4), (1, 4)];
        let g = TemporalGraph::construct(4, vec![cyc.clone(), cyc]).unwrap();
        let nc = normalize_growing_cycle(&g).unwrap();
        assert!(nc.degenerate);
        assert_eq!(nc.graph.lifetime(), 1);
        assert!(forest_of_cycle(&nc).is_err());
    }

    #[test]
    fn normalize_identity_when_already_canonical() {
        let mut layers: Vec<Vec<(usize, usize)>> = vec![];
        let path: Vec<(usize, usize)> = (1..6).map(|i| (i, i + 1)).collect();
        layers.push(path.clone());
        let mut full = path;
        full.push((1, 6));
        layers.push(full);
        let g = TemporalGraph::construct(6, layers).unwrap();
        let nc = normalize_growing_cycle(&g).unwrap();
        assert_eq!(nc.relabeling, (0..=6).collect::<Vec<_>>());
        assert!(!nc.degenerate);
    }

    #[test]
    fn normalize_rejects_non_growing() {
        assert_eq!(normalize_growing_cycle(&fig1()).unwrap_err(), Error::NotGrowingCycle);
    }

    #[test]
    fn forest_of_cycle_drops_exactly_last_layer() {
        let mut layers: Vec<Vec<(usize, usize)>> = vec![];
        let path: Vec<(usize, usize)> = (1..5).map(|i| (i, i + 1)).collect();
        layers.push(path.clone());
        let mut full = path;
        full.push((1, 5));
        layers.push(full);
        let g = TemporalGraph::construct(5, layers).unwrap();
        let nc = normalize_growing_cycle(&g).unwrap();
        let f = forest_of_cycle(&nc).unwrap();
        assert_eq!(f.lifetime(), nc.graph.lifetime() - 1);
        assert_eq!(classify(&f).underlying_kind, UnderlyingKind::Path);
    }
}
