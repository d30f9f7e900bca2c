//! Nash-equilibrium machinery: exhaustive two-player oracles plus the
//! structural constructions for superset paths/forests, growing cycles and
//! growing paths.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::games::{delta, diffusion_play, voronoi_play, DeltaVariant, StrategyProfile};
use crate::reachability::{all_distances, boundaries, GrowingForest, Side};
use crate::temporal_graph::{
    central_vertices, classify, cycle_distances, forest_of_cycle, is_central,
    normalize_growing_cycle, TemporalGraph, UnderlyingKind,
};

/// Which of the two game semantics an equilibrium question refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameKind {
    Diffusion,
    Voronoi,
}

impl GameKind {
    pub fn name(self) -> &'static str {
        match self {
            GameKind::Diffusion => "diffusion",
            GameKind::Voronoi => "voronoi",
        }
    }
}

/// How a profile was obtained / checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    GrowingCycle,
    SupersetPath,
    SupersetForest,
    VoronoiIteration,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::BruteForce => "brute_force",
            Method::GrowingCycle => "growing_cycle",
            Method::SupersetPath => "superset_path",
            Method::SupersetForest => "superset_forest",
            Method::VoronoiIteration => "voronoi_iteration",
        }
    }
}

/// A profitable unilateral deviation: who moves, where to, and the strict
/// payoff gain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deviation {
    pub player: usize,
    pub vertex: usize,
    pub gain: i64,
}

/// Result of an equilibrium computation or check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashReport {
    pub profile: StrategyProfile,
    pub is_equilibrium: bool,
    pub witness: Option<Deviation>,
    pub method: Method,
}

fn payoff_pair(kind: GameKind, g: &TemporalGraph, p1: usize, p2: usize) -> Result<(usize, usize)> {
    let profile = StrategyProfile::pair(p1, p2);
    let report = match kind {
        GameKind::Diffusion => diffusion_play(g, &profile, false)?,
        GameKind::Voronoi => voronoi_play(g, &profile)?,
    };
    Ok((report.payoffs[0], report.payoffs[1]))
}

fn two_player(profile: &StrategyProfile) -> Result<(usize, usize)> {
    match profile.positions() {
        &[p1, p2] => Ok((p1, p2)),
        other => Err(Error::NotTwoPlayers(other.len())),
    }
}

/// The maximum payoff `player` can get against a fixed `opponent`, together
/// with every position attaining it (ascending).
pub fn best_responses(
    kind: GameKind,
    g: &TemporalGraph,
    opponent: usize,
    player: usize,
) -> Result<(usize, Vec<usize>)> {
    g.check_vertex(opponent)?;
    let mut best = 0usize;
    let mut argmax = Vec::new();
    for cand in 1..=g.n() {
        let (u1, u2) = if player == 1 {
            payoff_pair(kind, g, cand, opponent)?
        } else {
            let (a, b) = payoff_pair(kind, g, opponent, cand)?;
            (b, a)
        };
        let _ = u2;
        if argmax.is_empty() || u1 > best {
            best = u1;
            argmax.clear();
            argmax.push(cand);
        } else if u1 == best {
            argmax.push(cand);
        }
    }
    Ok((best, argmax))
}

/// Exhaustive equilibrium check for a two-player profile. On failure the
/// witness names the lowest-indexed deviating player and her lowest-numbered
/// best deviation.
pub fn is_nash(kind: GameKind, g: &TemporalGraph, profile: &StrategyProfile) -> Result<NashReport> {
    let (p1, p2) = two_player(profile)?;
    let (u1, u2) = payoff_pair(kind, g, p1, p2)?;
    for (player, own, other_payoff) in [(1, p1, u1), (2, p2, u2)] {
        let opponent = if player == 1 { p2 } else { p1 };
        let (best, argmax) = best_responses(kind, g, opponent, player)?;
        if best > other_payoff {
            let _ = own;
            return Ok(NashReport {
                profile: profile.clone(),
                is_equilibrium: false,
                witness: Some(Deviation {
                    player,
                    vertex: argmax[0],
                    gain: best as i64 - other_payoff as i64,
                }),
                method: Method::BruteForce,
            });
        }
    }
    Ok(NashReport {
        profile: profile.clone(),
        is_equilibrium: true,
        witness: None,
        method: Method::BruteForce,
    })
}

/// Both players' payoffs for every ordered profile; `u[p1-1][p2-1]`.
fn payoff_matrices(kind: GameKind, g: &TemporalGraph) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = g.n();
    let rows: Vec<Vec<(usize, usize)>> = (1..=n)
        .into_par_iter()
        .map(|p1| {
            (1..=n)
                .map(|p2| payoff_pair(kind, g, p1, p2).expect("positions are in range"))
                .collect()
        })
        .collect();
    let u1 = rows.iter().map(|r| r.iter().map(|&(a, _)| a).collect()).collect();
    let u2 = rows.iter().map(|r| r.iter().map(|&(_, b)| b).collect()).collect();
    (u1, u2)
}

/// Every ordered two-player Nash equilibrium, lexicographically ascending.
pub fn find_all_nash(kind: GameKind, g: &TemporalGraph) -> Vec<(usize, usize)> {
    let n = g.n();
    let (u1, u2) = payoff_matrices(kind, g);
    let col_max: Vec<usize> =
        (0..n).map(|c| (0..n).map(|r| u1[r][c]).max().unwrap()).collect();
    let row_max: Vec<usize> = (0..n).map(|r| *u2[r].iter().max().unwrap()).collect();
    let mut out = Vec::new();
    for p1 in 0..n {
        for p2 in 0..n {
            if u1[p1][p2] == col_max[p2] && u2[p1][p2] == row_max[p1] {
                out.push((p1 + 1, p2 + 1));
            }
        }
    }
    out
}

/// The nice central vertices of a growing linear forest: vertices whose
/// reach interval attains the maximum size R and that sit centrally in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceCentralSet {
    pub r: usize,
    /// Ascending.
    pub vertices: Vec<usize>,
    /// `omegas[i]` = reach interval (lo, hi) of `vertices[i]`.
    pub omegas: Vec<(usize, usize)>,
}

/// Scans all vertices of a growing linear forest; O(n * horizon).
pub fn nice_central_vertices(f: &TemporalGraph, horizon: usize) -> Result<NiceCentralSet> {
    let forest = GrowingForest::new(f)?;
    nice_central_of_forest(&forest, horizon)
}

fn nice_central_of_forest(forest: &GrowingForest, horizon: usize) -> Result<NiceCentralSet> {
    let n = forest.n();
    let mut r = 0usize;
    let mut intervals = Vec::with_capacity(n);
    for v in 1..=n {
        let iv = forest.interval(v, horizon);
        r = r.max(iv.len());
        intervals.push(iv);
    }
    let mut vertices = Vec::new();
    let mut omegas = Vec::new();
    for v in 1..=n {
        let iv = intervals[v - 1];
        if iv.len() == r && is_central(v, iv.lo, iv.hi) {
            vertices.push(v);
            omegas.push((iv.lo, iv.hi));
        }
    }
    Ok(NiceCentralSet { r, vertices, omegas })
}

/// Equilibrium of the diffusion game on a monotonically growing temporal
/// cycle, O(n * tau) except for the static-after-trimming fallback.
///
/// The cycle is normalized, its last layer dropped, and the positions are
/// chosen among the nice central vertices of the remaining growing forest:
/// with even max reach R the two centers of one maximal interval; with odd R
/// a pair at odd cycle distance when one exists, else the two smallest nice
/// centrals; a lone nice central pairs with its cycle successor.
pub fn nash_diffusion_growing_cycle(g: &TemporalGraph) -> Result<NashReport> {
    let nc = normalize_growing_cycle(g)?;
    if nc.degenerate {
        // static cycle: fall back to exhaustive search (an equilibrium
        // always exists here)
        let all = find_all_nash(GameKind::Diffusion, g);
        let &(p1, p2) = all.first().expect("static cycles always have an equilibrium");
        return Ok(NashReport {
            profile: StrategyProfile::pair(p1, p2),
            is_equilibrium: true,
            witness: None,
            method: Method::BruteForce,
        });
    }

    let n = g.n();
    let f = forest_of_cycle(&nc)?;
    let horizon = f.lifetime();
    let forest = GrowingForest::new(&f)?;
    let ncs = nice_central_of_forest(&forest, horizon)?;

    let (q1, q2) = if ncs.r % 2 == 0 {
        // any vertex reaching R vertices works; take the smallest
        let iv = (1..=n)
            .map(|v| forest.interval(v, horizon))
            .find(|iv| iv.len() == ncs.r)
            .expect("some vertex attains the maximum reach");
        let (a, b) = central_vertices(iv.lo, iv.hi)?;
        (a, b.expect("even-size interval has two centers"))
    } else {
        let z = ncs.vertices.len();
        let v1 = ncs.vertices[0];
        if z == 1 {
            (v1, if v1 < n { v1 + 1 } else { 1 })
        } else if n % 2 == 1 {
            // d1 + d2 = n odd, so every pair has an odd side
            (v1, ncs.vertices[1])
        } else {
            let odd = ncs.vertices[1..]
                .iter()
                .copied()
                .find(|&vi| cycle_distances(v1, vi, n).map(|(d1, _)| d1 % 2 == 1).unwrap_or(false));
            match odd {
                Some(vi) => (v1, vi),
                None => (v1, ncs.vertices[1]),
            }
        }
    };

    let p1 = nc.original_of(q1);
    let p2 = nc.original_of(q2);
    Ok(NashReport {
        profile: StrategyProfile::pair(p1, p2),
        is_equilibrium: true,
        witness: None,
        method: Method::GrowingCycle,
    })
}

fn require_consecutive_path(g: &TemporalGraph, err: Error) -> Result<()> {
    let labels = classify(g);
    if labels.underlying_kind != UnderlyingKind::Path {
        return Err(err);
    }
    let expected: Vec<(usize, usize)> = (1..g.n()).map(|i| (i, i + 1)).collect();
    if g.underlying() != expected {
        return Err(err);
    }
    Ok(())
}

/// The full equilibrium set of the diffusion game on a superset path with n
/// vertices: both orderings of the adjacent pairs around the middle.
pub fn superset_path_nash_set(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in [n / 2, n.div_ceil(2)] {
        if p >= 1 && p + 1 <= n {
            out.push((p, p + 1));
            out.push((p + 1, p));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Equilibrium of the diffusion game on a superset temporal path: the two
/// adjacent vertices around the middle.
pub fn nash_diffusion_superset_path(g: &TemporalGraph) -> Result<NashReport> {
    let labels = classify(g);
    let n = g.n();
    if n == 1 {
        // single vertex: the only profile, trivially optimal
        if !labels.is_superset {
            return Err(Error::NotSupersetPath);
        }
        return Ok(NashReport {
            profile: StrategyProfile::pair(1, 1),
            is_equilibrium: true,
            witness: None,
            method: Method::SupersetPath,
        });
    }
    if !labels.is_superset {
        return Err(Error::NotSupersetPath);
    }
    require_consecutive_path(g, Error::NotSupersetPath)?;
    let p = n / 2;
    Ok(NashReport {
        profile: StrategyProfile::pair(p, p + 1),
        is_equilibrium: true,
        witness: None,
        method: Method::SupersetPath,
    })
}

/// Maximal consecutive-vertex components (lo, hi) of a linear forest whose
/// components are vertex intervals.
fn forest_components(g: &TemporalGraph, err: Error) -> Result<Vec<(usize, usize)>> {
    let labels = classify(g);
    if !labels.underlying_kind.is_linear_forest() {
        return Err(err);
    }
    let mut has_edge = vec![false; g.n().max(1)]; // has_edge[i] <=> {i,i+1}
    for &(a, b) in &g.underlying() {
        if b != a + 1 {
            return Err(err);
        }
        has_edge[a] = true;
    }
    let mut comps = Vec::new();
    let mut lo = 1;
    for v in 1..g.n() {
        if !has_edge[v] {
            comps.push((lo, v));
            lo = v + 1;
        }
    }
    comps.push((lo, g.n()));
    Ok(comps)
}

/// Equilibrium of the diffusion game on a superset temporal linear forest.
///
/// Player 1 takes a central vertex of the largest component; player 2 takes
/// the neighboring central position when the largest component dominates
/// (half of it still beats the runner-up), else the second component's
/// smallest vertex.
pub fn nash_diffusion_superset_forest(g: &TemporalGraph) -> Result<NashReport> {
    let labels = classify(g);
    if !labels.is_superset {
        return Err(Error::NotSupersetForest);
    }
    let mut comps = forest_components(g, Error::NotSupersetForest)?;
    comps.sort_by_key(|&(lo, hi)| (std::cmp::Reverse(hi - lo + 1), lo));
    let (lo1, hi1) = comps[0];
    let n1 = hi1 - lo1 + 1;
    let (c1, c2) = central_vertices(lo1, hi1)?;
    let p1 = c1;
    let dominated = comps.len() == 1 || n1 / 2 >= (comps[1].1 - comps[1].0 + 1);
    let p2 = if dominated {
        if n1 == 1 {
            p1 // isolated vertex and nothing else: forced overlap
        } else {
            match c2 {
                Some(c2) => c2,
                None => p1 + 1,
            }
        }
    } else {
        comps[1].0
    };
    Ok(NashReport {
        profile: StrategyProfile::pair(p1, p2),
        is_equilibrium: true,
        witness: None,
        method: Method::SupersetForest,
    })
}

/// Best response against `opponent` in the Voronoi game on a growing path:
/// the vertex of the leftmost largest boundary interval closest to the
/// opponent.
pub fn voronoi_best_response_growing_path(g: &TemporalGraph, opponent: usize) -> Result<usize> {
    g.check_vertex(opponent)?;
    if g.n() == 1 {
        // no distinct response exists
        return Ok(opponent);
    }
    let dec = boundaries(g, opponent)?;
    let best = dec
        .intervals()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b.lo.cmp(&a.lo)))
        .expect("n >= 2 yields at least one interval");
    Ok(match best.side {
        Side::Left => best.hi,
        Side::Right => best.lo,
    })
}

/// Best-response iteration for the Voronoi game on a growing path, seeded at
/// vertex 1. Returns the visited positions and the equilibrium pair.
pub fn voronoi_iteration_growing_path(g: &TemporalGraph) -> Result<(Vec<usize>, (usize, usize))> {
    if g.n() == 1 {
        let labels = classify(g);
        if labels.is_growing {
            return Ok((vec![1], (1, 1)));
        }
        return Err(Error::NotGrowingPath);
    }
    let mut seq = vec![1usize];
    loop {
        let next = voronoi_best_response_growing_path(g, *seq.last().unwrap())?;
        seq.push(next);
        let m = seq.len();
        if m < 3 {
            continue;
        }
        let (a, b, c) = (seq[m - 3], seq[m - 2], seq[m - 1]);
        // the sequence strictly increases until it first steps back; the
        // position of that step relative to the previous two decides the pair
        if c > b {
            if seq.len() > g.n() + 2 {
                // the process provably settles within n responses
                return Err(Error::NotGrowingPath);
            }
            continue;
        }
        let pair = if c == a {
            (a, b)
        } else if c > a {
            (a, b)
        } else {
            (b, c)
        };
        return Ok((seq, pair));
    }
}

/// Equilibrium of the Voronoi game on a monotonically growing temporal path
/// via best-response iteration; at most n responses, O(n^2) total.
pub fn nash_voronoi_growing_path(g: &TemporalGraph) -> Result<NashReport> {
    let (_, (p1, p2)) = voronoi_iteration_growing_path(g)?;
    Ok(NashReport {
        profile: StrategyProfile::pair(p1, p2),
        is_equilibrium: true,
        witness: None,
        method: Method::VoronoiIteration,
    })
}

/// Difference payoff of the lifetime-limited diffusion variant, re-exported
/// here for equilibrium experiments on growing forests.
pub fn lifetime_delta(f: &TemporalGraph, u: usize, v: usize) -> Result<i64> {
    delta(f, u, v, DeltaVariant::Lifetime)
}

/// All-pairs distance rows, one per vertex; convenience for tests comparing
/// Voronoi outcomes against raw distances.
pub fn distance_rows(g: &TemporalGraph) -> Vec<Vec<Option<usize>>> {
    (1..=g.n())
        .map(|v| all_distances(g, v).expect("vertex in range").values().to_vec())
        .collect()
}
