//! Game semantics: diffusion propagation and Voronoi coloring, plus the
//! signed difference payoff used by the two-player diffusion variants.

use crate::error::{Error, Result};
use crate::reachability::all_distances;
use crate::temporal_graph::TemporalGraph;

/// Per-vertex outcome. Gray marks a contested vertex: it counts for nobody
/// and never propagates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Uncolored,
    Gray,
    /// 1-based player index.
    Player(usize),
}

/// Colors of vertices 1..n (index v-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    fn uncolored(n: usize) -> Coloring {
        Coloring { colors: vec![Color::Uncolored; n] }
    }

    pub fn get(&self, v: usize) -> Color {
        self.colors[v - 1]
    }

    /// Colors for vertices 1..n in order.
    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// Vertices colored by player `i`, ascending.
    pub fn player_set(&self, i: usize) -> Vec<usize> {
        (1..=self.colors.len()).filter(|&v| self.get(v) == Color::Player(i)).collect()
    }

    pub fn payoffs(&self, k: usize) -> Vec<usize> {
        let mut u = vec![0usize; k];
        for &c in &self.colors {
            if let Color::Player(i) = c {
                u[i - 1] += 1;
            }
        }
        u
    }
}

/// Ordered positions (p_1, ..., p_k); duplicates allowed and turn gray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyProfile {
    positions: Vec<usize>,
}

impl StrategyProfile {
    pub fn new(positions: Vec<usize>) -> Result<StrategyProfile> {
        if positions.is_empty() {
            return Err(Error::EmptyProfile);
        }
        Ok(StrategyProfile { positions })
    }

    pub fn pair(p1: usize, p2: usize) -> StrategyProfile {
        StrategyProfile { positions: vec![p1, p2] }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn k(&self) -> usize {
        self.positions.len()
    }

    fn validate(&self, g: &TemporalGraph) -> Result<()> {
        for &p in &self.positions {
            g.check_vertex(p)?;
        }
        Ok(())
    }

    fn initial_coloring(&self, n: usize) -> Coloring {
        let mut c = Coloring::uncolored(n);
        for (i, &p) in self.positions.iter().enumerate() {
            c.colors[p - 1] = match c.colors[p - 1] {
                Color::Uncolored => Color::Player(i + 1),
                _ => Color::Gray,
            };
        }
        c
    }
}

/// Which semantics produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameVariant {
    Diffusion,
    Voronoi,
    /// Two-player diffusion scored by the payoff difference.
    DDiff,
    /// Difference-scored diffusion that stops right after the single step on
    /// the last layer.
    LDDiff,
}

impl GameVariant {
    pub fn name(self) -> &'static str {
        match self {
            GameVariant::Diffusion => "diffusion",
            GameVariant::Voronoi => "voronoi",
            GameVariant::DDiff => "ddiff",
            GameVariant::LDDiff => "lddiff",
        }
    }
}

/// Outcome of one play: final coloring, payoff vector, optional step trace
/// (snapshot after steps 0, 1, ...), and the payoff difference for the
/// two-player difference variants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameReport {
    pub variant: GameVariant,
    pub coloring: Coloring,
    pub payoffs: Vec<usize>,
    pub delta: Option<i64>,
    pub trace: Option<Vec<Coloring>>,
}

/// One simultaneous propagation step on the given layer: an uncolored vertex
/// seeing exactly one player color among its neighbors takes it, seeing two
/// or more turns gray. Reads only the previous coloring.
fn step(g: &TemporalGraph, t: usize, cur: &Coloring) -> Coloring {
    let mut next = cur.clone();
    let n = g.n();
    // seen[v] = first player color observed, or gray marker on conflict
    let mut seen: Vec<Option<Color>> = vec![None; n + 1];
    for &(a, b) in g.layer(t) {
        for (x, y) in [(a, b), (b, a)] {
            if cur.get(y) != Color::Uncolored {
                continue;
            }
            if let Color::Player(i) = cur.get(x) {
                seen[y] = match seen[y] {
                    None => Some(Color::Player(i)),
                    Some(Color::Player(j)) if j == i => Some(Color::Player(i)),
                    _ => Some(Color::Gray),
                };
            }
        }
    }
    for v in 1..=n {
        if let Some(c) = seen[v] {
            next.colors[v - 1] = c;
        }
    }
    next
}

fn run_diffusion(
    g: &TemporalGraph,
    profile: &StrategyProfile,
    stop_at_lifetime: bool,
    want_trace: bool,
) -> (Coloring, Option<Vec<Coloring>>) {
    let tau = g.lifetime();
    let mut cur = profile.initial_coloring(g.n());
    let mut trace = if want_trace { Some(vec![cur.clone()]) } else { None };
    for t in 1..=tau {
        cur = step(g, t, &cur);
        if let Some(tr) = trace.as_mut() {
            tr.push(cur.clone());
        }
    }
    if !stop_at_lifetime {
        // keep stepping on the last layer until nothing moves
        loop {
            let next = step(g, tau, &cur);
            if next == cur {
                break;
            }
            if let Some(tr) = trace.as_mut() {
                tr.push(next.clone());
            }
            cur = next;
        }
    }
    (cur, trace)
}

/// Plays the diffusion game to its fixpoint.
pub fn diffusion_play(g: &TemporalGraph, profile: &StrategyProfile, trace: bool) -> Result<GameReport> {
    profile.validate(g)?;
    let (coloring, trace) = run_diffusion(g, profile, false, trace);
    let payoffs = coloring.payoffs(profile.k());
    Ok(GameReport { variant: GameVariant::Diffusion, coloring, payoffs, delta: None, trace })
}

/// Colors every vertex by the player with strictly smallest temporal
/// distance; finite ties turn gray, vertices nobody reaches stay uncolored.
pub fn voronoi_play(g: &TemporalGraph, profile: &StrategyProfile) -> Result<GameReport> {
    profile.validate(g)?;
    let rows: Vec<_> = profile
        .positions()
        .iter()
        .map(|&p| all_distances(g, p))
        .collect::<Result<_>>()?;
    let mut coloring = Coloring::uncolored(g.n());
    for v in 1..=g.n() {
        let mut best: Option<(usize, usize)> = None; // (distance, player)
        let mut tied = false;
        for (i, row) in rows.iter().enumerate() {
            if let Some(d) = row.get(v) {
                match best {
                    None => best = Some((d, i + 1)),
                    Some((bd, _)) if d < bd => {
                        best = Some((d, i + 1));
                        tied = false;
                    }
                    Some((bd, _)) if d == bd => tied = true,
                    _ => {}
                }
            }
        }
        coloring.colors[v - 1] = match best {
            None => Color::Uncolored,
            Some(_) if tied => Color::Gray,
            Some((_, i)) => Color::Player(i),
        };
    }
    let payoffs = coloring.payoffs(profile.k());
    Ok(GameReport { variant: GameVariant::Voronoi, coloring, payoffs, delta: None, trace: None })
}

/// Scope of the two-player payoff difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaVariant {
    /// Completed diffusion game.
    Full,
    /// Difference after the given step of the diffusion process (step 0 =
    /// initial placement).
    UntilStep(usize),
    /// Exactly one step per layer, including one on the last, then stop.
    Lifetime,
}

fn diff_of(c: &Coloring) -> i64 {
    let u = c.payoffs(2);
    u[0] as i64 - u[1] as i64
}

/// `u_1 - u_2` of the two-player diffusion game under the chosen scope.
pub fn delta(g: &TemporalGraph, p1: usize, p2: usize, variant: DeltaVariant) -> Result<i64> {
    let profile = StrategyProfile::pair(p1, p2);
    profile.validate(g)?;
    match variant {
        DeltaVariant::Full => {
            let (coloring, _) = run_diffusion(g, &profile, false, false);
            Ok(diff_of(&coloring))
        }
        DeltaVariant::Lifetime => {
            let (coloring, _) = run_diffusion(g, &profile, true, false);
            Ok(diff_of(&coloring))
        }
        DeltaVariant::UntilStep(t) => {
            let (coloring, trace) = run_diffusion(g, &profile, false, true);
            let tr = trace.unwrap();
            Ok(diff_of(tr.get(t).unwrap_or(&coloring)))
        }
    }
}

/// Difference-variant wrapper producing a full report (used by the CLI).
pub fn delta_play(g: &TemporalGraph, p1: usize, p2: usize, lifetime: bool) -> Result<GameReport> {
    let profile = StrategyProfile::pair(p1, p2);
    profile.validate(g)?;
    let (coloring, _) = run_diffusion(g, &profile, lifetime, false);
    let payoffs = coloring.payoffs(2);
    let delta = Some(payoffs[0] as i64 - payoffs[1] as i64);
    let variant = if lifetime { GameVariant::LDDiff } else { GameVariant::DDiff };
    Ok(GameReport { variant, coloring, payoffs, delta, trace: None })
}
