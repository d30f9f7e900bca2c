//! Competitive diffusion and Voronoi games on temporal graphs: graph
//! classes and generators, strict foremost-walk distances, game simulation,
//! and Nash-equilibrium search (exhaustive and structural).

pub mod error;
pub mod equilibria;
pub mod games;
pub mod generators;
pub mod reachability;
pub mod temporal_graph;

pub use error::{Error, Result};
pub use equilibria::{
    best_responses, find_all_nash, is_nash, nash_diffusion_growing_cycle,
    nash_diffusion_superset_forest, nash_diffusion_superset_path, nash_voronoi_growing_path,
    nice_central_vertices, superset_path_nash_set, voronoi_best_response_growing_path,
    voronoi_iteration_growing_path, Deviation, GameKind, Method, NashReport, NiceCentralSet,
};
pub use games::{
    delta, delta_play, diffusion_play, voronoi_play, Color, Coloring, DeltaVariant, GameReport,
    GameVariant, StrategyProfile,
};
pub use generators::{generate, Family};
pub use reachability::{
    all_distances, boundaries, reachable_interval, temporal_distance, BoundaryDecomposition,
    BoundaryInterval, GrowingForest, ReachInterval, Side, TemporalDistanceRow,
};
pub use temporal_graph::{
    central_vertices, classify, cycle_distances, forest_of_cycle, is_central,
    normalize_growing_cycle, ClassLabels, Edge, NormalizedCycle, TemporalGraph, UnderlyingKind,
};
