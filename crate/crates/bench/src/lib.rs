//! Shared helpers for the benchmark targets.

use tgg_core::{generate, Family, TemporalGraph};

/// A large growing cycle with evenly spread edge first-appearance times.
pub fn large_growing_cycle(n: usize, tau: usize) -> TemporalGraph {
    generate(&Family::RandomGrowingCycle { n, tau, seed: 7 }).expect("valid parameters")
}
