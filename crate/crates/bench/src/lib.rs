//! Shared fixtures for the benchmark targets.

use bshopf_core::building::{BuildingSet, SetFamily};
use bshopf_core::graphs::{beta_family, SimpleGraph};

/// The inflated generator family of the complete graph, a dense closure
/// workload.
pub fn inflated_complete(vertices: usize, n: usize) -> SetFamily {
    beta_family(&SimpleGraph::complete(vertices), n).expect("within guards")
}

/// Singletons plus the full ground set: the smallest nondiscrete
/// connected instance per rank.
pub fn hull(n: usize) -> BuildingSet {
    BuildingSet::discrete(n).connected_hull()
}

/// A mid-density fixture: overlapping triples arranged in a ring.
pub fn triple_ring(sets: usize) -> SetFamily {
    let ground = 2 * sets;
    let masks: Vec<u64> = (0..sets)
        .map(|i| (1u64 << (2 * i)) | (1 << (2 * i + 1)) | (1 << ((2 * i + 2) % ground)))
        .collect();
    SetFamily::new(ground, masks).expect("within range")
}
