//! Constructions that produce odd-covers meeting the known upper bounds.

mod counterexample;
mod cycle_cover;
mod iso;
mod pipeline;
mod system;
mod topological;

pub use counterexample::{gen_counterexample, walecki, Counterexample, CountingCertificate};
pub use cycle_cover::cycle_odd_cover;
pub use iso::{
    cycle_iso_cover, greedy_linear_forests, iso_cover_from_forests, iso_cover_general, two_path_cover_la2,
    GeneralIsoCover, IsoCover, IsoMethod, LinearForestSystem,
};
pub use pipeline::{cover_eulerian_plus_matching, cover_first_bound, path_odd_cover, peel_odd_path, SolveBudget};
pub use system::{reduce_system, EndpointType, PathKSystem, ReducedSystem, Split};
pub use topological::{cycle_top_cover, is_exceptional_family, topological_cover, Subdivision, TopologicalCover};
