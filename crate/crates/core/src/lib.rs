//! Wiener, Szeged and revised Szeged indices of simple graphs, constructors
//! for the extremal unicyclic families of the `Sz − W` and `Sz* − W` lower
//! bounds, and exhaustive verification of those bounds on small graphs.

pub mod canon;
pub mod cli;
pub mod distance;
pub mod error;
pub mod extremal;
pub mod formats;
pub mod graph;
pub mod invariants;
pub mod structure;
pub mod verifier;

pub use canon::{canonical_form, CanonicalForm};
pub use distance::{apsp, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::Graph;
pub use invariants::{EdgePartition, IndexReport, PairContribution};
pub use structure::{BlockDecomposition, CycleInfo};
