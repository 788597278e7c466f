//! Minor testing for small graphs, vertex splitting, the named obstruction
//! graphs and machine checks of the edge-minimality facts used by the
//! corollaries.

mod claims;
mod minor;
mod named;
mod splits;

pub use claims::{contains_triangle, verify_claim, ClaimId, ClaimResult, ClaimWitness};
pub use minor::{has_minor, verify_model, MinorModel, MINOR_MAX_HOST_VERTICES, MINOR_MAX_PATTERN_VERTICES};
pub use named::{obstruction, NamedGraph, OBSTRUCTION_NAMES, TREEWIDTH_3_OBSTRUCTIONS};
pub use splits::{contract, enumerate_splits, SPLIT_MAX_ROUNDS, SPLIT_MAX_VERTICES};
