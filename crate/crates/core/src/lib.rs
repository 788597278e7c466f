//! Proper colorings in which every connected bicolored subgraph has at most
//! `m` edges.
//!
//! The crate provides
//! - a resampling colorer driven by three families of bad events
//!   ([`events`], [`lll::moser_tardos`]),
//! - an exact local-lemma certificate checker and palette sizing ([`lll`]),
//! - independent verifiers for properness, the component bound, star,
//!   acyclic, planar and treewidth properties, plus an exhaustive
//!   minimum-palette oracle ([`verifier`]),
//! - small-graph minor testing, vertex splitting and machine checks of the
//!   edge-minimality facts behind the corollaries ([`minor_lab`]).

pub mod coloring;
pub mod error;
pub mod events;
pub mod experiment;
pub mod graph;
pub mod lll;
pub mod minor_lab;
pub mod par;
pub mod precise;
pub mod verifier;

mod util;

pub use coloring::Coloring;
pub use error::{Error, ParseError, Result};
pub use events::{BadEventWitness, Mode};
pub use graph::{Graph, VertexSet};
