//! Controllability backbones of leader-follower networks.
//!
//! Given an undirected graph and an ordered set of leader vertices, this
//! crate computes two lower bounds on the dimension of the strong
//! structurally controllable subspace and, for each, a small edge set (a
//! *backbone*) whose presence in any subgraph preserves that bound:
//!
//! - [`zero_forcing`]: the derived-set size ζ and the forcing-edge backbone
//!   with exactly `ζ - m` edges.
//! - [`distance`]: the longest PMI sequence length δ of distance-to-leader
//!   vectors and the shortest-path backbone that preserves it.
//!
//! [`oracle`] checks both bounds against exact controllability ranks of
//! sampled weight matrices over a prime field, [`io`] holds the file
//! formats and [`experiment`] the Erdős–Rényi harness and verification
//! routine used by the `ctrl-backbone` binary.
//!
//! Vertex ids are 0-based everywhere.

pub mod backbone;
pub mod distance;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod zero_forcing;

pub use backbone::{Backbone, BackboneKind};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, LeaderSet, Vertex};
