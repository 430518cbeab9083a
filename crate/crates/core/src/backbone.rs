use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LeaderSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackboneKind {
    /// Preserves the derived-set size ζ.
    Zfs,
    /// Preserves the longest PMI length δ.
    Distance,
}

impl fmt::Display for BackboneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Zfs => "zfs",
            Self::Distance => "distance",
        })
    }
}

impl FromStr for BackboneKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zfs" => Ok(Self::Zfs),
            "distance" => Ok(Self::Distance),
            other => Err(Error::InvalidArguments(format!("unknown backbone kind `{other}`"))),
        }
    }
}

/// An edge subset of a source graph together with the bound it preserves:
/// every `Ĝ` with `edges ⊆ Ĝ ⊆ source` keeps `bound(Ĝ) ≥ preserved_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Backbone {
    pub kind: BackboneKind,
    pub edges: BTreeSet<Edge>,
    pub preserved_bound: usize,
    pub leaders: LeaderSet,
}

impl Backbone {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&crate::graph::canonical(e.0, e.1))
    }

    /// The backbone as a spanning subgraph of `source`.
    pub fn as_graph(&self, source: &Graph) -> Result<Graph> {
        source.spanning_subgraph(&self.edges)
    }
}
