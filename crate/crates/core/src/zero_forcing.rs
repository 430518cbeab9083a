//! Zero forcing: the colour-change process, derived sets, zero forcing set
//! detection and the forcing-edge backbone.
//!
//! Starting from the leaders coloured black, a black vertex with exactly
//! one white neighbour turns that neighbour black. The final black set (the
//! derived set) does not depend on the order in which forces fire, but the
//! forcing edges do. [`ForceOrder`] selects that order.

use std::collections::{BTreeSet, HashMap};

use rand::Rng as _;

use crate::backbone::{Backbone, BackboneKind};
use crate::error::{Error, Result};
use crate::graph::{canonical, rng_from_seed, Edge, Graph, LeaderSet, Vertex};

/// Largest graph accepted by [`classify_edges_exhaustive`].
pub const EXHAUSTIVE_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ForceOrder {
    /// Fire the eligible force whose forcer has the smallest id.
    #[default]
    Ascending,
    /// Fire a uniformly random eligible force at every step.
    Shuffled(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Force {
    pub forcer: Vertex,
    pub forced: Vertex,
}

impl Force {
    pub fn edge(&self) -> Edge {
        canonical(self.forcer, self.forced)
    }
}

/// One maximal run of the colour-change rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingChronicle {
    pub initial_black: Vec<Vertex>,
    pub forces: Vec<Force>,
    black: Vec<bool>,
}

impl ForcingChronicle {
    /// ζ, the size of the derived set.
    pub fn zeta(&self) -> usize {
        self.initial_black.len() + self.forces.len()
    }

    pub fn is_derived(&self, v: Vertex) -> bool {
        self.black[v]
    }

    /// Derived set in ascending order.
    pub fn derived(&self) -> Vec<Vertex> {
        (0..self.black.len()).filter(|&v| self.black[v]).collect()
    }

    pub fn forcing_edges(&self) -> BTreeSet<Edge> {
        self.forces.iter().map(Force::edge).collect()
    }
}

pub fn derived_set(g: &Graph, leaders: &LeaderSet) -> Result<ForcingChronicle> {
    derived_set_with(g, leaders, ForceOrder::Ascending)
}

pub fn derived_set_with(g: &Graph, leaders: &LeaderSet, order: ForceOrder) -> Result<ForcingChronicle> {
    leaders.check_graph(g)?;
    let n = g.n();
    let mut black = vec![false; n];
    for &l in leaders.as_slice() {
        black[l] = true;
    }
    let mut white_nbrs: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| !black[w]).count())
        .collect();
    let mut rng = match order {
        ForceOrder::Ascending => None,
        ForceOrder::Shuffled(seed) => Some(rng_from_seed(seed)),
    };
    let mut forces = Vec::new();
    let mut eligible = Vec::new();
    loop {
        let forcer = match rng.as_mut() {
            None => (0..n).find(|&v| black[v] && white_nbrs[v] == 1),
            Some(rng) => {
                eligible.clear();
                eligible.extend((0..n).filter(|&v| black[v] && white_nbrs[v] == 1));
                if eligible.is_empty() {
                    None
                } else {
                    Some(eligible[rng.gen_range(0..eligible.len())])
                }
            }
        };
        let Some(forcer) = forcer else { break };
        let forced = g.neighbors(forcer).iter().copied().find(|&w| !black[w]).unwrap();
        black[forced] = true;
        for &w in g.neighbors(forced) {
            white_nbrs[w] -= 1;
        }
        forces.push(Force { forcer, forced });
    }
    Ok(ForcingChronicle {
        initial_black: leaders.as_slice().to_vec(),
        forces,
        black,
    })
}

pub fn zeta(g: &Graph, leaders: &LeaderSet) -> Result<usize> {
    Ok(derived_set(g, leaders)?.zeta())
}

pub fn is_zfs(g: &Graph, leaders: &LeaderSet) -> Result<bool> {
    Ok(zeta(g, leaders)? == g.n())
}

/// Keeps exactly the edges used by one maximal forcing run, so the result
/// has `ζ - m` edges.
pub fn zfs_backbone(g: &Graph, leaders: &LeaderSet) -> Result<Backbone> {
    zfs_backbone_with(g, leaders, ForceOrder::Ascending)
}

pub fn zfs_backbone_with(g: &Graph, leaders: &LeaderSet, order: ForceOrder) -> Result<Backbone> {
    let chronicle = derived_set_with(g, leaders, order)?;
    Ok(Backbone {
        kind: BackboneKind::Zfs,
        edges: chronicle.forcing_edges(),
        preserved_bound: chronicle.zeta(),
        leaders: leaders.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    /// Edges whose removal shrinks the derived set.
    pub necessary: BTreeSet<Edge>,
    /// Backbone edges that are not necessary.
    pub contingent: BTreeSet<Edge>,
    /// True when `contingent` lists every edge used by some maximal run,
    /// false when it is read off the default backbone only.
    pub certified: bool,
}

fn necessary_edges(g: &Graph, leaders: &LeaderSet, candidates: &BTreeSet<Edge>) -> Result<BTreeSet<Edge>> {
    let base = zeta(g, leaders)?;
    let mut necessary = BTreeSet::new();
    // an edge outside a backbone cannot be necessary, so only backbone edges
    // need the removal test
    for &e in candidates {
        if zeta(&g.without_edge(e), leaders)? < base {
            necessary.insert(e);
        }
    }
    Ok(necessary)
}

/// Necessary edges, with the remaining edges of the default backbone
/// labelled contingent.
pub fn classify_edges(g: &Graph, leaders: &LeaderSet) -> Result<EdgeClassification> {
    let backbone = zfs_backbone(g, leaders)?;
    let necessary = necessary_edges(g, leaders, &backbone.edges)?;
    let contingent = backbone.edges.difference(&necessary).copied().collect();
    Ok(EdgeClassification {
        necessary,
        contingent,
        certified: false,
    })
}

/// Like [`classify_edges`], but `contingent` is every non-necessary edge that
/// appears in at least one zero-forcing backbone, found by exploring all
/// maximal forcing runs.
pub fn classify_edges_exhaustive(g: &Graph, leaders: &LeaderSet) -> Result<EdgeClassification> {
    let union = backbone_edge_union(g, leaders)?;
    let necessary = necessary_edges(g, leaders, &union)?;
    let contingent = union.difference(&necessary).copied().collect();
    Ok(EdgeClassification {
        necessary,
        contingent,
        certified: true,
    })
}

/// Every edge that some maximal forcing run uses. Exponential in `n` in the
/// worst case, memoised on the black set.
pub fn backbone_edge_union(g: &Graph, leaders: &LeaderSet) -> Result<BTreeSet<Edge>> {
    leaders.check_graph(g)?;
    let n = g.n();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::InstanceTooLarge { n, max: EXHAUSTIVE_MAX_N });
    }
    let edges: Vec<Edge> = g.edges().collect();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let start = leaders.as_slice().iter().fold(0u32, |m, &l| m | 1 << l);
    let mut memo = HashMap::new();
    let mask = edge_union_from(start, &adj, &edges, &mut memo);
    Ok((0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect())
}

fn edge_union_from(black: u32, adj: &[u32], edges: &[Edge], memo: &mut HashMap<u32, u128>) -> u128 {
    if let Some(&m) = memo.get(&black) {
        return m;
    }
    let mut acc = 0u128;
    for v in 0..adj.len() {
        if black >> v & 1 == 0 {
            continue;
        }
        let white = adj[v] & !black;
        if white.count_ones() == 1 {
            let u = white.trailing_zeros() as usize;
            let idx = edges.binary_search(&canonical(u, v)).unwrap();
            acc |= 1 << idx;
            acc |= edge_union_from(black | 1 << u, adj, edges, memo);
        }
    }
    memo.insert(black, acc);
    acc
}
