//! Simple undirected graphs over dense vertex ids, leader sets, hop
//! distances and the seeded random generators used by the experiments.
//!
//! All randomness goes through [`Rng`], a ChaCha8 stream seeded from a
//! `u64` with `SeedableRng::seed_from_u64`. Changing the generator changes
//! every fixture seed, so it is part of the reproducibility contract.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// The seedable generator behind every random operation in the crate.
pub type Rng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vertex id, `0..n`.
pub type Vertex = usize;

/// Unordered edge stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// Hop distance. [`UNREACHABLE`] compares greater than every finite value.
pub type Distance = u32;

pub const UNREACHABLE: Distance = Distance::MAX;

#[inline]
pub fn canonical(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, self-loops and
    /// repeated pairs (in either orientation).
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = canonical(u, v);
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_set(n, set))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_set(n, BTreeSet::new())
    }

    pub fn path(n: usize) -> Self {
        Self::from_set(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        let mut set: BTreeSet<Edge> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            set.insert((0, n - 1));
        }
        Self::from_set(n, set)
    }

    pub fn complete(n: usize) -> Self {
        let mut set = BTreeSet::new();
        for u in 0..n {
            for v in u + 1..n {
                set.insert((u, v));
            }
        }
        Self::from_set(n, set)
    }

    /// Caller guarantees every pair is canonical, in range and loop-free.
    fn from_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&canonical(u, v))
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn without_edge(&self, e: Edge) -> Self {
        let mut set = self.edges.clone();
        set.remove(&canonical(e.0, e.1));
        Self::from_set(self.n, set)
    }

    /// The spanning subgraph on `edges`, which must all belong to `self`.
    pub fn spanning_subgraph<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            let e = canonical(u, v);
            if !self.edges.contains(&e) {
                return Err(Error::NotASubgraph(e.0, e.1));
            }
            set.insert(e);
        }
        Ok(Self::from_set(self.n, set))
    }

    pub fn is_supergraph_of(&self, sub: &Graph) -> Result<bool> {
        if self.n != sub.n {
            return Err(Error::SizeMismatch { left: self.n, right: sub.n });
        }
        Ok(sub.edges.is_subset(&self.edges))
    }

    pub fn bfs_distances(&self, source: Vertex) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        Ok(DistanceRow(dist))
    }
}

/// Hop distances from one source; `UNREACHABLE` marks other components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow(pub Vec<Distance>);

impl DistanceRow {
    pub fn get(&self, v: Vertex) -> Distance {
        self.0[v]
    }

    pub fn is_reachable(&self, v: Vertex) -> bool {
        self.0[v] != UNREACHABLE
    }

    pub fn as_slice(&self) -> &[Distance] {
        &self.0
    }
}

/// Ordered, duplicate-free list of leader vertices. Position `j` in the list
/// is coordinate `j` of every distance-to-leader vector and column `j` of
/// the input matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaderSet {
    ids: Vec<Vertex>,
    position: Vec<Option<usize>>,
}

impl LeaderSet {
    pub fn new(n: usize, ids: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut position = vec![None; n];
        let mut list = Vec::new();
        for v in ids {
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if position[v].is_some() {
                return Err(Error::DuplicateLeader(v));
            }
            position[v] = Some(list.len());
            list.push(v);
        }
        if list.is_empty() {
            return Err(Error::EmptyLeaderSet);
        }
        Ok(Self { ids: list, position })
    }

    pub fn for_graph(g: &Graph, ids: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        Self::new(g.n(), ids)
    }

    /// `m` distinct vertices drawn uniformly from `0..n`, in draw order.
    pub fn random(n: usize, m: usize, rng: &mut Rng) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::InvalidArguments(format!(
                "cannot pick {m} leaders out of {n} vertices"
            )));
        }
        Self::new(n, rand::seq::index::sample(rng, n, m))
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn n(&self) -> usize {
        self.position.len()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.ids
    }

    pub fn get(&self, coordinate: usize) -> Vertex {
        self.ids[coordinate]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.position.get(v).is_some_and(Option::is_some)
    }

    /// Coordinate of `v` if it is a leader.
    pub fn coordinate_of(&self, v: Vertex) -> Option<usize> {
        self.position.get(v).copied().flatten()
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::SizeMismatch { left: g.n(), right: self.n() });
        }
        Ok(())
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

/// G(n, p): pairs `(u, v)` with `u < v` are visited in lexicographic order
/// and each consumes exactly one uniform `f64` draw.
pub fn er_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = rng_from_seed(seed);
    let mut set = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                set.insert((u, v));
            }
        }
    }
    Ok(Graph::from_set(n, set))
}

/// A random `Ĝ` with `lower ⊆ Ĝ ⊆ upper`: every edge of `upper` that is
/// missing from `lower` is kept independently with probability `q`.
pub fn random_supergraph_between(lower: &Graph, upper: &Graph, q: f64, seed: u64) -> Result<Graph> {
    check_probability(q)?;
    if !upper.is_supergraph_of(lower)? {
        let e = lower.edges().find(|e| !upper.edges.contains(e)).unwrap();
        return Err(Error::NotASubgraph(e.0, e.1));
    }
    let mut rng = rng_from_seed(seed);
    let mut set = lower.edges.clone();
    for e in upper.edges() {
        if !lower.edges.contains(&e) && rng.gen::<f64>() < q {
            set.insert(e);
        }
    }
    Ok(Graph::from_set(upper.n, set))
}
