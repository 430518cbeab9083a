//! Distance-to-leader vectors, pseudo-monotonically increasing (PMI)
//! sequences and the distance-based backbone.
//!
//! Coordinates are 0-based positions in the [`LeaderSet`]. A sequence
//! `D_1 .. D_k` of DL vectors is PMI when each `D_i` has a coordinate
//! `pi(i)` with `D_i[pi(i)] < D_j[pi(i)]` for every later `j`. The longest
//! such length, δ, lower-bounds the dimension of the strong structurally
//! controllable subspace.
//!
//! `UNREACHABLE` is never a valid anchor value `D_i[pi(i)]`, but as a later
//! value it is larger than anything finite.
//!
//! Both constructors here work on candidate sets: once `D_p` is placed with
//! anchor coordinate `c`, only vectors strictly larger than `D_p` at `c`
//! may follow.

use std::collections::{BTreeSet, HashMap};

use crate::backbone::{Backbone, BackboneKind};
use crate::error::{Error, Result};
use crate::graph::{canonical, Distance, Edge, Graph, LeaderSet, Vertex, UNREACHABLE};

/// Largest graph accepted by [`longest_pmi_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 12;

/// Row `v` holds `[d(l_1, v), .., d(l_m, v)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DlMatrix {
    m: usize,
    rows: Vec<Vec<Distance>>,
}

impl DlMatrix {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn row(&self, v: Vertex) -> &[Distance] {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[Vec<Distance>] {
        &self.rows
    }
}

pub fn dl_matrix(g: &Graph, leaders: &LeaderSet) -> Result<DlMatrix> {
    leaders.check_graph(g)?;
    let columns = leaders
        .as_slice()
        .iter()
        .map(|&l| g.bfs_distances(l))
        .collect::<Result<Vec<_>>>()?;
    let rows = (0..g.n())
        .map(|v| columns.iter().map(|c| c.get(v)).collect())
        .collect();
    Ok(DlMatrix { m: leaders.len(), rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmiEntry {
    /// The vertex whose DL vector this entry is.
    pub vertex: Vertex,
    pub vector: Vec<Distance>,
    /// 0-based coordinate at which the PMI property holds.
    pub pi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    CoordinateOutOfRange,
    UnreachableAnchor,
    /// Entry `later` is not strictly larger at the anchor coordinate.
    NotIncreasing { later: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmiViolation {
    pub index: usize,
    pub kind: ViolationKind,
}

/// First entry of `vectors` whose anchor `pi[i]` fails the PMI property.
pub fn first_violation(vectors: &[Vec<Distance>], pi: &[usize]) -> Option<PmiViolation> {
    assert_eq!(vectors.len(), pi.len());
    for (i, (v, &c)) in vectors.iter().zip(pi).enumerate() {
        let fail = |kind| Some(PmiViolation { index: i, kind });
        if c >= v.len() {
            return fail(ViolationKind::CoordinateOutOfRange);
        }
        if v[c] == UNREACHABLE {
            return fail(ViolationKind::UnreachableAnchor);
        }
        if let Some(j) = (i + 1..vectors.len()).find(|&j| vectors[j].get(c).is_none_or(|&x| x <= v[c])) {
            return fail(ViolationKind::NotIncreasing { later: j });
        }
    }
    None
}

/// Finds anchor coordinates making `vectors` a PMI sequence, if any exist.
/// Each entry gets the valid coordinate with the smallest value (lowest
/// index on ties), which keeps the anchored shortest paths short.
pub fn find_pi(vectors: &[Vec<Distance>]) -> Option<Vec<usize>> {
    let Some(m) = vectors.first().map(Vec::len) else {
        return Some(Vec::new());
    };
    // suffix minimum of each coordinate over the entries after i
    let mut later_min = vec![UNREACHABLE; m];
    let mut pi = vec![0; vectors.len()];
    for i in (0..vectors.len()).rev() {
        let v = &vectors[i];
        if v.len() != m {
            return None;
        }
        let best = (0..m)
            .filter(|&c| v[c] != UNREACHABLE && v[c] < later_min[c])
            .min_by_key(|&c| (v[c], c))?;
        pi[i] = best;
        for c in 0..m {
            later_min[c] = later_min[c].min(v[c]);
        }
    }
    Some(pi)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PmiSequence {
    pub entries: Vec<PmiEntry>,
}

impl PmiSequence {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.entries.iter().map(|e| e.vertex).collect()
    }

    pub fn vectors(&self) -> Vec<Vec<Distance>> {
        self.entries.iter().map(|e| e.vector.clone()).collect()
    }

    pub fn pi(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.pi).collect()
    }

    pub fn check(&self) -> std::result::Result<(), PmiViolation> {
        match first_violation(&self.vectors(), &self.pi()) {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    pub fn is_pmi(&self) -> bool {
        self.check().is_ok()
    }

    /// Full validation against a graph's DL matrix: PMI property, vectors
    /// equal to the rows of their vertices, and distinct vertices.
    pub fn check_against(&self, dl: &DlMatrix) -> Result<()> {
        let invalid = |index, reason: String| Err(Error::InvalidPmi { index, reason });
        let mut seen = BTreeSet::new();
        for (i, e) in self.entries.iter().enumerate() {
            if e.vertex >= dl.n() {
                return invalid(i, format!("vertex {} out of range", e.vertex));
            }
            if e.vector != dl.row(e.vertex) {
                return invalid(i, format!("vector is not the DL vector of vertex {}", e.vertex));
            }
            if !seen.insert(e.vertex) {
                return invalid(i, format!("vertex {} repeated", e.vertex));
            }
        }
        if let Err(v) = self.check() {
            return invalid(v.index, format!("{:?}", v.kind));
        }
        Ok(())
    }

    fn from_vertices(dl: &DlMatrix, vertices: &[Vertex], pi: Vec<usize>) -> Self {
        let entries = vertices
            .iter()
            .zip(pi)
            .map(|(&vertex, pi)| PmiEntry {
                vertex,
                vector: dl.row(vertex).to_vec(),
                pi,
            })
            .collect();
        Self { entries }
    }
}

/// Longest PMI sequence by the candidate-set recursion.
///
/// Placing a vector anchored at coordinate `c` with the minimum value at
/// `c` over the candidates removes exactly the candidates attaining that
/// minimum, and a non-minimal choice would only remove more. So a step is a
/// choice of coordinate, and the set of candidates left afterwards is all
/// that matters. The search walks these candidate sets, memoised, with two
/// dominance rules that keep the branching small:
///
/// - if some coordinate's minimum is attained by a single candidate (every
///   leader at its own coordinate, to begin with) that step is taken
///   without branching, lowest coordinate first;
/// - a coordinate whose removal set contains another coordinate's removal
///   set is never tried.
///
/// Remaining ties go to fewer removed candidates, then the lower coordinate.
/// Each entry is bound to the lowest-id vertex attaining the minimum, and
/// anchors are finally reassigned with [`find_pi`].
///
/// The number of distinct candidate sets is exponential in the worst case;
/// on random graphs with tens of vertices the pruning keeps it small.
pub fn longest_pmi_greedy(g: &Graph, leaders: &LeaderSet) -> Result<PmiSequence> {
    let dl = dl_matrix(g, leaders)?;
    let mut search = CandidateSearch { dl: &dl, memo: HashMap::new() };
    let mut state = Bits::full(dl.n());
    search.longest(&state);
    let mut order = Vec::new();
    while let Some(&(_, Some(c))) = search.memo.get(&state) {
        let (removed, v) = search.removal(&state, c).expect("memoised step is feasible");
        order.push(v);
        state.remove_all(&removed);
    }
    let pi = find_pi(&order.iter().map(|&v| dl.row(v).to_vec()).collect::<Vec<_>>())
        .expect("candidate-set order is a PMI sequence");
    Ok(PmiSequence::from_vertices(&dl, &order, pi))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn remove_all(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

struct CandidateSearch<'a> {
    dl: &'a DlMatrix,
    /// candidate set -> (longest length, coordinate of the first step)
    memo: HashMap<Bits, (usize, Option<usize>)>,
}

impl CandidateSearch<'_> {
    /// Candidates attaining the finite minimum at `c`, and the lowest such id.
    fn removal(&self, state: &Bits, c: usize) -> Option<(Bits, Vertex)> {
        let n = self.dl.n();
        let min = (0..n)
            .filter(|&v| state.contains(v))
            .map(|v| self.dl.row(v)[c])
            .min()
            .filter(|&x| x != UNREACHABLE)?;
        let mut removed = Bits::empty(n);
        let mut first = None;
        for v in (0..n).filter(|&v| state.contains(v) && self.dl.row(v)[c] == min) {
            removed.insert(v);
            first.get_or_insert(v);
        }
        Some((removed, first.unwrap()))
    }

    fn longest(&mut self, state: &Bits) -> usize {
        if let Some(&(len, _)) = self.memo.get(state) {
            return len;
        }
        let mut options: Vec<(usize, usize, Bits)> = (0..self.dl.m())
            .filter_map(|c| self.removal(state, c).map(|(r, _)| (r.len(), c, r)))
            .collect();
        options.sort_by_key(|&(size, c, _)| (size, c));
        let branches: Vec<(usize, Bits)> = match options.first() {
            Some((1, c, r)) => vec![(*c, r.clone())],
            _ => {
                let mut kept: Vec<(usize, Bits)> = Vec::new();
                for (_, c, r) in options {
                    if !kept.iter().any(|(_, k)| k.is_subset(&r)) {
                        kept.push((c, r));
                    }
                }
                kept
            }
        };
        let mut best = (0, None);
        for (c, removed) in branches {
            let mut next = state.clone();
            next.remove_all(&removed);
            let len = 1 + self.longest(&next);
            if len > best.0 {
                best = (len, Some(c));
            }
        }
        self.memo.insert(state.clone(), best);
        best.0
    }
}

/// δ, the length of [`longest_pmi_greedy`].
pub fn delta(g: &Graph, leaders: &LeaderSet) -> Result<usize> {
    Ok(longest_pmi_greedy(g, leaders)?.len())
}

/// Exhaustive longest PMI search for small graphs. Tries every (vertex,
/// coordinate) placement at every step, memoised on the set of vertices
/// still allowed to follow. Independent of the greedy's dominance argument.
pub fn longest_pmi_bruteforce(g: &Graph, leaders: &LeaderSet) -> Result<PmiSequence> {
    let dl = dl_matrix(g, leaders)?;
    let n = dl.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::InstanceTooLarge { n, max: BRUTEFORCE_MAX_N });
    }
    let mut memo = HashMap::new();
    let full = (1u32 << n) - 1;
    longest_from(full, &dl, &mut memo);
    let mut order = Vec::new();
    let mut pi = Vec::new();
    let mut state = full;
    while let Some(&(_, Some((v, c)))) = memo.get(&state) {
        order.push(v);
        pi.push(c);
        state = followers(state, &dl, v, c);
    }
    Ok(PmiSequence::from_vertices(&dl, &order, pi))
}

fn followers(state: u32, dl: &DlMatrix, v: Vertex, c: usize) -> u32 {
    let x = dl.row(v)[c];
    (0..dl.n())
        .filter(|&u| u != v && state >> u & 1 == 1 && dl.row(u)[c] > x)
        .fold(0, |acc, u| acc | 1 << u)
}

/// Best length from a follower set, with the first (vertex, coordinate).
type BruteMemo = HashMap<u32, (usize, Option<(Vertex, usize)>)>;

fn longest_from(state: u32, dl: &DlMatrix, memo: &mut BruteMemo) -> usize {
    if let Some(&(len, _)) = memo.get(&state) {
        return len;
    }
    let mut best = (0, None);
    for v in (0..dl.n()).filter(|&v| state >> v & 1 == 1) {
        for c in 0..dl.m() {
            if dl.row(v)[c] == UNREACHABLE {
                continue;
            }
            let len = 1 + longest_from(followers(state, dl, v, c), dl, memo);
            if len > best.0 {
                best = (len, Some((v, c)));
            }
        }
    }
    memo.insert(state, best);
    best.0
}

/// How a shortest path is picked when there are several.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathPolicy {
    /// Among all shortest paths, take one adding the fewest edges not yet in
    /// the backbone; remaining ties go to the lowest-id predecessor.
    #[default]
    Reuse,
    /// Follow BFS discovery parents from the leader.
    FirstFound,
}

impl std::str::FromStr for PathPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reuse" => Ok(Self::Reuse),
            "first_found" | "first-found" => Ok(Self::FirstFound),
            other => Err(Error::InvalidArguments(format!("unknown path policy `{other}`"))),
        }
    }
}

/// Union over the sequence of one shortest path from each entry's vertex to
/// the leader of its anchor coordinate.
pub fn distance_backbone(
    g: &Graph,
    leaders: &LeaderSet,
    seq: &PmiSequence,
    policy: PathPolicy,
) -> Result<Backbone> {
    let dl = dl_matrix(g, leaders)?;
    seq.check_against(&dl)?;
    let mut bfs_cache: HashMap<usize, Vec<Distance>> = HashMap::new();
    let mut edges = BTreeSet::new();
    for entry in &seq.entries {
        let leader = leaders.get(entry.pi);
        if leader == entry.vertex {
            continue;
        }
        let dist = match bfs_cache.get(&entry.pi) {
            Some(d) => d,
            None => {
                let d = g.bfs_distances(leader)?.0;
                bfs_cache.entry(entry.pi).or_insert(d)
            }
        };
        let path = match policy {
            PathPolicy::Reuse => reuse_path(g, dist, entry.vertex, &edges),
            PathPolicy::FirstFound => first_found_path(g, dist, leader, entry.vertex),
        };
        debug_assert_eq!(path.len() as Distance, entry.vector[entry.pi]);
        edges.extend(path);
    }
    Ok(Backbone {
        kind: BackboneKind::Distance,
        edges,
        preserved_bound: seq.len(),
        leaders: leaders.clone(),
    })
}

/// Shortest path from `target` back to the BFS source minimising new edges.
fn reuse_path(g: &Graph, dist: &[Distance], target: Vertex, kept: &BTreeSet<Edge>) -> Vec<Edge> {
    let d = dist[target];
    let mut layers: Vec<Vec<Vertex>> = vec![Vec::new(); d as usize + 1];
    for v in 0..g.n() {
        if dist[v] <= d {
            layers[dist[v] as usize].push(v);
        }
    }
    let mut cost = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    for &s in &layers[0] {
        cost[s] = 0;
    }
    for layer in &layers[1..] {
        for &v in layer {
            for &w in g.neighbors(v) {
                if dist[w] + 1 != dist[v] {
                    continue;
                }
                let c = cost[w] + usize::from(!kept.contains(&canonical(v, w)));
                // neighbours are sorted, so strict < keeps the lowest id on ties
                if c < cost[v] {
                    cost[v] = c;
                    parent[v] = w;
                }
            }
        }
    }
    walk(target, &parent, dist)
}

fn first_found_path(g: &Graph, dist: &[Distance], source: Vertex, target: Vertex) -> Vec<Edge> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::from([source]);
    seen[source] = true;
    while let Some(u) = queue.pop_front() {
        if u == target {
            break;
        }
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    walk(target, &parent, dist)
}

fn walk(target: Vertex, parent: &[Vertex], dist: &[Distance]) -> Vec<Edge> {
    let mut path = Vec::with_capacity(dist[target] as usize);
    let mut v = target;
    while dist[v] > 0 {
        let p = parent[v];
        path.push(canonical(v, p));
        v = p;
    }
    path
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeBounds {
    pub lower: usize,
    pub upper: usize,
}

impl EdgeBounds {
    pub fn contains(&self, edges: usize) -> bool {
        (self.lower..=self.upper).contains(&edges)
    }
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Edge-count range of a distance backbone built from a longest PMI
/// sequence: `δ - m ≤ |E| ≤ C(m, 2) + C(δ - m + 1, 2)`.
pub fn backbone_edge_bounds(delta: usize, m: usize) -> Result<EdgeBounds> {
    if m == 0 || delta < m {
        return Err(Error::InvalidArguments(format!(
            "edge bounds need m >= 1 and delta >= m (got delta={delta}, m={m})"
        )));
    }
    let followers = delta - m;
    Ok(EdgeBounds {
        lower: followers,
        upper: choose2(m) + choose2(followers + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::er_random_graph;

    fn leaders(g: &Graph, ids: &[usize]) -> LeaderSet {
        LeaderSet::for_graph(g, ids.iter().copied()).unwrap()
    }

    const U: Distance = UNREACHABLE;

    #[test]
    fn dl_rows() {
        let p3 = Graph::path(3);
        let dl = dl_matrix(&p3, &leaders(&p3, &[0])).unwrap();
        assert_eq!(dl.rows(), &[vec![0], vec![1], vec![2]]);
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let dl = dl_matrix(&g, &leaders(&g, &[0, 1])).unwrap();
        assert_eq!(dl.row(2), &[U, U]);
        assert_eq!(dl.row(1), &[1, 0]);
    }

    #[test]
    fn pmi_checks() {
        assert_eq!(first_violation(&[vec![3, 1]], &[0]), None);
        assert_eq!(
            first_violation(&[vec![0], vec![0]], &[0, 0]),
            Some(PmiViolation { index: 0, kind: ViolationKind::NotIncreasing { later: 1 } })
        );
        assert_eq!(
            first_violation(&[vec![U, 1]], &[0]),
            Some(PmiViolation { index: 0, kind: ViolationKind::UnreachableAnchor })
        );
        assert_eq!(
            first_violation(&[vec![1]], &[1]).unwrap().kind,
            ViolationKind::CoordinateOutOfRange
        );
        // an unreachable later value counts as larger
        assert_eq!(first_violation(&[vec![2, 0], vec![U, 1]], &[0, 1]), None);
    }

    #[test]
    fn find_pi_prefers_small_values() {
        let vectors = vec![vec![0, 2], vec![2, 0], vec![1, 1], vec![1, 3], vec![2, 2], vec![2, 3]];
        let pi = find_pi(&vectors).unwrap();
        assert_eq!(first_violation(&vectors, &pi), None);
        assert_eq!(pi, vec![0, 1, 1, 0, 1, 0]);
        assert_eq!(find_pi(&[vec![1, 1], vec![1, 1]]), None);
        assert_eq!(find_pi(&[vec![U]]), None);
    }

    #[test]
    fn eight_vertex_pmi_example() {
        // v1..v8 as 0..7, leaders v4 and v6
        let g = Graph::new(8, [(3, 6), (6, 5), (3, 4), (6, 7), (6, 1), (4, 2), (7, 2), (0, 5)]).unwrap();
        let l = leaders(&g, &[3, 5]);
        let dl = dl_matrix(&g, &l).unwrap();
        for (v, row) in [(3, [0, 2]), (5, [2, 0]), (6, [1, 1]), (4, [1, 3]), (7, [2, 2]), (2, [2, 3]), (1, [2, 2])] {
            assert_eq!(dl.row(v), &row[..], "v{}", v + 1);
        }
        let vectors: Vec<Vec<u32>> = [3, 5, 6, 4, 7, 2].iter().map(|&v| dl.row(v).to_vec()).collect();
        assert_eq!(find_pi(&vectors), Some(vec![0, 1, 1, 0, 1, 0]));
        assert_eq!(longest_pmi_bruteforce(&g, &l).unwrap().len(), 6);
        assert_eq!(delta(&g, &l).unwrap(), 6);
    }

    #[test]
    fn leaders_alone_form_a_pmi() {
        for seed in 0..20 {
            let g = er_random_graph(15, 0.2, seed).unwrap();
            let l = leaders(&g, &[1, 4, 9]);
            let dl = dl_matrix(&g, &l).unwrap();
            let trivial: Vec<Vec<u32>> = [1, 4, 9].iter().map(|&v| dl.row(v).to_vec()).collect();
            assert_eq!(first_violation(&trivial, &[0, 1, 2]), None);
            let seq = longest_pmi_greedy(&g, &l).unwrap();
            assert!(seq.len() >= 3);
            seq.check_against(&dl_matrix(&g, &l).unwrap()).unwrap();
        }
    }

    #[test]
    fn bruteforce_small_cases() {
        let g = Graph::empty(3);
        assert_eq!(longest_pmi_bruteforce(&g, &leaders(&g, &[0])).unwrap().len(), 1);
        let p3 = Graph::path(3);
        let seq = longest_pmi_bruteforce(&p3, &leaders(&p3, &[0])).unwrap();
        assert_eq!(seq.vertices(), vec![0, 1, 2]);
        assert!(matches!(
            longest_pmi_bruteforce(&Graph::path(13), &leaders(&Graph::path(13), &[0])),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn path_backbone_keeps_both_edges() {
        let p3 = Graph::path(3);
        let l = leaders(&p3, &[0]);
        let seq = longest_pmi_greedy(&p3, &l).unwrap();
        assert_eq!(seq.len(), 3);
        for policy in [PathPolicy::Reuse, PathPolicy::FirstFound] {
            let b = distance_backbone(&p3, &l, &seq, policy).unwrap();
            assert_eq!(b.edges, BTreeSet::from([(0, 1), (1, 2)]));
        }
    }

    #[test]
    fn all_leaders_need_no_edges() {
        let g = Graph::complete(4);
        let l = leaders(&g, &[0, 1, 2, 3]);
        let seq = longest_pmi_greedy(&g, &l).unwrap();
        assert_eq!(seq.len(), 4);
        assert!(distance_backbone(&g, &l, &seq, PathPolicy::Reuse).unwrap().is_empty());
    }

    #[test]
    fn backbone_rejects_foreign_sequences() {
        let p3 = Graph::path(3);
        let l = leaders(&p3, &[0]);
        let bad = PmiSequence {
            entries: vec![PmiEntry { vertex: 2, vector: vec![1], pi: 0 }],
        };
        assert!(matches!(
            distance_backbone(&p3, &l, &bad, PathPolicy::Reuse),
            Err(Error::InvalidPmi { index: 0, .. })
        ));
    }

    #[test]
    fn reuse_policy_prefers_kept_edges() {
        // C4 from leader 0: vertex 2 is reachable via 1 or 3
        let c4 = Graph::cycle(4);
        let dist = c4.bfs_distances(0).unwrap().0;
        let kept = BTreeSet::from([(0, 3)]);
        assert_eq!(reuse_path(&c4, &dist, 2, &kept), vec![(2, 3), (0, 3)]);
        assert_eq!(reuse_path(&c4, &dist, 2, &BTreeSet::new()), vec![(1, 2), (0, 1)]);
        assert_eq!(first_found_path(&c4, &dist, 0, 2), vec![(1, 2), (0, 1)]);
    }

    #[test]
    fn edge_bound_examples() {
        assert_eq!(backbone_edge_bounds(35, 12).unwrap(), EdgeBounds { lower: 23, upper: 342 });
        assert_eq!(choose2(35 - 12 + 1), 276);
        assert_eq!(backbone_edge_bounds(5, 5).unwrap(), EdgeBounds { lower: 0, upper: 10 });
        assert_eq!(backbone_edge_bounds(4, 2).unwrap(), EdgeBounds { lower: 2, upper: 4 });
        assert!(backbone_edge_bounds(3, 0).is_err());
        assert!(backbone_edge_bounds(2, 3).is_err());
    }
}
