//! Exact controllability rank of sampled pattern matrices over GF(P).
//!
//! A sample draws a symmetric matrix with the graph's off-diagonal zero
//! pattern (nonzero residues on edges, zero elsewhere) and an arbitrary
//! diagonal. The rank of `[H, MH, M²H, ..]` is computed by growing a
//! row-reduced basis of the Krylov space until a multiplication round adds
//! nothing.
//!
//! The zero forcing bound ζ ≤ rank holds for every matrix in the family
//! over any field. The distance bound δ ≤ rank holds for generic weights:
//! the witness minor is a sum over shortest paths of weight products, which
//! specific weights can cancel. With P = 2³¹ - 1 a random sample cancels
//! with probability on the order of n²/P.

use rand::Rng as _;

use crate::distance;
use crate::error::{Error, Result};
use crate::graph::{rng_from_seed, Graph, LeaderSet};
use crate::zero_forcing;

/// 2³¹ - 1.
pub const PRIME: u64 = 2_147_483_647;

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

#[inline]
fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn inverse(a: u64) -> u64 {
    // Fermat: a^(P-2)
    let mut result = 1;
    let mut base = a % PRIME;
    let mut exp = PRIME - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul(result, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    result
}

/// Symmetric `n × n` matrix of residues mod [`PRIME`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternMatrix {
    n: usize,
    data: Vec<u64>,
}

impl PatternMatrix {
    /// Builds the matrix from explicit entries. Off-diagonal entries must be
    /// nonzero exactly on the edges of `g`; entries are reduced mod P.
    pub fn from_weights(g: &Graph, diagonal: &[u64], edge_weights: &[u64]) -> Result<Self> {
        let n = g.n();
        if diagonal.len() != n || edge_weights.len() != g.edge_count() {
            return Err(Error::InvalidArguments(format!(
                "expected {n} diagonal entries and {} edge weights",
                g.edge_count()
            )));
        }
        let mut data = vec![0; n * n];
        for (i, &d) in diagonal.iter().enumerate() {
            data[i * n + i] = d % PRIME;
        }
        for ((u, v), &w) in g.edges().zip(edge_weights) {
            let w = w % PRIME;
            if w == 0 {
                return Err(Error::InvalidArguments(format!("edge ({u}, {v}) has weight 0 mod P")));
            }
            data[u * n + v] = w;
            data[v * n + u] = w;
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    fn apply(&self, x: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|i| {
                let row = &self.data[i * self.n..(i + 1) * self.n];
                row.iter()
                    .zip(x)
                    .filter(|(&a, &b)| a != 0 && b != 0)
                    .fold(0, |acc, (&a, &b)| (acc + mul(a, b)) % PRIME)
            })
            .collect()
    }
}

/// Draws `M` from the pattern family: diagonal uniform in `[0, P)`, then
/// edge weights uniform in `[1, P)` in canonical edge order.
pub fn sample_pattern_matrix(g: &Graph, seed: u64) -> PatternMatrix {
    let mut rng = rng_from_seed(seed);
    let diagonal: Vec<u64> = (0..g.n()).map(|_| rng.gen_range(0..PRIME)).collect();
    let weights: Vec<u64> = (0..g.edge_count()).map(|_| rng.gen_range(1..PRIME)).collect();
    PatternMatrix::from_weights(g, &diagonal, &weights).expect("sampled weights are in range")
}

/// `n × m` leader-selection matrix: column `j` is the unit vector of `l_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputMatrix {
    n: usize,
    rows: Vec<usize>,
}

impl InputMatrix {
    pub fn from_leaders(leaders: &LeaderSet) -> Self {
        Self {
            n: leaders.n(),
            rows: leaders.as_slice().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        let mut c = vec![0; self.n];
        c[self.rows[j]] = 1;
        c
    }
}

/// Row-reduced basis; basis vector `k` is 1 at `pivots[k]` and every later
/// vector is 0 there.
struct EchelonBasis {
    vectors: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    fn new() -> Self {
        Self { vectors: Vec::new(), pivots: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Reduces `x` against the basis and keeps it if independent.
    fn insert(&mut self, mut x: Vec<u64>) -> bool {
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            let f = x[p];
            if f != 0 {
                for (xi, &bi) in x.iter_mut().zip(b) {
                    if bi != 0 {
                        *xi = sub(*xi, mul(f, bi));
                    }
                }
            }
        }
        let Some(p) = x.iter().position(|&v| v != 0) else {
            return false;
        };
        let inv = inverse(x[p]);
        for xi in &mut x {
            *xi = mul(*xi, inv);
        }
        self.vectors.push(x);
        self.pivots.push(p);
        true
    }
}

/// Exact rank of `[H, MH, M²H, .., M^(n-1)H]` over GF(P).
pub fn controllability_rank(m: &PatternMatrix, h: &InputMatrix) -> Result<usize> {
    if m.n() != h.n() {
        return Err(Error::SizeMismatch { left: m.n(), right: h.n() });
    }
    let mut basis = EchelonBasis::new();
    let mut frontier = Vec::new();
    for j in 0..h.m() {
        if basis.insert(h.column(j)) {
            frontier.push(basis.rank() - 1);
        }
    }
    // M times the newly added (reduced) vectors spans the next Krylov block
    // modulo the current space
    while !frontier.is_empty() && basis.rank() < m.n() {
        let images: Vec<Vec<u64>> = frontier.iter().map(|&k| m.apply(&basis.vectors[k])).collect();
        frontier.clear();
        for y in images {
            if basis.insert(y) {
                frontier.push(basis.rank() - 1);
            }
        }
    }
    Ok(basis.rank())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankSample {
    pub seed: u64,
    pub rank: usize,
}

pub fn sample_rank(g: &Graph, leaders: &LeaderSet, seed: u64) -> Result<RankSample> {
    leaders.check_graph(g)?;
    let rank = controllability_rank(&sample_pattern_matrix(g, seed), &InputMatrix::from_leaders(leaders))?;
    Ok(RankSample { seed, rank })
}

/// Per-trial seeds derived from one master seed.
pub fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = rng_from_seed(seed);
    (0..trials).map(|_| rng.gen()).collect()
}

pub fn sample_ranks(g: &Graph, leaders: &LeaderSet, trials: usize, seed: u64) -> Result<Vec<RankSample>> {
    trial_seeds(seed, trials)
        .into_iter()
        .map(|s| sample_rank(g, leaders, s))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaBounds {
    /// max(ζ, δ).
    pub lower: usize,
    /// Smallest sampled rank; γ is at most this.
    pub upper_estimate: usize,
}

pub fn gamma_bounds(g: &Graph, leaders: &LeaderSet, trials: usize, seed: u64) -> Result<GammaBounds> {
    if trials == 0 {
        return Err(Error::InvalidArguments("gamma_bounds needs at least one trial".into()));
    }
    let lower = zero_forcing::zeta(g, leaders)?.max(distance::delta(g, leaders)?);
    let upper_estimate = sample_ranks(g, leaders, trials, seed)?
        .iter()
        .map(|s| s.rank)
        .min()
        .unwrap();
    Ok(GammaBounds { lower, upper_estimate })
}
